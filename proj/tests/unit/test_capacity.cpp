#include <bit>

#include "doctest.h"
#include "fixtures.hpp"
#include "generators.hpp"
#include "lowprob/errors.hpp"
#include "oracles.hpp"

using namespace lowprob;
using fixture::ev;

namespace {

Rational q(long p, long d) { return Rational(p, d); }

bool has_pair(const ValidationReport& r, Violation::Kind k, const Event& a, const Event& b) {
  for (const auto& v : r.violations)
    if (v.kind == k && ((v.first == a && v.second == b) || (v.first == b && v.second == a))) return true;
  return false;
}

}  // namespace

TEST_CASE("validation") {
  const auto f1 = fixture::coins_type1();
  CHECK(validate_lower(f1.function()).ok());
  CHECK(validate_lower(LowerProbability::of(fixture::correlated()).function()).ok());

  SetFunction bad = f1.function();
  const Frame& f = f1.frame();
  bad.set(ev(f, {"h1h2"}), q(5, 8));
  const auto r = validate_lower(bad);
  CHECK_FALSE(r.ok());
  CHECK(r.has(Violation::Kind::Monotonicity));
  CHECK(has_pair(r, Violation::Kind::Monotonicity, ev(f, {"h1h2"}), ev(f, {"h1h2", "h1t2"})));

  SetFunction unnormal = f1.function();
  unnormal.set(f.full_event(), q(1, 2));
  CHECK(validate_lower(unnormal).has(Violation::Kind::Normalization));
  CHECK_THROWS_AS(LowerProbability::from(unnormal), std::invalid_argument);

  SetFunction negative(Frame({"a", "b"}));
  negative.set(Event(1, 2), q(-1, 4));
  negative.set(Event(3, 2), Rational(1));
  CHECK(validate_lower(negative).has(Violation::Kind::Range));
}

TEST_CASE("validation samples above twelve outcomes") {
  const auto low = LowerProbability::vacuous(gen::frame(13));
  const auto r = validate_lower(low.function());
  CHECK(r.ok());
  CHECK_FALSE(r.exhaustive);
  CHECK(r.pair_coverage > 0.0);
  CHECK(r.pair_coverage < 1.0);
}

TEST_CASE("upper by conjugacy") {
  const auto f1 = fixture::coins_type1();
  const auto f4 = fixture::coins_type2();
  const Frame& f = f1.frame();
  CHECK(upper(f1, ev(f, {"h1h2"})) == q(9, 16));
  CHECK(upper(f1, f.full_event()) == Rational(1));
  CHECK(upper(f4, ev(f, {"h1h2", "t1t2"})) == q(7, 8));
  for (const auto& e : all_events(f)) CHECK(f1(e) + f1.upper(e.complement()) == Rational(1));
}

TEST_CASE("Möbius masses of the coin tables") {
  const auto f1 = fixture::coins_type1();
  const auto f4 = fixture::coins_type2();
  const Frame& f = f1.frame();
  const auto m1 = mobius(f1);
  CHECK(m1.function() == oracle::naive_mobius(f1.function()));
  CHECK(m1(ev(f, {"h1h2", "t1t2"})) == q(1, 4));
  CHECK(m1(ev(f, {"h1t2", "t1h2"})) == q(1, 4));
  CHECK(m1(ev(f, {"h1h2"})) == q(1, 16));
  CHECK(m1(ev(f, {"h1h2", "h1t2"})) == q(1, 8));
  CHECK(m1(ev(f, {"h1h2", "h1t2", "t1h2"})) == q(-1, 4));
  CHECK(m1(f.full_event()) == q(3, 4));
  CHECK(m1.total() == Rational(1));

  const auto m4 = mobius(f4);
  CHECK(m4.function() == oracle::naive_mobius(f4.function()));
  for (const char* s : {"h1h2", "h1t2", "t1h2", "t1t2"}) CHECK(m4(ev(f, {s})) == q(1, 16));
  CHECK(m4(ev(f, {"h1h2", "h1t2"})) == q(1, 8));
  CHECK(m4(ev(f, {"t1h2", "t1t2"})) == q(1, 8));
  CHECK(m4(ev(f, {"h1h2", "t1h2"})) == q(1, 8));
  CHECK(m4(ev(f, {"h1t2", "t1t2"})) == q(1, 8));
  CHECK(m4(f.full_event()) == q(1, 4));
  CHECK(focal_elements(m4).size() == 9);

  const auto uniform = LowerProbability::of(fixture::dist(f, {q(1, 4), q(1, 4), q(1, 4), q(1, 4)}));
  const auto mu = focal_elements(mobius(uniform));
  REQUIRE(mu.size() == 4);
  for (const auto& [e, v] : mu) {
    CHECK(e.cardinality() == 1);
    CHECK(v == q(1, 4));
  }
}

TEST_CASE("inverse Möbius") {
  const auto monty = fixture::monty_hall();
  const Frame& f = monty.frame();
  CHECK(monty(ev(f, {"134", "143"})) == q(1, 12));
  CHECK(monty(ev(f, {"234", "243", "324", "342", "423", "432"})) == q(3, 4));
  const auto focal = focal_elements(mobius(monty));
  CHECK(focal.size() == 6);

  SetFunction omega_only(Frame({"a", "b", "c"}));
  omega_only.set(Event(7, 3), Rational(1));
  CHECK(LowerProbability::unchecked(inverse_mobius(MobiusMass(omega_only))) ==
        LowerProbability::vacuous(Frame({"a", "b", "c"})));

  CHECK(inverse_mobius(mobius(fixture::coins_type2())) == fixture::coins_type2().function());
}

TEST_CASE("random Möbius round trips agree with the naive transform") {
  gen::Rng rng(7);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 1 + i % 6;
    const auto sf = gen::set_function(rng, n);
    const auto m = mobius(sf);
    CHECK(m.function() == oracle::naive_mobius(sf));
    CHECK(inverse_mobius(m) == sf);
    CHECK(inverse_mobius(m) == oracle::naive_zeta(m.function()));
    CHECK(mobius(sf, Execution::Serial) == m);
  }
}

TEST_CASE("2-monotonicity") {
  const auto f1 = fixture::coins_type1();
  const Frame& f = f1.frame();
  const auto r = is_2monotone(f1);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness);
  const auto [a, b] = *r.witness;
  CHECK(f1(a) + f1(b) > f1(a & b) + f1(a | b));
  const Event sa = ev(f, {"h1h2", "t1t2"}), sb = ev(f, {"h1h2", "h1t2"});
  CHECK(f1(sa) + f1(sb) > f1(sa & sb) + f1(sa | sb));
  CHECK(is_2monotone(f1, Execution::Serial).witness == r.witness);

  CHECK(is_2monotone(fixture::coins_type2()).holds);
  CHECK(is_2monotone(LowerProbability::of(fixture::correlated())).holds);
  CHECK_THROWS_AS(is_2monotone(LowerProbability::vacuous(gen::frame(9))), TooLarge);
}

TEST_CASE("belief functions") {
  CHECK(is_belief_function(fixture::monty_hall()));
  CHECK_FALSE(is_belief_function(fixture::coins_type1()));
  CHECK(is_belief_function(LowerProbability::vacuous(Frame({"a", "b", "c"}))));
  CHECK(certify_2monotone(fixture::monty_hall()) == true);
  CHECK(certify_2monotone(fixture::coins_type1()) == false);
  gen::Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const auto bel = gen::belief(rng, 1 + i % 5);
    CHECK(is_belief_function(bel));
    CHECK(is_2monotone(bel).holds);
    CHECK(oracle::naive_2monotone(bel));
  }
  // Not a belief function and too large for the scan: undecided.
  SetFunction sf(gen::frame(9));
  for (std::uint32_t m = 0; m < sf.size(); ++m) {
    const int c = std::popcount(m);
    sf.mutable_values()[m] = c == 9 ? Rational(1) : (c >= 7 ? Rational(c - 6, 4) : Rational(0));
  }
  const auto odd = LowerProbability::from(sf);
  CHECK_FALSE(is_belief_function(odd));
  CHECK_FALSE(certify_2monotone(odd).has_value());
}

TEST_CASE("dominance") {
  const auto f1 = fixture::coins_type1();
  const auto f4 = fixture::coins_type2();
  CHECK(dominates(f1, f4));
  CHECK_FALSE(dominates(f4, f1));
  CHECK(dominates(f4, LowerProbability::vacuous(f4.frame())));
  CHECK_THROWS_AS(dominates(f1, LowerProbability::vacuous(Frame({"x"}))), FrameMismatch);
}
