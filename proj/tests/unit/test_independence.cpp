#include "doctest.h"
#include "fixtures.hpp"
#include "generators.hpp"
#include "lowprob/errors.hpp"
#include "oracles.hpp"

using namespace lowprob;
using fixture::ev;

namespace {

Rational q(long p, long d) { return Rational(p, d); }
Interval iv(Rational lo, Rational hi) { return {std::move(lo), std::move(hi)}; }

LowerProbability point(const Frame& f, std::vector<Rational> m) { return LowerProbability::of(Distribution(f, m)); }

}  // namespace

TEST_CASE("product frame") {
  const ProductFrame split(Frame({"a", "b", "c"}), Frame({"x", "y"}));
  CHECK(split.joint().labels() == std::vector<std::string>{"ax", "ay", "bx", "by", "cx", "cy"});
  const Event r = split.rectangle(Event(0b101, 3), Event(0b10, 2));
  CHECK(r == split.joint().event_of({"ay", "cy"}));
  CHECK(split.is_rectangular(r));
  CHECK_FALSE(split.is_rectangular(split.joint().event_of({"ax", "by"})));
  CHECK(split.project_left(r) == Event(0b101, 3));
  CHECK(split.left_cylinder(Event(1, 3)) == split.joint().event_of({"ax", "ay"}));
  CHECK(split.right_cylinder(Event(1, 2)) == split.joint().event_of({"ax", "bx", "cx"}));
  CHECK(split.is_rectangular(split.joint().empty_event()));
  CHECK_THROWS_AS(ProductFrame(gen::frame(5, "l"), gen::frame(5, "r")), TooLarge);
}

TEST_CASE("products of the coin marginals") {
  const auto split = fixture::coin_split();
  const auto f1 = fixture::coins_type1();
  const auto f4 = fixture::coins_type2();
  const Frame& f = f1.frame();
  const Rational l1(1, 16), u1(9, 16), lc(1, 4), uc(3, 4), l3(7, 16), u3(15, 16);
  for (const auto& e : all_events(f)) {
    const std::size_t c = e.cardinality();
    if (c == 1) {
      CHECK(prior_interval(f1, e) == iv(l1, u1));
      CHECK(prior_interval(f4, e) == iv(l1, u1));
    } else if (c == 3) {
      CHECK(prior_interval(f1, e) == iv(l3, u3));
      CHECK(prior_interval(f4, e) == iv(l3, u3));
    } else if (c == 2 && split.is_rectangular(e)) {
      CHECK(prior_interval(f1, e) == iv(lc, uc));
      CHECK(prior_interval(f4, e) == iv(lc, uc));
    } else if (c == 2) {
      CHECK(prior_interval(f1, e) == iv(q(3, 8), q(5, 8)));
      CHECK(prior_interval(f4, e) == iv(q(1, 8), q(7, 8)));
    }
  }
  CHECK(product_type1_envelope(split, fixture::coin1(), fixture::coin2(), Execution::Serial) == f1);
  CHECK(product_type2(split, fixture::coin1(), fixture::coin2(), Execution::Serial) == f4);
  CHECK(product(ProductKind::Type1, split, fixture::coin1(), fixture::coin2()) == f1);
  CHECK_THROWS_AS(product_type2(split, fixture::coin2(), fixture::coin1()), FrameMismatch);
}

TEST_CASE("degenerate products") {
  const ProductFrame split(Frame({"a", "b"}), Frame({"x", "y", "z"}));
  const auto pa = point(split.left(), {q(1, 3), q(2, 3)});
  const auto pb = point(split.right(), {q(1, 2), q(1, 4), q(1, 4)});
  const auto t1 = product_type1_envelope(split, pa, pb);
  const auto t2 = product_type2(split, pa, pb);
  CHECK(t1 == t2);
  CHECK(t1(split.joint().event_of({"ay"})) == q(1, 12));

  const auto va = LowerProbability::vacuous(split.left());
  const auto vb = LowerProbability::vacuous(split.right());
  const auto vv = product_type1_envelope(split, va, vb);
  for (const auto& e : all_events(split.joint())) {
    if (e.is_empty() || e.is_full()) continue;
    CHECK(vv(e) == Rational(0));
  }
  // Vacuous on the left: rectangles get lowB(B') only when A' is everything.
  const auto w = product_type2(split, va, pb);
  for (std::uint32_t a = 1; a < 4; ++a)
    for (std::uint32_t b = 1; b < 8; ++b) {
      const Event ea(a, 2), eb(b, 3);
      CHECK(w(split.rectangle(ea, eb)) == (ea.is_full() ? pb(eb) : Rational(0)));
    }
}

TEST_CASE("type-1 product set membership") {
  const auto split = fixture::coin_split();
  auto d = [&](long a, long b, long c, long e) {
    return Distribution(split.joint(), {q(a, 16), q(b, 16), q(c, 16), q(e, 16)});
  };
  CHECK(in_type1_set(d(1, 3, 3, 9), split, fixture::coin1(), fixture::coin2()));
  CHECK(in_type1_set(d(9, 3, 3, 1), split, fixture::coin1(), fixture::coin2()));
  CHECK_FALSE(in_type1_set(d(5, 3, 3, 5), split, fixture::coin1(), fixture::coin2()));
  // A product whose marginal leaves [1/4, 3/4].
  CHECK_FALSE(in_type1_set(Distribution(split.joint(), {q(1, 16), q(1, 16), q(7, 16), q(7, 16)}), split,
                           fixture::coin1(), fixture::coin2()));
}

TEST_CASE("irrelevance, factorization, weak independence") {
  const auto f1 = fixture::coins_type1();
  const auto f4 = fixture::coins_type2();
  const Frame& f = f1.frame();
  const Event h1 = ev(f, {"h1h2", "h1t2"}), h2 = ev(f, {"h1h2", "t1h2"});
  const auto irr = check_irrelevance(f1, h2, h1);
  CHECK_FALSE(irr.holds());
  CHECK(irr.prior == iv(q(1, 4), q(3, 4)));
  CHECK(irr.posterior == iv(q(1, 8), q(7, 8)));
  CHECK(check_factorization(f1, h2, h1).holds());
  CHECK(check_factorization(f4, h2, h1).holds());
  CHECK_FALSE(check_factorization(f1, ev(f, {"h1h2", "t1t2"}), h1).holds());

  const auto pp = point(f, {q(1, 6), q(1, 3), q(1, 6), q(1, 3)});
  CHECK(check_irrelevance(pp, h2, h1).holds());

  const auto vac = LowerProbability::vacuous(Frame({"a", "b", "c"}));
  CHECK(check_irrelevance(vac, Event(0b011, 3), Event(0b110, 3)).holds());
  CHECK_THROWS_AS(check_irrelevance(point(f, {Rational(1), Rational(0), Rational(0), Rational(0)}), h2,
                                    ev(f, {"t1t2"})),
                  UndefinedConditional);

  CHECK(check_weak_independence(f1, h2, h1).interpreted);
  CHECK(check_weak_independence(f4, h2, h1).interpreted);
  const auto omega = check_weak_independence(f4, h2, f.full_event());
  CHECK(omega.interpreted);
  CHECK(omega.prior == omega.posterior);
  CHECK(check_weak_independence(f1, h2, h1).literal);  // 1/8 <= 1/4
}

TEST_CASE("impossibility diagnostic") {
  const auto f4 = fixture::coins_type2();
  const Frame& f = f4.frame();
  const Event h1 = ev(f, {"h1h2", "h1t2"}), h2 = ev(f, {"h1h2", "t1h2"});
  const auto r = independence_diagnostic(f4, h2, h1);
  CHECK(r.impossibility_conditions == std::array<bool, 4>{false, true, true, true});
  CHECK_FALSE(r.all_conditions_hold);
  CHECK(r.two_monotone_certified);

  const auto pp = point(f, {q(1, 6), q(1, 3), q(1, 6), q(1, 3)});
  const auto rp = independence_diagnostic(pp, h2, h1);
  CHECK(rp.impossibility_conditions[0]);
  CHECK(rp.impossibility_conditions[1]);
  CHECK_FALSE(rp.impossibility_conditions[3]);
  CHECK_FALSE(rp.all_conditions_hold);

  const auto vac = LowerProbability::vacuous(Frame({"a", "b", "c"}));
  const auto rv = independence_diagnostic(vac, Event(0b011, 3), Event(0b110, 3));
  CHECK(rv.impossibility_conditions == std::array<bool, 4>{true, true, false, true});
}

TEST_CASE("dilation witnesses") {
  const auto f1 = fixture::coins_type1();
  const Frame& f = f1.frame();
  const Event h1 = ev(f, {"h1h2", "h1t2"}), h2 = ev(f, {"h1h2", "t1h2"});
  const Distribution printed(f, {q(1, 16), q(3, 8), q(3, 16), q(3, 8)});
  CHECK(is_lower_dilation_witness(f1, h2, h1, printed));
  const auto d = dilation_witness(f1, h2, h1);
  REQUIRE(d.lower_witness);
  CHECK(is_lower_dilation_witness(f1, h2, h1, *d.lower_witness));
  REQUIRE(d.upper_witness);
  CHECK(is_upper_dilation_witness(f1, h2, h1, *d.upper_witness));
  CHECK(d.complete);
  CHECK(d.method == "vertices");
  CHECK(d.posterior.lo == q(1, 8));
  CHECK(d.prior.lo == q(1, 4));

  const auto f4 = fixture::coins_type2();
  const auto d4 = dilation_witness(f4, h2, h1);
  REQUIRE(d4.lower_witness);
  CHECK(d4.posterior.lo == q(1, 10));

  const auto pp = point(f, {q(1, 4), q(1, 4), q(1, 4), q(1, 4)});
  const auto dp = dilation_witness(pp, h2, h1);
  CHECK_FALSE(dp.lower_witness);
  CHECK_FALSE(dp.upper_witness);
}

TEST_CASE("type-1 dominates type-2; both keep the marginals") {
  gen::Rng rng(8);
  int cases = 0;
  for (int i = 0; i < 60; ++i) {
    const std::size_t na = 2 + i % 2, nb = 2 + (i / 2) % 2;
    const auto la = gen::intervals(rng, na, "a");
    const auto lb = gen::intervals(rng, nb, "b");
    const ProductFrame split(la.frame(), lb.frame());
    const auto t1 = product_type1_envelope(split, la, lb);
    const auto t2 = product_type2(split, la, lb);
    CHECK(dominates(t1, t2));
    CHECK(validate_lower(t1.function()).ok());
    CHECK(validate_lower(t2.function()).ok());
    for (std::uint32_t a = 1; a < (1U << na); ++a)
      for (std::uint32_t b = 1; b < (1U << nb); ++b) {
        const Event r = split.rectangle(Event(a, na), Event(b, nb));
        CHECK(t1(r) == t2(r));
      }
    for (const auto& a : all_events(split.left())) {
      CHECK(t1(split.left_cylinder(a)) == la(a));
      CHECK(t2(split.left_cylinder(a)) == la(a));
    }
    for (const auto& b : all_events(split.right())) CHECK(t2(split.right_cylinder(b)) == lb(b));
    ++cases;
  }
  CHECK(cases == 60);
}
