#include <numeric>

#include "doctest.h"
#include "fixtures.hpp"
#include "generators.hpp"
#include "lowprob/abstraction.hpp"
#include "oracles.hpp"

using namespace lowprob;
using fixture::ev;

namespace {

Rational q(long p, long d) { return Rational(p, d); }

LowerProbability marg(const Frame& f, const Rational& h, const Rational& t) {
  SetFunction sf(f);
  sf.set(Event(1, 2), h);
  sf.set(Event(2, 2), t);
  sf.set(Event(3, 2), Rational(1));
  return LowerProbability::from(std::move(sf));
}

}  // namespace

TEST_CASE("marginal restriction") {
  const auto split = fixture::coin_split();
  for (const auto& low : {fixture::coins_type1(), fixture::coins_type2()}) {
    CHECK(marginal_restriction(low, split, Side::Left) == fixture::coin1());
    CHECK(marginal_restriction(low, split, Side::Right) == fixture::coin2());
  }
  const auto pstar = LowerProbability::of(
      Distribution(split.joint(), {q(1, 6), q(1, 3), q(1, 6), q(1, 3)}));
  CHECK(marginal_restriction(pstar, split, Side::Left) ==
        LowerProbability::of(Distribution(split.left(), {q(1, 2), q(1, 2)})));
  CHECK(marginal_restriction(pstar, split, Side::Right) ==
        LowerProbability::of(Distribution(split.right(), {q(1, 3), q(2, 3)})));
}

TEST_CASE("abstraction checks") {
  const auto split = fixture::coin_split();
  CHECK(is_abstraction(fixture::coins_type2(), fixture::correlated(), split).holds());
  CHECK(is_abstraction(fixture::coins_type2(), fixture::anticorrelated(), split).holds());
  const auto bad = is_abstraction(fixture::coins_type1(), fixture::correlated(), split);
  CHECK_FALSE(bad.consistent);
  CHECK_FALSE(bad.factorizes);
  REQUIRE(bad.factorization_failure);
  CHECK_FALSE(split.is_rectangular(*bad.factorization_failure));
}

TEST_CASE("building candidates") {
  const auto split = fixture::coin_split();
  const auto c = build_abstraction(fixture::correlated(), split, fixture::coin1(), fixture::coin2());
  CHECK(c.valid);
  CHECK(c.joint == fixture::coins_type2());

  const auto half = build_abstraction(fixture::correlated(), split, fixture::coin1(q(1, 2)), fixture::coin2(q(1, 2)));
  CHECK_FALSE(half.valid);
  REQUIRE(half.violating_event);
  CHECK(*half.violating_event == ev(split.joint(), {"h1t2"}));
  for (const auto& e : all_events(split.joint()))
    if (e.cardinality() == 1) CHECK(half.joint(e) == q(1, 4));

  const Distribution prod(split.joint(), {q(1, 6), q(1, 3), q(1, 6), q(1, 3)});
  const auto exact = build_abstraction(prod, split, LowerProbability::of(Distribution(split.left(), {q(1, 2), q(1, 2)})),
                                       LowerProbability::of(Distribution(split.right(), {q(1, 3), q(2, 3)})));
  CHECK(exact.valid);
  CHECK(exact.joint == LowerProbability::of(prod));
  CHECK(local_propriety_check(exact, split, q(1, 16)).locally_proper);
}

TEST_CASE("local propriety") {
  const auto split = fixture::coin_split();
  const auto fig4 = build_abstraction(fixture::correlated(), split, fixture::coin1(), fixture::coin2());
  const auto r = local_propriety_check(fig4, split, q(1, 16));
  CHECK(r.locally_proper);
  CHECK_FALSE(r.dominating);
  CHECK(local_propriety_check(fig4, split, q(1, 16), Execution::Serial).locally_proper);
  CHECK_THROWS_AS(local_propriety_check(fig4, split, Rational(0)), std::invalid_argument);

  // The blocking event for raising low({h1}) to 5/16.
  const auto raised = build_abstraction(fixture::correlated(), split, marg(split.left(), q(5, 16), q(1, 4)), fixture::coin2());
  CHECK_FALSE(raised.valid);
  REQUIRE(raised.violating_event);
  CHECK(*raised.violating_event == ev(split.joint(), {"h1t2"}));
  CHECK(raised.joint(*raised.violating_event) == q(5, 64));

  const auto weak = build_abstraction(fixture::correlated(), split, fixture::coin1(q(1, 8)), fixture::coin2(q(1, 8)));
  CHECK(weak.valid);
  const auto rw = local_propriety_check(weak, split, q(1, 8));
  CHECK_FALSE(rw.locally_proper);
  REQUIRE(rw.dominating);
  CHECK(rw.dominating->valid);
  CHECK(dominates(rw.dominating->joint, weak.joint));
  CHECK(dominates(fig4.joint, rw.dominating->joint));
}

TEST_CASE("abstractions are not unique") {
  const auto split = fixture::coin_split();
  const auto fig4 = build_abstraction(fixture::correlated(), split, fixture::coin1(), fixture::coin2());
  const auto lopsided = build_abstraction(fixture::correlated(), split, marg(split.left(), q(1, 2), Rational(0)),
                                          marg(split.right(), Rational(0), Rational(0)));
  CHECK(fig4.valid);
  CHECK(lopsided.valid);
  CHECK_FALSE(dominates(fig4.joint, lopsided.joint));
  CHECK_FALSE(dominates(lopsided.joint, fig4.joint));
}

TEST_CASE("random candidates") {
  gen::Rng rng(77);
  for (int i = 0; i < 40; ++i) {
    const std::size_t na = 2 + i % 2, nb = 2 + (i / 2) % 2;
    const auto la = gen::intervals(rng, na, "a");
    const auto lb = gen::intervals(rng, nb, "b");
    const ProductFrame split(la.frame(), lb.frame());
    const Distribution pstar(split.joint(), gen::masses(rng, split.joint().size()));
    const auto c = build_abstraction(pstar, split, la, lb);
    const auto check = is_abstraction(c.joint, pstar, split);
    CHECK(check.factorizes);
    CHECK(check.consistent == c.valid);
    if (c.valid)
      for (const auto& e : all_events(split.joint())) {
        CHECK(c.joint(e) <= pstar.prob(e));
        CHECK(pstar.prob(e) <= c.joint.upper(e));
      }
    // Raising one marginal value never lowers the joint.
    const Event a(1 + static_cast<std::uint32_t>(rng() % ((1U << na) - 2)), na);
    const Rational ceiling = raise_ceiling(la, a);
    CHECK(ceiling >= la(a));
    SetFunction sf = la.function();
    sf.set(a, ceiling);
    const auto up = LowerProbability::from(sf);
    CHECK(dominates(product_type2(split, up, lb), c.joint));
  }
}

TEST_CASE("valid candidates are closed to majorization") {
  // Belief-function marginals give a belief-function joint, which must equal
  // its own coherent envelope. Interval marginals are only counted.
  gen::Rng rng(515);
  int closed = 0, valid = 0;
  for (int i = 0; i < 30; ++i) {
    const std::size_t na = 2 + i % 2, nb = 2;
    const bool bel = i % 3 != 0;
    const auto la = bel ? gen::belief(rng, na) : gen::intervals(rng, na, "a");
    const auto lb = bel ? gen::belief(rng, nb) : gen::intervals(rng, nb, "b");
    const ProductFrame split(la.frame(), lb.frame());
    std::vector<std::size_t> oa(na), ob(nb);
    std::iota(oa.begin(), oa.end(), std::size_t{0});
    std::iota(ob.begin(), ob.end(), std::size_t{0});
    const auto pa = permutation_vertex(la, oa), pb = permutation_vertex(lb, ob);
    std::vector<Rational> joint;
    for (std::size_t x = 0; x < na; ++x)
      for (std::size_t y = 0; y < nb; ++y) joint.push_back(pa.prob(Event(1U << x, na)) * pb.prob(Event(1U << y, nb)));
    const auto c = build_abstraction(Distribution(split.joint(), joint), split, la, lb);
    if (!c.valid) continue;
    ++valid;
    const bool same = coherent_envelope(c.joint).function() == c.joint.function();
    closed += same;
    if (bel) CHECK(same);
  }
  CHECK(valid > 0);
  MESSAGE("closed to majorization: " << closed << " of " << valid);
}
