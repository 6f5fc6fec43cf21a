#pragma once

#include "lowprob/independence.hpp"

/// Inputs of the worked examples. Expected outputs live in the tests.
namespace fixture {

using namespace lowprob;

/// low({h}) = low({t}) = l on a two-outcome coin.
LowerProbability coin(const std::string& h, const std::string& t, const Rational& l);

/// {h1, t1} x {h2, t2}; joint order h1h2, h1t2, t1h2, t1t2.
ProductFrame coin_split();
LowerProbability coin1(const Rational& l = Rational(1, 4));
LowerProbability coin2(const Rational& l = Rational(1, 4));

/// Type-1 product of the 1/4 coins.
LowerProbability coins_type1();
/// Type-2 product of the 1/4 coins.
LowerProbability coins_type2();

/// 7/16, 1/16, 1/16, 7/16
Distribution correlated();
/// 1/16, 7/16, 7/16, 1/16
Distribution anticorrelated();

/// Four-curtain Monty Hall frame (outcome ijk) and its lower probability.
Frame monty_frame();
LowerProbability monty_hall();

Event ev(const Frame& f, std::initializer_list<std::string_view> labels);
Distribution dist(const Frame& f, std::vector<Rational> m);

}  // namespace fixture
