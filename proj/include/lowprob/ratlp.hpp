#pragma once

#include <span>
#include <vector>

#include "lowprob/kernels.hpp"
#include "lowprob/rational.hpp"
#include "lowprob/set_function.hpp"

/// Exact rational linear and linear-fractional programming.
///
/// Variables are free unless a constraint row bounds them. The solver runs a
/// two-phase tableau simplex with Bland's rule on the dual program, whose
/// tableau has one row per primal variable; the primal programs here have few
/// variables and up to a few thousand rows, so this keeps pivots cheap. The
/// primal witness is recovered from the optimal dual basis and is a vertex.
namespace lowprob::lp {

using kernels::Execution;

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class Sense { Minimize, Maximize };
enum class Status { Optimal, Infeasible, Unbounded };

const char* to_string(Status s);

struct Constraint {
  std::vector<Rational> coefficients;
  Relation relation;
  Rational rhs;
};

struct LinearProgram {
  std::size_t variable_count = 0;
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;
  Sense sense = Sense::Minimize;
};

struct OptResult {
  Status status = Status::Infeasible;
  Rational value;                  // meaningful when Optimal
  std::vector<Rational> witness;   // meaningful when Optimal
};

/// Throws std::invalid_argument when rows and variable count disagree, and
/// std::domain_error when the feasible region contains a line (no vertex).
OptResult solve(const LinearProgram& program, Execution exec = Execution::Parallel);

/// Optimizes numerator.x / denominator.x over feasible x with denominator.x > 0
/// through the scale-variable transform y = t x, t >= 0, denominator.y = 1.
/// Status Infeasible means no feasible point has a positive denominator. The
/// feasible region is expected to be bounded.
OptResult solve_fractional(std::span<const Rational> numerator, std::span<const Rational> denominator,
                           const std::vector<Constraint>& constraints, Sense sense,
                           Execution exec = Execution::Parallel);

/// p(w) >= 0 for every outcome, sum p = 1, and p(A) >= low(A) for every
/// event with 0 < |A| < n, in that order (events in canonical order).
std::vector<Constraint> event_constraints(const LowerProbability& low);

/// Indicator coefficients of an event over the outcomes.
std::vector<Rational> indicator(const Event& e);

/// Exact check of a point against a constraint list.
bool satisfies(const std::vector<Constraint>& constraints, std::span<const Rational> x);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace lowprob::lp
