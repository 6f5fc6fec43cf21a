#pragma once

#include <optional>

#include "lowprob/independence.hpp"

namespace lowprob {

enum class Side { Left, Right };

/// low(A' x Omega_B) (Left) or low(Omega_A x B') (Right) as a capacity on the
/// marginal frame.
LowerProbability marginal_restriction(const LowerProbability& low, const ProductFrame& split, Side side);

struct AbstractionCheck {
  bool consistent = false;
  /// First event in canonical order where pstar falls below low.
  std::optional<Event> violating_event;
  /// Möbius mass is m_A(A') m_B(B') on rectangles and zero elsewhere.
  bool factorizes = false;
  /// First event where the Möbius mass breaks that pattern.
  std::optional<Event> factorization_failure;
  bool holds() const { return consistent && factorizes; }
};

AbstractionCheck is_abstraction(const LowerProbability& low, const Distribution& pstar, const ProductFrame& split);

struct AbstractionCandidate {
  LowerProbability low_a;
  LowerProbability low_b;
  LowerProbability joint;
  Distribution target;
  bool valid = false;
  std::optional<Event> violating_event;
};

/// Type-2 product of the marginals, checked against pstar.
AbstractionCandidate build_abstraction(const Distribution& pstar, const ProductFrame& split,
                                       const LowerProbability& low_a, const LowerProbability& low_b);

struct ProprietyResult {
  /// No single marginal raise by `step` produced a dominating valid candidate.
  bool locally_proper = true;
  std::optional<AbstractionCandidate> dominating;
  /// Marginal side and event of the successful raise.
  std::optional<Side> raised_side;
  std::optional<Event> raised_event;
};

/// Raises one marginal lower value at a time by `step`, clamped so the
/// marginal stays super-additive, and reports the first raise whose candidate
/// is still valid. Throws std::invalid_argument when step <= 0.
ProprietyResult local_propriety_check(const AbstractionCandidate& cand, const ProductFrame& split,
                                      const Rational& step, Execution exec = Execution::Parallel);

/// Largest value low(a) can take with every other value fixed:
/// min over non-empty C disjoint from a of low(a | C) - low(C).
Rational raise_ceiling(const LowerProbability& low, const Event& a);

}  // namespace lowprob
