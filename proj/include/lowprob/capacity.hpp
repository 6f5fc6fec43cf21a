#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lowprob/kernels.hpp"
#include "lowprob/set_function.hpp"

namespace lowprob {

using kernels::Execution;

/// One violated axiom instance. `first`/`second` are the witness events;
/// for single-event violations `second` equals `first`.
struct Violation {
  enum class Kind { Normalization, Range, SuperAdditivity, Monotonicity };
  Kind kind;
  Event first;
  Event second;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  /// Violations found in total; `violations` keeps at most the first 1000.
  std::size_t total_violations = 0;
  /// False when the disjoint-pair check was sampled (frames above 12).
  bool exhaustive = true;
  /// Disjoint pairs examined divided by the total number of disjoint pairs.
  double pair_coverage = 1.0;

  bool ok() const { return total_violations == 0; }
  bool has(Violation::Kind kind) const;
};

const char* to_string(Violation::Kind kind);

inline constexpr std::size_t kExhaustivePairFrame = 12;
inline constexpr std::size_t kTwoMonotoneFrameCap = 8;

/// Checks normalization, range, super-additivity over disjoint pairs and
/// monotonicity under single-outcome extension.
ValidationReport validate_lower(const SetFunction& sf, Execution exec = Execution::Parallel);

MobiusMass mobius(const SetFunction& sf, Execution exec = Execution::Parallel);
inline MobiusMass mobius(const LowerProbability& low, Execution exec = Execution::Parallel) {
  return mobius(low.function(), exec);
}
SetFunction inverse_mobius(const MobiusMass& m, Execution exec = Execution::Parallel);

struct TwoMonotoneResult {
  bool holds = true;
  std::optional<std::pair<Event, Event>> witness;
};

/// Exhaustive pair scan in canonical order. Throws TooLarge above 8 outcomes.
TwoMonotoneResult is_2monotone(const LowerProbability& low, Execution exec = Execution::Parallel);

bool is_belief_function(const LowerProbability& low);

/// true/false when 2-monotonicity can be decided: a belief function is
/// certified at any size, otherwise the exhaustive scan decides frames up to
/// 8 outcomes. nullopt when neither applies.
std::optional<bool> certify_2monotone(const LowerProbability& low);

/// Events with non-zero mass, in canonical order.
std::vector<std::pair<Event, Rational>> focal_elements(const MobiusMass& m);

/// low1(A) >= low2(A) for every A. Throws FrameMismatch.
bool dominates(const LowerProbability& low1, const LowerProbability& low2);

}  // namespace lowprob
