#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "lowprob/capacity.hpp"
#include "lowprob/ratlp.hpp"

namespace lowprob {

struct ConsistencyResult {
  bool consistent = true;
  /// First event in canonical order with prob(A) < low(A).
  std::optional<Event> violating_event;
};

ConsistencyResult is_consistent(const Distribution& p, const LowerProbability& low);

/// LP feasibility of the event constraints; works on unchecked input too.
bool is_nonempty(const LowerProbability& low);

/// Eventwise minimum. Throws std::invalid_argument on an empty list and
/// FrameMismatch on mixed frames.
LowerProbability lower_envelope(const std::vector<Distribution>& dists, Execution exec = Execution::Parallel);

/// Tightest lower probability with the same credal set: one LP minimum per
/// event. Throws EmptyCredalSet.
LowerProbability coherent_envelope(const LowerProbability& low, Execution exec = Execution::Parallel);

enum class VertexMethod {
  Auto,
  /// Marginal vectors over all outcome orderings; needs 2-monotone, n <= 8.
  Permutation,
  /// Each focal mass moved wholly onto one of its members; needs a belief function.
  FocalAllocation,
  /// Every basis of tight constraints; n <= 4.
  TightBasis,
};

const char* to_string(VertexMethod m);

inline constexpr std::size_t kPermutationFrameCap = 8;
inline constexpr std::size_t kTightBasisFrameCap = 4;
inline constexpr std::size_t kFocalAllocationCap = 1000000;

/// The polytope of distributions consistent with a lower probability.
class CredalSet {
 public:
  explicit CredalSet(LowerProbability source);

  const LowerProbability& source() const { return source_; }
  const std::vector<lp::Constraint>& constraints() const { return constraints_; }
  bool contains(const Distribution& p) const;

  /// Extreme points, computed once. Throws PreconditionUnmet when no method applies.
  const std::vector<Distribution>& vertices(VertexMethod method = VertexMethod::Auto) const;
  /// Method that filled the cache; Auto before the first call.
  VertexMethod vertex_method() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Distribution> vertices;
    VertexMethod method = VertexMethod::Auto;
  };

  LowerProbability source_;
  std::vector<lp::Constraint> constraints_;
  std::shared_ptr<Cache> cache_;
};

/// Vertex enumeration without caching. Throws PreconditionUnmet.
std::vector<Distribution> vertices(const LowerProbability& low, VertexMethod method = VertexMethod::Auto,
                                   VertexMethod* used = nullptr);

/// Marginal vector for an ordering of the outcomes:
/// v(order[k]) = low(order[0..k]) - low(order[0..k-1]).
Distribution permutation_vertex(const LowerProbability& low, const std::vector<std::size_t>& order);

}  // namespace lowprob
