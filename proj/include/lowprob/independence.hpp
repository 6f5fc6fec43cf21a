#pragma once

#include <array>
#include <optional>
#include <string>

#include "lowprob/conditioning.hpp"
#include "lowprob/credal.hpp"

namespace lowprob {

/// Omega_A x Omega_B with joint outcome (a, b) at index a * |Omega_B| + b and
/// label label_A + label_B.
class ProductFrame {
 public:
  ProductFrame(Frame left, Frame right);

  const Frame& left() const { return left_; }
  const Frame& right() const { return right_; }
  const Frame& joint() const { return joint_; }

  std::size_t index(std::size_t a, std::size_t b) const { return a * right_.size() + b; }
  Event rectangle(const Event& a, const Event& b) const;
  /// a x Omega_B
  Event left_cylinder(const Event& a) const { return rectangle(a, right_.full_event()); }
  /// Omega_A x b
  Event right_cylinder(const Event& b) const { return rectangle(left_.full_event(), b); }
  Event project_left(const Event& x) const;
  Event project_right(const Event& x) const;
  bool is_rectangular(const Event& x) const;

 private:
  Frame left_;
  Frame right_;
  Frame joint_;
};

/// Lower envelope of all products P_A x P_B of consistent marginals; the
/// extrema sit at pairs of marginal vertices. Throws PreconditionUnmet when
/// a marginal admits no vertex enumeration.
LowerProbability product_type1_envelope(const ProductFrame& split, const LowerProbability& low_a,
                                        const LowerProbability& low_b, Execution exec = Execution::Parallel);

/// Möbius product: m(A x B) = m_A(A) m_B(B), zero off rectangles.
LowerProbability product_type2(const ProductFrame& split, const LowerProbability& low_a,
                               const LowerProbability& low_b, Execution exec = Execution::Parallel);

enum class ProductKind { Type1, Type2 };

LowerProbability product(ProductKind kind, const ProductFrame& split, const LowerProbability& low_a,
                         const LowerProbability& low_b);

/// True when p is a product of marginals (every 2x2 minor of the joint mass
/// matrix vanishes) and both marginals are consistent.
bool in_type1_set(const Distribution& p, const ProductFrame& split, const LowerProbability& low_a,
                  const LowerProbability& low_b);

struct IrrelevanceResult {
  bool lower_equal = false;
  bool upper_equal = false;
  Interval prior;
  Interval posterior;
  bool holds() const { return lower_equal && upper_equal; }
};

/// Compares condition_envelope(a | b) with the prior bounds of a.
IrrelevanceResult check_irrelevance(const LowerProbability& low, const Event& a, const Event& b);

struct FactorizationResult {
  bool lower = false;  // low(a & b) == low(a) low(b)
  bool upper = false;  // upper(a & b) == upper(a) upper(b)
  bool holds() const { return lower && upper; }
};

FactorizationResult check_factorization(const LowerProbability& low, const Event& a, const Event& b);

struct IndependenceReport {
  bool irrelevance_lower = false;
  bool irrelevance_upper = false;
  bool factorization_lower = false;
  bool factorization_upper = false;
  /// 1: low(a) == low(a|b); 2: factorization; 3: 0 < low(a) < 1; 4: upper(b) > low(b).
  std::array<bool, 4> impossibility_conditions{};
  bool all_conditions_hold = false;
  /// Set when the source was certified 2-monotone, so all four cannot hold.
  bool two_monotone_certified = false;
  Interval prior;
  Interval posterior;
};

IndependenceReport independence_diagnostic(const LowerProbability& low, const Event& a, const Event& b);

struct DilationResult {
  /// Consistent P with P(a) = low(a), P(b) > 0, P(a|b) < P(a).
  std::optional<Distribution> lower_witness;
  /// Consistent P with P(a) = upper(a), P(b) > 0, P(a|b) > P(a).
  std::optional<Distribution> upper_witness;
  /// "vertices" when the search covered every vertex, "fractional-lp" otherwise.
  std::string method;
  /// Absence of a witness is conclusive only for a complete vertex search.
  bool complete = false;
  Interval prior;
  Interval posterior;
};

/// Searches for a distribution meeting the dilation hypotheses and, on success,
/// verifies the strict drop (rise) of the conditional lower (upper) bound.
DilationResult dilation_witness(const LowerProbability& low, const Event& a, const Event& b);

/// Checks p against the dilation hypotheses on the lower side.
bool is_lower_dilation_witness(const LowerProbability& low, const Event& a, const Event& b, const Distribution& p);
bool is_upper_dilation_witness(const LowerProbability& low, const Event& a, const Event& b, const Distribution& p);

struct ContractionReport {
  Event a;  // a' x Omega_B
  Event b;  // Omega_A x b'
  bool item1 = false;  // low(A & B) = low(A) low(B)
  bool item2 = false;  // upper(A & B) = upper(A) upper(B)
  bool item3 = false;  // low(A|B) <= low(A) <= upper(A) <= upper(A|B)
  Rational low_ab, low_a, low_b;
  Rational upper_ab, upper_a, upper_b;
  Interval posterior;
  bool all() const { return item1 && item2 && item3; }
};

ContractionReport check_product_contraction(const ProductFrame& split, const LowerProbability& low_a, const LowerProbability& low_b,
                              const Event& a_prime, const Event& b_prime, ProductKind kind);

struct WeakIndependenceResult {
  /// low(a|b) <= low(b), as printed.
  bool literal = false;
  /// low(a|b) <= low(a) and upper(a|b) >= upper(a): conditioning does not tighten.
  bool interpreted = false;
  Interval prior;
  Interval posterior;
};

WeakIndependenceResult check_weak_independence(const LowerProbability& low, const Event& a, const Event& b);

}  // namespace lowprob
