#include "lowprob/independence.hpp"

#include "lowprob/errors.hpp"

namespace lowprob {

namespace {

std::vector<std::string> joint_labels(const Frame& left, const Frame& right) {
  if (left.size() * right.size() > kMaxFrameSize) throw TooLarge("joint frame exceeds 20 outcomes");
  std::vector<std::string> out;
  for (const auto& a : left.labels())
    for (const auto& b : right.labels()) out.push_back(a + b);
  return out;
}

}  // namespace

ProductFrame::ProductFrame(Frame left, Frame right)
    : left_(std::move(left)), right_(std::move(right)), joint_(joint_labels(left_, right_)) {}

Event ProductFrame::rectangle(const Event& a, const Event& b) const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < left_.size(); ++i) {
    if (!a.contains(i)) continue;
    for (std::size_t j = 0; j < right_.size(); ++j)
      if (b.contains(j)) mask |= 1U << index(i, j);
  }
  return Event(mask, joint_.size());
}

Event ProductFrame::project_left(const Event& x) const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < left_.size(); ++i)
    for (std::size_t j = 0; j < right_.size(); ++j)
      if (x.contains(index(i, j))) mask |= 1U << i;
  return Event(mask, left_.size());
}

Event ProductFrame::project_right(const Event& x) const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < left_.size(); ++i)
    for (std::size_t j = 0; j < right_.size(); ++j)
      if (x.contains(index(i, j))) mask |= 1U << j;
  return Event(mask, right_.size());
}

bool ProductFrame::is_rectangular(const Event& x) const {
  return rectangle(project_left(x), project_right(x)) == x;
}

namespace {

void check_marginals(const ProductFrame& split, const LowerProbability& low_a, const LowerProbability& low_b) {
  require_same_frame(split.left(), low_a.frame(), "product (left marginal)");
  require_same_frame(split.right(), low_b.frame(), "product (right marginal)");
}

Distribution product_distribution(const ProductFrame& split, const Distribution& pa, const Distribution& pb) {
  std::vector<Rational> mass(split.joint().size());
  for (std::size_t i = 0; i < split.left().size(); ++i)
    for (std::size_t j = 0; j < split.right().size(); ++j) mass[split.index(i, j)] = pa.mass(i) * pb.mass(j);
  return Distribution(split.joint(), std::move(mass));
}

}  // namespace

LowerProbability product_type1_envelope(const ProductFrame& split, const LowerProbability& low_a,
                                        const LowerProbability& low_b, Execution exec) {
  check_marginals(split, low_a, low_b);
  const auto va = vertices(low_a);
  const auto vb = vertices(low_b);
  std::vector<Rational> acc;
  for (const auto& pa : va) {
    for (const auto& pb : vb) {
      const auto table = product_distribution(split, pa, pb).event_table();
      if (acc.empty()) {
        acc = table;
      } else {
        kernels::eventwise_min_into(acc, table, exec);
      }
    }
  }
  return LowerProbability::unchecked(SetFunction(split.joint(), std::move(acc)));
}

LowerProbability product_type2(const ProductFrame& split, const LowerProbability& low_a,
                               const LowerProbability& low_b, Execution exec) {
  check_marginals(split, low_a, low_b);
  const auto ma = mobius(low_a, exec);
  const auto mb = mobius(low_b, exec);
  SetFunction joint(split.joint());
  const std::size_t na = split.left().size();
  const std::size_t nb = split.right().size();
  for (std::uint32_t a = 1; a < (1U << na); ++a) {
    const Rational& x = ma.function().at_mask(a);
    if (x.is_zero()) continue;
    for (std::uint32_t b = 1; b < (1U << nb); ++b) {
      const Rational& y = mb.function().at_mask(b);
      if (y.is_zero()) continue;
      joint.set(split.rectangle(Event(a, na), Event(b, nb)), x * y);
    }
  }
  return LowerProbability::unchecked(inverse_mobius(MobiusMass(std::move(joint)), exec));
}

LowerProbability product(ProductKind kind, const ProductFrame& split, const LowerProbability& low_a,
                         const LowerProbability& low_b) {
  return kind == ProductKind::Type1 ? product_type1_envelope(split, low_a, low_b) : product_type2(split, low_a, low_b);
}

bool in_type1_set(const Distribution& p, const ProductFrame& split, const LowerProbability& low_a,
                  const LowerProbability& low_b) {
  check_marginals(split, low_a, low_b);
  require_same_frame(split.joint(), p.frame(), "in_type1_set");
  const std::size_t na = split.left().size();
  const std::size_t nb = split.right().size();
  auto m = [&](std::size_t i, std::size_t j) -> const Rational& { return p.mass(split.index(i, j)); };
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t i2 = i + 1; i2 < na; ++i2)
      for (std::size_t j = 0; j < nb; ++j)
        for (std::size_t j2 = j + 1; j2 < nb; ++j2)
          if (m(i, j) * m(i2, j2) != m(i, j2) * m(i2, j)) return false;
  std::vector<Rational> pa(na), pb(nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      pa[i] += m(i, j);
      pb[j] += m(i, j);
    }
  return is_consistent(Distribution(split.left(), std::move(pa)), low_a).consistent &&
         is_consistent(Distribution(split.right(), std::move(pb)), low_b).consistent;
}

IrrelevanceResult check_irrelevance(const LowerProbability& low, const Event& a, const Event& b) {
  IrrelevanceResult r;
  r.prior = prior_interval(low, a);
  r.posterior = condition_envelope(low, a, b);
  r.lower_equal = r.prior.lo == r.posterior.lo;
  r.upper_equal = r.prior.hi == r.posterior.hi;
  return r;
}

FactorizationResult check_factorization(const LowerProbability& low, const Event& a, const Event& b) {
  return {low(a & b) == low(a) * low(b), low.upper(a & b) == low.upper(a) * low.upper(b)};
}

IndependenceReport independence_diagnostic(const LowerProbability& low, const Event& a, const Event& b) {
  IndependenceReport r;
  const auto irr = check_irrelevance(low, a, b);
  const auto fac = check_factorization(low, a, b);
  r.prior = irr.prior;
  r.posterior = irr.posterior;
  r.irrelevance_lower = irr.lower_equal;
  r.irrelevance_upper = irr.upper_equal;
  r.factorization_lower = fac.lower;
  r.factorization_upper = fac.upper;
  r.impossibility_conditions = {irr.lower_equal, fac.holds(), low(a).sign() > 0 && low(a) < Rational(1),
                           low.upper(b) > low(b)};
  r.all_conditions_hold = r.impossibility_conditions[0] && r.impossibility_conditions[1] && r.impossibility_conditions[2] &&
                        r.impossibility_conditions[3];
  r.two_monotone_certified = certify_2monotone(low) == true;
  return r;
}

bool is_lower_dilation_witness(const LowerProbability& low, const Event& a, const Event& b, const Distribution& p) {
  if (!is_consistent(p, low).consistent) return false;
  const Rational pb = p.prob(b);
  return p.prob(a) == low(a) && pb.sign() > 0 && p.prob(a & b) < p.prob(a) * pb;
}

bool is_upper_dilation_witness(const LowerProbability& low, const Event& a, const Event& b, const Distribution& p) {
  if (!is_consistent(p, low).consistent) return false;
  const Rational pb = p.prob(b);
  return p.prob(a) == low.upper(a) && pb.sign() > 0 && p.prob(a & b) > p.prob(a) * pb;
}

namespace {

// Extremal P(a|b) over the face P(a) = target of the credal set.
std::optional<Distribution> fractional_probe(const LowerProbability& low, const Event& a, const Event& b,
                                             const Rational& target, lp::Sense sense) {
  auto constraints = lp::event_constraints(low);
  constraints.push_back({lp::indicator(a), lp::Relation::Equal, target});
  const auto r = lp::solve_fractional(lp::indicator(a & b), lp::indicator(b), constraints, sense);
  if (r.status != lp::Status::Optimal) return std::nullopt;
  return Distribution(low.frame(), r.witness);
}

}  // namespace

DilationResult dilation_witness(const LowerProbability& low, const Event& a, const Event& b) {
  if (low.upper(b).is_zero()) throw UndefinedConditional("upper probability of the conditioning event is 0");
  DilationResult out;
  out.prior = prior_interval(low, a);

  std::optional<std::vector<Distribution>> verts;
  try {
    verts = vertices(low);
  } catch (const PreconditionUnmet&) {
  }

  if (verts) {
    out.method = "vertices";
    out.complete = true;
    // Keep the vertex with the most extreme conditional among qualifying ones.
    std::optional<Rational> best_lo, best_hi;
    for (const auto& v : *verts) {
      const Rational pb = v.prob(b);
      if (pb.is_zero()) continue;
      const Rational ratio = v.prob(a & b) / pb;
      if (is_lower_dilation_witness(low, a, b, v) && (!best_lo || ratio < *best_lo)) {
        best_lo = ratio;
        out.lower_witness = v;
      }
      if (is_upper_dilation_witness(low, a, b, v) && (!best_hi || ratio > *best_hi)) {
        best_hi = ratio;
        out.upper_witness = v;
      }
    }
  } else {
    out.method = "fractional-lp";
    auto lo = fractional_probe(low, a, b, low(a), lp::Sense::Minimize);
    if (lo && is_lower_dilation_witness(low, a, b, *lo)) out.lower_witness = std::move(lo);
    auto hi = fractional_probe(low, a, b, low.upper(a), lp::Sense::Maximize);
    if (hi && is_upper_dilation_witness(low, a, b, *hi)) out.upper_witness = std::move(hi);
  }

  out.posterior = condition_envelope(low, a, b);
  if (out.lower_witness && !(out.posterior.lo < out.prior.lo))
    throw std::logic_error("lower dilation witness without a strict drop of the conditional lower bound");
  if (out.upper_witness && !(out.posterior.hi > out.prior.hi))
    throw std::logic_error("upper dilation witness without a strict rise of the conditional upper bound");
  return out;
}

ContractionReport check_product_contraction(const ProductFrame& split, const LowerProbability& low_a, const LowerProbability& low_b,
                              const Event& a_prime, const Event& b_prime, ProductKind kind) {
  const auto joint = product(kind, split, low_a, low_b);
  ContractionReport r;
  r.a = split.left_cylinder(a_prime);
  r.b = split.right_cylinder(b_prime);
  r.low_ab = joint(r.a & r.b);
  r.low_a = joint(r.a);
  r.low_b = joint(r.b);
  r.upper_ab = joint.upper(r.a & r.b);
  r.upper_a = joint.upper(r.a);
  r.upper_b = joint.upper(r.b);
  r.posterior = condition_envelope(joint, r.a, r.b);
  r.item1 = r.low_ab == r.low_a * r.low_b;
  r.item2 = r.upper_ab == r.upper_a * r.upper_b;
  r.item3 = r.posterior.lo <= r.low_a && r.low_a <= r.upper_a && r.upper_a <= r.posterior.hi;
  return r;
}

WeakIndependenceResult check_weak_independence(const LowerProbability& low, const Event& a, const Event& b) {
  WeakIndependenceResult r;
  r.prior = prior_interval(low, a);
  r.posterior = condition_envelope(low, a, b);
  r.literal = r.posterior.lo <= low(b);
  r.interpreted = r.posterior.lo <= r.prior.lo && r.posterior.hi >= r.prior.hi;
  return r;
}

}  // namespace lowprob
