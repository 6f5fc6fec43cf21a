#include "lowprob/ratlp.hpp"

#include <stdexcept>

#include "lowprob/frame.hpp"

namespace lowprob::lp {

const char* to_string(Status s) {
  switch (s) {
    case Status::Optimal: return "optimal";
    case Status::Infeasible: return "infeasible";
    case Status::Unbounded: return "unbounded";
  }
  return "?";
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

bool satisfies(const std::vector<Constraint>& constraints, std::span<const Rational> x) {
  for (const auto& c : constraints) {
    const Rational lhs = dot(c.coefficients, x);
    switch (c.relation) {
      case Relation::LessEqual: if (lhs > c.rhs) return false; break;
      case Relation::Equal: if (lhs != c.rhs) return false; break;
      case Relation::GreaterEqual: if (lhs < c.rhs) return false; break;
    }
  }
  return true;
}

std::vector<Rational> indicator(const Event& e) {
  std::vector<Rational> v(e.frame_size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (e.contains(i)) v[i] = Rational(1);
  return v;
}

std::vector<Constraint> event_constraints(const LowerProbability& low) {
  const std::size_t n = low.frame().size();
  std::vector<Constraint> rows;
  rows.reserve(n + low.frame().event_count());
  for (std::size_t i = 0; i < n; ++i)
    rows.push_back({indicator(Event::singleton(i, n)), Relation::GreaterEqual, Rational(0)});
  rows.push_back({indicator(Event::full(n)), Relation::Equal, Rational(1)});
  for (auto mask : canonical_masks(n)) {
    const Event e(mask, n);
    if (e.is_empty() || e.is_full()) continue;
    rows.push_back({indicator(e), Relation::GreaterEqual, low(e)});
  }
  return rows;
}

namespace {

// a.x >= b
struct Row {
  std::vector<Rational> a;
  Rational b;
};

struct Presolved {
  bool infeasible = false;
  std::vector<Row> ge;
  std::vector<Row> eq;
};

Presolved presolve(const LinearProgram& lp) {
  const std::size_t n = lp.variable_count;
  Presolved out;
  std::vector<Row> ge;
  for (const auto& c : lp.constraints) {
    if (c.coefficients.size() != n) throw std::invalid_argument("constraint row width differs from variable count");
    Row r{c.coefficients, c.rhs};
    if (c.relation == Relation::LessEqual) {
      for (auto& v : r.a) v = -v;
      r.b = -r.b;
    }
    bool zero = true;
    for (const auto& v : r.a) zero = zero && v.is_zero();
    if (zero) {
      const bool ok = c.relation == Relation::Equal ? r.b.is_zero() : r.b.sign() <= 0;
      if (!ok) out.infeasible = true;
      continue;
    }
    (c.relation == Relation::Equal ? out.eq : ge).push_back(std::move(r));
  }

  // Single-variable rows x_i >= 0 mark the variable non-negative.
  std::vector<bool> nonneg(n, false);
  std::vector<bool> is_bound(ge.size(), false);
  for (std::size_t k = 0; k < ge.size(); ++k) {
    if (!ge[k].b.is_zero()) continue;
    std::size_t nonzero = 0, var = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (!ge[k].a[j].is_zero()) { ++nonzero; var = j; }
    if (nonzero == 1 && ge[k].a[var].sign() > 0) {
      nonneg[var] = true;
      is_bound[k] = true;
    }
  }
  // Rows with non-negative coefficients on non-negative variables and rhs <= 0 are implied.
  for (std::size_t k = 0; k < ge.size(); ++k) {
    if (!is_bound[k] && ge[k].b.sign() <= 0) {
      bool implied = true;
      for (std::size_t j = 0; j < n && implied; ++j) {
        const int s = ge[k].a[j].sign();
        if (s < 0 || (s > 0 && !nonneg[j])) implied = false;
      }
      if (implied) continue;
    }
    out.ge.push_back(std::move(ge[k]));
  }
  return out;
}

// Standard-form tableau for max cost.z s.t. M z = rhs, z >= 0, with one
// artificial column per row. The last row holds reduced costs and -value.
class DualTableau {
 public:
  DualTableau(const std::vector<std::vector<Rational>>& columns, std::vector<Rational> costs,
              const std::vector<Rational>& rhs, Execution exec)
      : m_(rhs.size()), k_(columns.size()), width_(k_ + m_ + 1), costs_(std::move(costs)), exec_(exec),
        t_((m_ + 1) * width_), basis_(m_) {
    for (std::size_t i = 0; i < m_; ++i) {
      const bool flip = rhs[i].sign() < 0;
      for (std::size_t j = 0; j < k_; ++j) at(i, j) = flip ? -columns[j][i] : columns[j][i];
      at(i, k_ + i) = Rational(1);
      at(i, width_ - 1) = flip ? -rhs[i] : rhs[i];
      basis_[i] = k_ + i;
    }
  }

  // Minimizes the sum of artificials. Returns false when that sum stays positive.
  bool phase_one() {
    for (std::size_t j = 0; j < width_; ++j) {
      Rational s;
      if (j < k_ || j == width_ - 1)
        for (std::size_t i = 0; i < m_; ++i) s += at(i, j);
      at(m_, j) = s;
    }
    run(k_);
    if (!at(m_, width_ - 1).is_zero()) return false;
    // Drive zero-level artificials out of the basis where a structural column allows it.
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < k_) continue;
      for (std::size_t j = 0; j < k_; ++j) {
        if (!at(i, j).is_zero()) {
          pivot(i, j);
          break;
        }
      }
    }
    return true;
  }

  // Maximizes costs over structural columns; false when unbounded.
  bool phase_two() {
    for (std::size_t j = 0; j < width_; ++j) {
      Rational s = j < k_ ? costs_[j] : Rational(0);
      for (std::size_t i = 0; i < m_; ++i) {
        const std::size_t b = basis_[i];
        if (b < k_ && !costs_[b].is_zero()) s -= costs_[b] * at(i, j);
      }
      at(m_, j) = s;
    }
    return run(k_);
  }

  Rational value() const { return -at(m_, width_ - 1); }
  const std::vector<std::size_t>& basis() const { return basis_; }
  std::size_t structural() const { return k_; }

 private:
  Rational& at(std::size_t i, std::size_t j) { return t_[i * width_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return t_[i * width_ + j]; }

  void pivot(std::size_t r, std::size_t q) {
    kernels::pivot(t_, m_ + 1, width_, r, q, exec_);
    basis_[r] = q;
  }

  // Bland's rule: lowest-index improving column, ties in the ratio test go to
  // the lowest-index basic variable.
  bool run(std::size_t enter_limit) {
    for (;;) {
      std::size_t q = enter_limit;
      for (std::size_t j = 0; j < enter_limit; ++j)
        if (at(m_, j).sign() > 0) { q = j; break; }
      if (q == enter_limit) return true;
      std::size_t r = m_;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (at(i, q).sign() <= 0) continue;
        Rational ratio = at(i, width_ - 1) / at(i, q);
        if (r == m_ || ratio < best || (ratio == best && basis_[i] < basis_[r])) {
          r = i;
          best = std::move(ratio);
        }
      }
      if (r == m_) return false;
      pivot(r, q);
    }
  }

  std::size_t m_, k_, width_;
  std::vector<Rational> costs_;
  Execution exec_;
  std::vector<Rational> t_;
  std::vector<std::size_t> basis_;
};

// Solves rows.x = rhs exactly; free variables of a rank-deficient system are 0.
std::vector<Rational> solve_square(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs,
                                   std::size_t n) {
  const std::size_t m = rows.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && rows[p][c].is_zero()) ++p;
    if (p == m) continue;
    std::swap(rows[p], rows[r]);
    std::swap(rhs[p], rhs[r]);
    const Rational inv = Rational(1) / rows[r][c];
    for (std::size_t j = c; j < n; ++j) rows[r][j] *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = c; j < n; ++j) rows[i][j] -= f * rows[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (!rhs[i].is_zero()) throw std::logic_error("inconsistent basis system");
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i];
  return x;
}

}  // namespace

OptResult solve(const LinearProgram& lp, Execution exec) {
  const std::size_t n = lp.variable_count;
  if (n == 0) throw std::invalid_argument("linear program needs at least one variable");
  if (lp.objective.size() != n) throw std::invalid_argument("objective width differs from variable count");

  const Presolved pre = presolve(lp);
  if (pre.infeasible) return {Status::Infeasible, {}, {}};

  // Dual of min c.x s.t. G x >= g, E x = e, x free: max g.u + e.v s.t.
  // G'u + E'v = c, u >= 0, with v split into two non-negative parts.
  std::vector<std::vector<Rational>> columns;
  std::vector<Rational> costs;
  for (const auto& r : pre.ge) {
    columns.push_back(r.a);
    costs.push_back(r.b);
  }
  for (const auto& r : pre.eq) {
    columns.push_back(r.a);
    costs.push_back(r.b);
    std::vector<Rational> neg(r.a);
    for (auto& v : neg) v = -v;
    columns.push_back(std::move(neg));
    costs.push_back(-r.b);
  }
  std::vector<Rational> c(lp.objective);
  if (lp.sense == Sense::Maximize)
    for (auto& v : c) v = -v;

  DualTableau dual(columns, costs, c, exec);
  if (!dual.phase_one()) {
    // Dual infeasible: the primal is unbounded if it is feasible at all.
    DualTableau probe(columns, costs, std::vector<Rational>(n), exec);
    probe.phase_one();
    return {probe.phase_two() ? Status::Unbounded : Status::Infeasible, {}, {}};
  }
  if (!dual.phase_two()) return {Status::Infeasible, {}, {}};

  // Complementary slackness: the primal rows of basic dual columns are tight.
  std::vector<std::vector<Rational>> tight;
  std::vector<Rational> tight_rhs;
  for (auto b : dual.basis()) {
    if (b >= dual.structural()) continue;
    tight.push_back(columns[b]);
    tight_rhs.push_back(costs[b]);
  }
  OptResult result;
  result.status = Status::Optimal;
  result.witness = solve_square(std::move(tight), std::move(tight_rhs), n);
  result.value = lp.sense == Sense::Maximize ? -dual.value() : dual.value();
  if (!satisfies(lp.constraints, result.witness) || dot(lp.objective, result.witness) != result.value)
    throw std::logic_error("simplex witness failed exact verification");
  return result;
}

OptResult solve_fractional(std::span<const Rational> numerator, std::span<const Rational> denominator,
                           const std::vector<Constraint>& constraints, Sense sense, Execution exec) {
  const std::size_t n = numerator.size();
  if (denominator.size() != n) throw std::invalid_argument("numerator and denominator widths differ");
  LinearProgram lp;
  lp.variable_count = n + 1;  // y then the scale t
  lp.sense = sense;
  lp.objective.assign(numerator.begin(), numerator.end());
  lp.objective.emplace_back(0);
  for (const auto& c : constraints) {
    if (c.coefficients.size() != n) throw std::invalid_argument("constraint row width differs from variable count");
    Constraint h{c.coefficients, c.relation, Rational(0)};
    h.coefficients.push_back(-c.rhs);
    lp.constraints.push_back(std::move(h));
  }
  std::vector<Rational> t_row(n + 1);
  t_row[n] = Rational(1);
  lp.constraints.push_back({t_row, Relation::GreaterEqual, Rational(0)});
  std::vector<Rational> d_row(denominator.begin(), denominator.end());
  d_row.emplace_back(0);
  lp.constraints.push_back({std::move(d_row), Relation::Equal, Rational(1)});

  OptResult h = solve(lp, exec);
  if (h.status != Status::Optimal) return {h.status, {}, {}};
  const Rational t = h.witness[n];
  if (t.sign() <= 0)
    throw std::domain_error("fractional optimum at scale 0: feasible region is unbounded");
  OptResult out;
  out.status = Status::Optimal;
  out.value = h.value;
  out.witness.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.witness.push_back(h.witness[i] / t);
  return out;
}

}  // namespace lowprob::lp
