#include "lowprob/credal.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "lowprob/errors.hpp"

namespace lowprob {

const char* to_string(VertexMethod m) {
  switch (m) {
    case VertexMethod::Auto: return "auto";
    case VertexMethod::Permutation: return "permutation";
    case VertexMethod::FocalAllocation: return "focal-allocation";
    case VertexMethod::TightBasis: return "tight-basis";
  }
  return "?";
}

ConsistencyResult is_consistent(const Distribution& p, const LowerProbability& low) {
  require_same_frame(p.frame(), low.frame(), "is_consistent");
  const auto table = p.event_table();
  for (auto mask : canonical_masks(low.frame().size())) {
    if (table[mask] < low.function().at_mask(mask))
      return {false, Event(mask, low.frame().size())};
  }
  return {};
}

bool is_nonempty(const LowerProbability& low) {
  lp::LinearProgram program;
  program.variable_count = low.frame().size();
  program.objective.assign(program.variable_count, Rational(0));
  program.constraints = lp::event_constraints(low);
  return lp::solve(program).status == lp::Status::Optimal;
}

LowerProbability lower_envelope(const std::vector<Distribution>& dists, Execution exec) {
  if (dists.empty()) throw std::invalid_argument("lower envelope of an empty distribution list");
  std::vector<std::vector<Rational>> tables;
  tables.reserve(dists.size());
  for (const auto& d : dists) {
    require_same_frame(dists.front().frame(), d.frame(), "lower_envelope");
    tables.push_back(d.event_table());
  }
  auto mins = kernels::eventwise_min(tables, exec);
  return LowerProbability::unchecked(SetFunction(dists.front().frame(), std::move(mins)));
}

LowerProbability coherent_envelope(const LowerProbability& low, Execution exec) {
  if (!is_nonempty(low)) throw EmptyCredalSet("no distribution is consistent with the lower probability");
  const std::size_t n = low.frame().size();
  const auto constraints = lp::event_constraints(low);
  std::vector<Rational> values(low.frame().event_count());
  const std::uint32_t full = Event::full_mask(n);
  values[full] = Rational(1);
  // Each event is an independent LP; the per-LP pivots stay serial inside the sweep.
  const Execution inner = Execution::Serial;
  kernels::for_each_index(
      values.size(),
      [&](std::size_t mask) {
        if (mask == 0 || mask == full) return;
        lp::LinearProgram program{n, lp::indicator(Event(static_cast<std::uint32_t>(mask), n)), constraints,
                                  lp::Sense::Minimize};
        const auto r = lp::solve(program, inner);
        values[mask] = r.value;
      },
      exec);
  return LowerProbability::unchecked(SetFunction(low.frame(), std::move(values)));
}

Distribution permutation_vertex(const LowerProbability& low, const std::vector<std::size_t>& order) {
  const std::size_t n = low.frame().size();
  std::vector<Rational> mass(n);
  std::uint32_t prefix = 0;
  for (auto outcome : order) {
    const std::uint32_t next = prefix | (1U << outcome);
    mass[outcome] = low.function().at_mask(next) - low.function().at_mask(prefix);
    prefix = next;
  }
  return Distribution(low.frame(), std::move(mass));
}

namespace {

class UniqueDistributions {
 public:
  explicit UniqueDistributions(const Frame& frame) : frame_(frame) {}
  void add(std::vector<Rational> masses) {
    if (seen_.insert(masses).second) out_.emplace_back(frame_, std::move(masses));
  }
  std::vector<Distribution> take() { return std::move(out_); }

 private:
  const Frame& frame_;
  std::set<std::vector<Rational>> seen_;
  std::vector<Distribution> out_;
};

// Rank of the tight constraints at p reaches n exactly when p is a vertex.
bool is_vertex(const LowerProbability& low, const std::vector<Rational>& p) {
  const std::size_t n = p.size();
  std::vector<Rational> table(std::size_t{1} << n);
  for (std::size_t m = 1; m < table.size(); ++m) {
    const std::size_t bit = m & (~m + 1);
    table[m] = table[m ^ bit] + p[static_cast<std::size_t>(std::countr_zero(bit))];
  }
  // Reduced rows kept with a leading 1 at pivot_of[k].
  std::vector<std::vector<Rational>> basis;
  std::vector<std::size_t> pivot_of;
  auto add_row = [&](std::vector<Rational> row) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Rational f = row[pivot_of[k]];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!basis[k][j].is_zero()) row[j] -= f * basis[k][j];
    }
    std::size_t lead = 0;
    while (lead < n && row[lead].is_zero()) ++lead;
    if (lead == n) return;
    const Rational inv = Rational(1) / row[lead];
    for (auto& v : row) v *= inv;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Rational f = basis[k][lead];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) basis[k][j] -= f * row[j];
    }
    basis.push_back(std::move(row));
    pivot_of.push_back(lead);
  };
  const std::uint32_t full = Event::full_mask(n);
  add_row(lp::indicator(Event(full, n)));
  for (std::size_t i = 0; i < n && basis.size() < n; ++i)
    if (p[i].is_zero()) add_row(lp::indicator(Event::singleton(i, n)));
  for (std::uint32_t m = 1; m < full && basis.size() < n; ++m)
    if (table[m] == low.function().at_mask(m)) add_row(lp::indicator(Event(m, n)));
  return basis.size() == n;
}

std::vector<Distribution> by_permutation(const LowerProbability& low) {
  std::vector<std::size_t> order(low.frame().size());
  std::iota(order.begin(), order.end(), 0);
  UniqueDistributions out(low.frame());
  do {
    const auto v = permutation_vertex(low, order);
    out.add(std::vector<Rational>(v.masses().begin(), v.masses().end()));
  } while (std::next_permutation(order.begin(), order.end()));
  return out.take();
}

std::vector<Distribution> by_focal_allocation(const LowerProbability& low) {
  const std::size_t n = low.frame().size();
  const auto focal = focal_elements(mobius(low));
  std::vector<std::vector<std::size_t>> members;
  std::size_t candidates = 1;
  for (const auto& [e, mass] : focal) {
    members.push_back(e.members());
    candidates *= members.back().size();
    if (candidates > kFocalAllocationCap)
      throw PreconditionUnmet("focal allocation would exceed 10^6 candidates");
  }
  UniqueDistributions out(low.frame());
  std::vector<std::size_t> choice(focal.size(), 0);
  for (std::size_t c = 0; c < candidates; ++c) {
    std::vector<Rational> p(n);
    for (std::size_t f = 0; f < focal.size(); ++f) p[members[f][choice[f]]] += focal[f].second;
    if (is_vertex(low, p)) out.add(std::move(p));
    for (std::size_t f = 0; f < focal.size(); ++f) {
      if (++choice[f] < members[f].size()) break;
      choice[f] = 0;
    }
  }
  return out.take();
}

std::vector<Distribution> by_tight_basis(const LowerProbability& low) {
  const std::size_t n = low.frame().size();
  const auto constraints = lp::event_constraints(low);
  // Row n is the normalization, always tight; choose n-1 of the others.
  std::vector<std::size_t> pool;
  for (std::size_t i = 0; i < constraints.size(); ++i)
    if (i != n) pool.push_back(i);
  UniqueDistributions out(low.frame());
  const std::size_t pick = n - 1;
  std::vector<bool> mask(pool.size(), false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(pick), true);
  do {
    // Gaussian elimination on the n x n system; skip singular picks.
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    a.push_back(constraints[n].coefficients);
    b.push_back(constraints[n].rhs);
    for (std::size_t k = 0; k < pool.size(); ++k) {
      if (!mask[k]) continue;
      a.push_back(constraints[pool[k]].coefficients);
      b.push_back(constraints[pool[k]].rhs);
    }
    bool singular = false;
    for (std::size_t c = 0; c < n && !singular; ++c) {
      std::size_t p = c;
      while (p < n && a[p][c].is_zero()) ++p;
      if (p == n) { singular = true; break; }
      std::swap(a[p], a[c]);
      std::swap(b[p], b[c]);
      const Rational inv = Rational(1) / a[c][c];
      for (auto& v : a[c]) v *= inv;
      b[c] *= inv;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == c || a[i][c].is_zero()) continue;
        const Rational f = a[i][c];
        for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[c][j];
        b[i] -= f * b[c];
      }
    }
    if (!singular && lp::satisfies(constraints, b)) out.add(std::move(b));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out.take();
}

}  // namespace

std::vector<Distribution> vertices(const LowerProbability& low, VertexMethod method, VertexMethod* used) {
  const std::size_t n = low.frame().size();
  if (method == VertexMethod::Auto) {
    const bool belief = is_belief_function(low);
    if (n <= kPermutationFrameCap && (belief || is_2monotone(low).holds)) {
      method = VertexMethod::Permutation;
    } else if (belief) {
      method = VertexMethod::FocalAllocation;
    } else if (n <= kTightBasisFrameCap) {
      method = VertexMethod::TightBasis;
    } else {
      throw PreconditionUnmet("no vertex enumeration method applies to this lower probability");
    }
  }
  if (used) *used = method;
  switch (method) {
    case VertexMethod::Permutation:
      if (n > kPermutationFrameCap) throw PreconditionUnmet("permutation vertices need at most 8 outcomes");
      if (certify_2monotone(low) != true) throw PreconditionUnmet("permutation vertices need a 2-monotone source");
      return by_permutation(low);
    case VertexMethod::FocalAllocation:
      if (!is_belief_function(low)) throw PreconditionUnmet("focal allocation needs a belief function");
      return by_focal_allocation(low);
    case VertexMethod::TightBasis:
      if (n > kTightBasisFrameCap) throw PreconditionUnmet("tight-basis enumeration needs at most 4 outcomes");
      return by_tight_basis(low);
    case VertexMethod::Auto: break;
  }
  throw std::logic_error("unreachable vertex method");
}

CredalSet::CredalSet(LowerProbability source)
    : source_(std::move(source)), constraints_(lp::event_constraints(source_)), cache_(std::make_shared<Cache>()) {}

bool CredalSet::contains(const Distribution& p) const { return is_consistent(p, source_).consistent; }

const std::vector<Distribution>& CredalSet::vertices(VertexMethod method) const {
  std::call_once(cache_->once, [&] {
    VertexMethod used = VertexMethod::Auto;
    cache_->vertices = lowprob::vertices(source_, method, &used);
    cache_->method = used;
  });
  return cache_->vertices;
}

VertexMethod CredalSet::vertex_method() const { return cache_->method; }

}  // namespace lowprob
