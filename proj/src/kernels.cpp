#include "lowprob/kernels.hpp"

#include <exception>
#include <limits>

#include <omp.h>

namespace lowprob::kernels {

namespace {

using Index = std::ptrdiff_t;

// Below this many independent items the OpenMP region costs more than it saves.
constexpr std::size_t kParallelGrain = 64;

}  // namespace

int parallel_width() { return omp_get_max_threads(); }

void zeta_inplace(std::span<Rational> v, std::size_t n, Execution exec) {
  const Index count = static_cast<Index>(v.size());
  for (std::size_t bit = 0; bit < n; ++bit) {
    const std::uint32_t b = std::uint32_t{1} << bit;
    if (exec == Execution::Serial) {
      for (Index m = 0; m < count; ++m)
        if (m & b) v[m] += v[m ^ b];
    } else {
#pragma omp parallel for schedule(static) if (v.size() >= kParallelGrain)
      for (Index m = 0; m < count; ++m)
        if (m & b) v[m] += v[m ^ b];
    }
  }
}

void mobius_inplace(std::span<Rational> v, std::size_t n, Execution exec) {
  const Index count = static_cast<Index>(v.size());
  for (std::size_t bit = 0; bit < n; ++bit) {
    const std::uint32_t b = std::uint32_t{1} << bit;
    if (exec == Execution::Serial) {
      for (Index m = 0; m < count; ++m)
        if (m & b) v[m] -= v[m ^ b];
    } else {
#pragma omp parallel for schedule(static) if (v.size() >= kParallelGrain)
      for (Index m = 0; m < count; ++m)
        if (m & b) v[m] -= v[m ^ b];
    }
  }
}

namespace {

bool supermodular_at(std::span<const Rational> f, std::uint32_t a, std::uint32_t b) {
  return f[a] + f[b] <= f[a & b] + f[a | b];
}

}  // namespace

std::optional<std::pair<std::uint32_t, std::uint32_t>> first_supermodularity_violation(
    std::span<const Rational> values, std::span<const std::uint32_t> order, Execution exec) {
  const std::size_t count = order.size();
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = i + 1; j < count; ++j)
        if (!supermodular_at(values, order[i], order[j])) return std::pair{order[i], order[j]};
    return std::nullopt;
  }
  std::vector<std::size_t> hit(count, none);
#pragma omp parallel for schedule(dynamic, 4) if (count >= kParallelGrain)
  for (Index i = 0; i < static_cast<Index>(count); ++i) {
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < count; ++j) {
      if (!supermodular_at(values, order[i], order[j])) {
        hit[i] = j;
        break;
      }
    }
  }
  for (std::size_t i = 0; i < count; ++i)
    if (hit[i] != none) return std::pair{order[i], order[hit[i]]};
  return std::nullopt;
}

std::pair<std::vector<std::pair<std::uint32_t, std::uint32_t>>, std::size_t>
superadditivity_violations(std::span<const Rational> f, std::size_t n, std::size_t limit,
                           Execution exec) {
  const std::uint32_t full = n >= 32 ? ~0U : ((std::uint32_t{1} << n) - 1U);
  const Index count = static_cast<Index>(std::size_t{1} << n);
  using Pair = std::pair<std::uint32_t, std::uint32_t>;
  std::vector<std::vector<Pair>> per_a(static_cast<std::size_t>(count));
  std::vector<std::size_t> totals(static_cast<std::size_t>(count), 0);

  auto scan = [&](Index ai) {
    const auto a = static_cast<std::uint32_t>(ai);
    const std::uint32_t rest = full & ~a;
    // Non-empty submasks b of the complement with b > a, so each pair is seen once.
    for (std::uint32_t b = rest; b != 0; b = (b - 1) & rest) {
      if (b <= a) continue;
      if (f[a] + f[b] > f[a | b]) {
        ++totals[ai];
        if (per_a[ai].size() < limit) per_a[ai].emplace_back(a, b);
      }
    }
  };
  if (exec == Execution::Serial) {
    for (Index a = 1; a < count; ++a) scan(a);
  } else {
#pragma omp parallel for schedule(dynamic, 16) if (count >= static_cast<Index>(kParallelGrain))
    for (Index a = 1; a < count; ++a) scan(a);
  }
  std::vector<Pair> out;
  std::size_t total = 0;
  for (Index a = 0; a < count; ++a) {
    total += totals[a];
    for (auto& p : per_a[a]) {
      if (out.size() >= limit) break;
      out.push_back(p);
    }
  }
  return {std::move(out), total};
}

std::vector<Rational> eventwise_min(std::span<const std::vector<Rational>> tables, Execution exec) {
  if (tables.empty()) return {};
  const Index width = static_cast<Index>(tables.front().size());
  std::vector<Rational> out(tables.front());
  auto reduce = [&](Index m) {
    for (std::size_t t = 1; t < tables.size(); ++t)
      if (tables[t][m] < out[m]) out[m] = tables[t][m];
  };
  if (exec == Execution::Serial) {
    for (Index m = 0; m < width; ++m) reduce(m);
  } else {
#pragma omp parallel for schedule(static) if (tables.front().size() >= kParallelGrain)
    for (Index m = 0; m < width; ++m) reduce(m);
  }
  return out;
}

void eventwise_min_into(std::span<Rational> acc, std::span<const Rational> table, Execution exec) {
  const Index width = static_cast<Index>(acc.size());
  if (exec == Execution::Serial) {
    for (Index m = 0; m < width; ++m)
      if (table[m] < acc[m]) acc[m] = table[m];
  } else {
#pragma omp parallel for schedule(static) if (acc.size() >= kParallelGrain)
    for (Index m = 0; m < width; ++m)
      if (table[m] < acc[m]) acc[m] = table[m];
  }
}

void for_each_index(std::size_t count, const std::function<void(std::size_t)>& fn, Execution exec) {
  if (exec == Execution::Serial || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(count);
#pragma omp parallel for schedule(dynamic)
  for (Index i = 0; i < static_cast<Index>(count); ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

void pivot(std::span<Rational> t, std::size_t height, std::size_t width, std::size_t r,
           std::size_t q, Execution exec) {
  const Rational inv = Rational(1) / t[r * width + q];
  std::vector<Rational> column(height);
  for (std::size_t i = 0; i < height; ++i) column[i] = t[i * width + q];

  auto update = [&](Index j) {
    Rational& head = t[r * width + j];
    if (head.is_zero()) return;
    head *= inv;
    for (std::size_t i = 0; i < height; ++i) {
      if (i == r || column[i].is_zero()) continue;
      t[i * width + j] -= column[i] * head;
    }
  };
  if (exec == Execution::Serial) {
    for (Index j = 0; j < static_cast<Index>(width); ++j) update(j);
  } else {
#pragma omp parallel for schedule(static) if (width >= 4 * kParallelGrain)
    for (Index j = 0; j < static_cast<Index>(width); ++j) update(j);
  }
}

}  // namespace lowprob::kernels
