#include <benchmark/benchmark.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "lowprob/kernels.hpp"
#include "lowprob/rational.hpp"

using lowprob::Rational;
using lowprob::kernels::Execution;

namespace {

Execution exec_of(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::Serial : Execution::Parallel;
}

std::vector<Rational> random_table(std::size_t size, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> num(0, 97), den(1, 64);
  std::vector<Rational> v(size);
  for (auto& x : v) x = Rational(num(rng), den(rng));
  return v;
}

// Supermodular table with no violation, so the scan runs to completion.
std::vector<Rational> squared_probability(std::size_t n) {
  std::vector<Rational> p(n, Rational(1, static_cast<long>(n)));
  std::vector<Rational> v(std::size_t{1} << n);
  for (std::uint32_t m = 0; m < v.size(); ++m) {
    const Rational pa(std::popcount(m), static_cast<long>(n));
    v[m] = pa * pa;
  }
  return v;
}

void BM_Zeta(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto base = random_table(std::size_t{1} << n, 1);
  for (auto _ : state) {
    auto v = base;
    lowprob::kernels::zeta_inplace(v, n, exec_of(state));
    benchmark::DoNotOptimize(v.data());
  }
}

void BM_Mobius(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto base = random_table(std::size_t{1} << n, 2);
  for (auto _ : state) {
    auto v = base;
    lowprob::kernels::mobius_inplace(v, n, exec_of(state));
    benchmark::DoNotOptimize(v.data());
  }
}

void BM_EventwiseMin(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::vector<Rational>> tables;
  for (std::uint32_t s = 0; s < 16; ++s) tables.push_back(random_table(std::size_t{1} << n, 10 + s));
  for (auto _ : state) {
    auto out = lowprob::kernels::eventwise_min(tables, exec_of(state));
    benchmark::DoNotOptimize(out.data());
  }
}

void BM_Pivot(benchmark::State& state) {
  const auto h = static_cast<std::size_t>(state.range(0));
  const std::size_t w = 2 * h;
  auto base = random_table(h * w, 3);
  base[0] = Rational(1);
  for (auto _ : state) {
    auto m = base;
    lowprob::kernels::pivot(m, h, w, 0, 0, exec_of(state));
    benchmark::DoNotOptimize(m.data());
  }
}

void BM_SupermodularityScan(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto v = squared_probability(n);
  std::vector<std::uint32_t> order(v.size());
  std::iota(order.begin(), order.end(), 0U);
  std::stable_sort(order.begin(), order.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
  for (auto _ : state) {
    auto r = lowprob::kernels::first_supermodularity_violation(v, order, exec_of(state));
    benchmark::DoNotOptimize(r);
  }
}

}  // namespace

// Second argument: 0 = serial reference, 1 = OpenMP.
BENCHMARK(BM_Zeta)->ArgsProduct({{12, 16, 18}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Mobius)->ArgsProduct({{12, 16, 18}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EventwiseMin)->ArgsProduct({{12, 16}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Pivot)->ArgsProduct({{64, 256}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SupermodularityScan)->ArgsProduct({{6, 8}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
