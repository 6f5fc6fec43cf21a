#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lowprob/rational.hpp"

// Data-parallel building blocks. Every kernel has a serial reference path and
// an OpenMP path selected by Execution; both produce identical results, the
// serial one exists so tests can check that and benchmarks can compare them.
namespace lowprob::kernels {

enum class Execution { Serial, Parallel };

/// In-place subset-sum (zeta) transform over masks of an n-bit universe:
/// v[A] <- sum over B subset of A of v[B].
void zeta_inplace(std::span<Rational> values, std::size_t n, Execution exec);

/// Inverse of zeta_inplace (Möbius inversion).
void mobius_inplace(std::span<Rational> values, std::size_t n, Execution exec);

/// Scans ordered pairs (order[i], order[j]), i < j, for the first violation
/// of f(A) + f(B) <= f(A & B) + f(A | B). Returns the masks of that pair.
std::optional<std::pair<std::uint32_t, std::uint32_t>> first_supermodularity_violation(
    std::span<const Rational> values, std::span<const std::uint32_t> order, Execution exec);

/// All disjoint non-empty pairs (A, B), A < B, with f(A) + f(B) > f(A | B),
/// grouped by A in ascending mask order. Stops collecting after `limit`
/// hits; the second member of the result is the total number of violations.
std::pair<std::vector<std::pair<std::uint32_t, std::uint32_t>>, std::size_t>
superadditivity_violations(std::span<const Rational> values, std::size_t n, std::size_t limit,
                           Execution exec);

/// Elementwise minimum of equally sized tables.
std::vector<Rational> eventwise_min(std::span<const std::vector<Rational>> tables, Execution exec);

/// acc[i] <- min(acc[i], table[i]).
void eventwise_min_into(std::span<Rational> acc, std::span<const Rational> table, Execution exec);

/// Runs fn(0..count-1). In parallel mode the first exception by index is
/// rethrown after all iterations finish.
void for_each_index(std::size_t count, const std::function<void(std::size_t)>& fn, Execution exec);

/// Gauss-Jordan pivot on entry (r, q) of a row-major height x width matrix.
void pivot(std::span<Rational> matrix, std::size_t height, std::size_t width, std::size_t r,
           std::size_t q, Execution exec);

/// Worker threads the parallel path will use.
int parallel_width();

}  // namespace lowprob::kernels
