#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lowprob/set_function.hpp"

namespace lowprob {

// Line-oriented text format:
//
//   # comment
//   frame: h1h2 h1t2 t1h2 t1t2
//   kind: lower            (lower | mobius | dist)
//   default=vacuous        (optional, kind lower only)
//   {h1h2} = 1/16
//   OMEGA = 1
//
// Rationals are exact: `p/q` or an integer.

enum class EntryKind { Lower, Mobius, Dist };

const char* to_string(EntryKind k);

struct CapacityFile {
  Frame frame;
  EntryKind kind = EntryKind::Lower;
  bool default_vacuous = false;
  /// In file order.
  std::vector<std::pair<Event, Rational>> entries;
  /// Source line of each entry.
  std::vector<std::size_t> lines;
};

/// Throws ParseError (with line number) on syntax errors, unknown labels,
/// duplicate events, missing entries and mass-sum violations.
CapacityFile parse_capacity_file(std::string_view text);
CapacityFile load_capacity_file(const std::string& path);

/// Set function described by the file: lower values as given (kind lower),
/// inverse Möbius of the masses (kind mobius), or the event probabilities of
/// the distribution (kind dist). Not yet validated as a lower probability.
SetFunction to_set_function(const CapacityFile& file);

/// Validated lower probability; throws std::invalid_argument on axiom failures.
LowerProbability to_lower(const CapacityFile& file);

/// Throws std::invalid_argument unless kind is dist.
Distribution to_distribution(const CapacityFile& file);

/// Every event in canonical order, `kind: lower` (or `kind: mobius`).
std::string render_capacity_file(const SetFunction& values, EntryKind kind = EntryKind::Lower);
std::string render_distribution_file(const Distribution& p);

}  // namespace lowprob
