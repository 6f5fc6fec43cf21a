#include "lowprob/capacity.hpp"

#include <cmath>
#include <random>

#include "lowprob/errors.hpp"

namespace lowprob {

namespace {

constexpr std::size_t kReportLimit = 1000;
constexpr std::size_t kSampledPairs = 200000;

std::string show(const Frame& f, std::uint32_t mask) { return render(f, Event(mask, f.size())); }

}  // namespace

const char* to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::Normalization: return "normalization";
    case Violation::Kind::Range: return "range";
    case Violation::Kind::SuperAdditivity: return "super-additivity";
    case Violation::Kind::Monotonicity: return "monotonicity";
  }
  return "?";
}

bool ValidationReport::has(Violation::Kind kind) const {
  for (const auto& v : violations)
    if (v.kind == kind) return true;
  return false;
}

ValidationReport validate_lower(const SetFunction& sf, Execution exec) {
  const Frame& frame = sf.frame();
  const std::size_t n = frame.size();
  const auto values = sf.values();
  ValidationReport report;
  auto add = [&](Violation::Kind kind, std::uint32_t a, std::uint32_t b, std::string detail) {
    ++report.total_violations;
    if (report.violations.size() < kReportLimit)
      report.violations.push_back({kind, Event(a, n), Event(b, n), std::move(detail)});
  };

  const std::uint32_t full = Event::full_mask(n);
  if (!values[0].is_zero()) add(Violation::Kind::Normalization, 0, 0, "value({}) = " + values[0].str() + ", expected 0");
  if (values[full] != Rational(1))
    add(Violation::Kind::Normalization, full, full, "value(OMEGA) = " + values[full].str() + ", expected 1");
  for (std::uint32_t m = 0; m <= full; ++m) {
    if (values[m].sign() < 0 || values[m] > Rational(1))
      add(Violation::Kind::Range, m, m, "value(" + show(frame, m) + ") = " + values[m].str() + " outside [0, 1]");
  }

  if (n <= kExhaustivePairFrame) {
    auto [pairs, total] = kernels::superadditivity_violations(values, n, kReportLimit, exec);
    for (auto [a, b] : pairs) {
      add(Violation::Kind::SuperAdditivity, a, b,
          "value(" + show(frame, a) + ") + value(" + show(frame, b) + ") = " + (values[a] + values[b]).str() +
              " > value(" + show(frame, a | b) + ") = " + values[a | b].str());
    }
    report.total_violations += total - pairs.size();
  } else {
    // Deterministic sample: each outcome independently lands in A, B or neither.
    std::mt19937_64 rng(0x5eedULL + n);
    std::uniform_int_distribution<int> side(0, 2);
    for (std::size_t s = 0; s < kSampledPairs; ++s) {
      std::uint32_t a = 0, b = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const int k = side(rng);
        if (k == 1) a |= 1U << i;
        if (k == 2) b |= 1U << i;
      }
      if (a == 0 || b == 0) continue;
      if (values[a] + values[b] > values[a | b])
        add(Violation::Kind::SuperAdditivity, a, b,
            "value(" + show(frame, a) + ") + value(" + show(frame, b) + ") > value(" + show(frame, a | b) + ")");
    }
    report.exhaustive = false;
    report.pair_coverage = static_cast<double>(kSampledPairs) / std::pow(3.0, static_cast<double>(n));
  }

  for (std::uint32_t m = 1; m <= full; ++m) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint32_t bit = 1U << i;
      if (!(m & bit)) continue;
      const std::uint32_t sub = m ^ bit;
      if (values[sub] > values[m])
        add(Violation::Kind::Monotonicity, sub, m,
            "value(" + show(frame, sub) + ") = " + values[sub].str() + " > value(" + show(frame, m) +
                ") = " + values[m].str());
    }
  }
  return report;
}

MobiusMass mobius(const SetFunction& sf, Execution exec) {
  std::vector<Rational> v(sf.values().begin(), sf.values().end());
  kernels::mobius_inplace(v, sf.frame().size(), exec);
  return MobiusMass(SetFunction(sf.frame(), std::move(v)));
}

SetFunction inverse_mobius(const MobiusMass& m, Execution exec) {
  const auto src = m.function().values();
  std::vector<Rational> v(src.begin(), src.end());
  kernels::zeta_inplace(v, m.frame().size(), exec);
  return SetFunction(m.frame(), std::move(v));
}

TwoMonotoneResult is_2monotone(const LowerProbability& low, Execution exec) {
  const std::size_t n = low.frame().size();
  if (n > kTwoMonotoneFrameCap)
    throw TooLarge("exhaustive 2-monotonicity check is limited to 8 outcomes");
  const auto order = canonical_masks(n);
  auto hit = kernels::first_supermodularity_violation(low.function().values(), order, exec);
  if (!hit) return {};
  return {false, std::pair{Event(hit->first, n), Event(hit->second, n)}};
}

bool is_belief_function(const LowerProbability& low) {
  const auto m = mobius(low);
  for (const auto& v : m.function().values())
    if (v.sign() < 0) return false;
  return true;
}

std::optional<bool> certify_2monotone(const LowerProbability& low) {
  if (is_belief_function(low)) return true;
  if (low.frame().size() <= kTwoMonotoneFrameCap) return is_2monotone(low).holds;
  return std::nullopt;
}

std::vector<std::pair<Event, Rational>> focal_elements(const MobiusMass& m) {
  std::vector<std::pair<Event, Rational>> out;
  const std::size_t n = m.frame().size();
  for (auto mask : canonical_masks(n)) {
    const auto& v = m.function().at_mask(mask);
    if (!v.is_zero()) out.emplace_back(Event(mask, n), v);
  }
  return out;
}

bool dominates(const LowerProbability& low1, const LowerProbability& low2) {
  require_same_frame(low1.frame(), low2.frame(), "dominates");
  const auto a = low1.function().values();
  const auto b = low2.function().values();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

}  // namespace lowprob
