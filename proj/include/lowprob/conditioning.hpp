#pragma once

#include <iosfwd>

#include "lowprob/capacity.hpp"

namespace lowprob {

struct Interval {
  Rational lo;
  Rational hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};

std::ostream& operator<<(std::ostream& os, const Interval& i);

/// Prior bounds [low(a), upper(a)].
Interval prior_interval(const LowerProbability& low, const Event& a);

/// Infimum and supremum of P(a & e) / P(e) over consistent P with P(e) > 0,
/// by linear-fractional programming. Throws UndefinedConditional when
/// upper(e) = 0 or no consistent P gives e positive mass.
Interval condition_envelope(const LowerProbability& low, const Event& a, const Event& e,
                            Execution exec = Execution::Parallel);

/// Closed form for 2-monotone lower probabilities:
///   lo = low(a&e) / (low(a&e) + upper(~a&e)),  hi = upper(a&e) / (upper(a&e) + low(~a&e)).
/// Throws PreconditionUnmet when 2-monotonicity is not certified or when a
/// denominator vanishes; the envelope decides those cases.
Interval condition_closed_form(const LowerProbability& low, const Event& a, const Event& e);

/// Posterior lower values for every event given e.
class PosteriorTable {
 public:
  PosteriorTable(Event given, LowerProbability posterior)
      : given_(given), posterior_(std::move(posterior)) {}
  const Event& given() const { return given_; }
  const LowerProbability& posterior() const { return posterior_; }
  Interval operator()(const Event& a) const { return {posterior_(a), posterior_.upper(a)}; }

 private:
  Event given_;
  LowerProbability posterior_;
};

inline constexpr std::size_t kConditionTableFrameCap = 8;

/// condition_envelope lower values over all 2^n events (uppers by
/// conjugacy). Throws TooLarge above 8 outcomes.
PosteriorTable condition_table(const LowerProbability& low, const Event& e, Execution exec = Execution::Parallel);

}  // namespace lowprob
