#include "lowprob/conditioning.hpp"

#include <ostream>

#include "lowprob/errors.hpp"
#include "lowprob/ratlp.hpp"

namespace lowprob {

std::ostream& operator<<(std::ostream& os, const Interval& i) { return os << '[' << i.lo << ", " << i.hi << ']'; }

Interval prior_interval(const LowerProbability& low, const Event& a) { return {low(a), low.upper(a)}; }

namespace {

void check_event(const LowerProbability& low, const Event& e) {
  if (e.frame_size() != low.frame().size()) throw FrameMismatch("event belongs to a different frame");
}

Rational fractional_bound(const std::vector<lp::Constraint>& constraints, const Event& a, const Event& e,
                          lp::Sense sense, Execution exec) {
  const auto r = lp::solve_fractional(lp::indicator(a & e), lp::indicator(e), constraints, sense, exec);
  if (r.status != lp::Status::Optimal)
    throw UndefinedConditional("no consistent distribution gives the conditioning event positive probability");
  return r.value;
}

}  // namespace

Interval condition_envelope(const LowerProbability& low, const Event& a, const Event& e, Execution exec) {
  check_event(low, a);
  check_event(low, e);
  if (low.upper(e).is_zero()) throw UndefinedConditional("upper probability of the conditioning event is 0");
  const auto constraints = lp::event_constraints(low);
  return {fractional_bound(constraints, a, e, lp::Sense::Minimize, exec),
          fractional_bound(constraints, a, e, lp::Sense::Maximize, exec)};
}

Interval condition_closed_form(const LowerProbability& low, const Event& a, const Event& e) {
  check_event(low, a);
  check_event(low, e);
  if (low.upper(e).is_zero()) throw UndefinedConditional("upper probability of the conditioning event is 0");
  if (certify_2monotone(low) != true)
    throw PreconditionUnmet("closed-form conditioning needs a certified 2-monotone lower probability");
  const Event in = a & e;
  const Event out = a.complement() & e;
  if (in.is_empty()) return {Rational(0), Rational(0)};
  if (out.is_empty()) return {Rational(1), Rational(1)};
  const Rational lo_den = low(in) + low.upper(out);
  const Rational hi_den = low.upper(in) + low(out);
  if (lo_den.is_zero() || hi_den.is_zero())
    throw PreconditionUnmet("closed-form conditioning has a vanishing denominator");
  return {low(in) / lo_den, low.upper(in) / hi_den};
}

PosteriorTable condition_table(const LowerProbability& low, const Event& e, Execution exec) {
  check_event(low, e);
  const std::size_t n = low.frame().size();
  if (n > kConditionTableFrameCap) throw TooLarge("posterior tables are limited to 8 outcomes");
  if (low.upper(e).is_zero()) throw UndefinedConditional("upper probability of the conditioning event is 0");
  const auto constraints = lp::event_constraints(low);
  // Throws when no consistent distribution charges e.
  fractional_bound(constraints, e, e, lp::Sense::Minimize, exec);
  std::vector<Rational> values(low.frame().event_count());
  kernels::for_each_index(
      values.size(),
      [&](std::size_t mask) {
        const Event a(static_cast<std::uint32_t>(mask), n);
        // Only a & e matters; the empty and full intersections are fixed.
        if ((a & e).is_empty()) return;
        if (e.subset_of(a)) {
          values[mask] = Rational(1);
          return;
        }
        values[mask] = fractional_bound(constraints, a, e, lp::Sense::Minimize, Execution::Serial);
      },
      exec);
  return PosteriorTable(e, LowerProbability::unchecked(SetFunction(low.frame(), std::move(values))));
}

}  // namespace lowprob
