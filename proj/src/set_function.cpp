#include "lowprob/set_function.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "lowprob/capacity.hpp"
#include "lowprob/errors.hpp"

namespace lowprob {

SetFunction::SetFunction(Frame frame)
    : frame_(std::make_shared<const Frame>(std::move(frame))), values_(frame_->event_count()) {}

SetFunction::SetFunction(Frame frame, std::vector<Rational> values)
    : frame_(std::make_shared<const Frame>(std::move(frame))), values_(std::move(values)) {
  if (values_.size() != frame_->event_count())
    throw std::invalid_argument("set function needs one value per event");
}

Distribution::Distribution(Frame frame, std::vector<Rational> masses)
    : frame_(std::make_shared<const Frame>(std::move(frame))), masses_(std::move(masses)) {
  if (masses_.size() != frame_->size())
    throw std::invalid_argument("distribution needs one mass per outcome");
  Rational total;
  for (const auto& m : masses_) {
    if (m.sign() < 0) throw std::invalid_argument("negative probability mass " + m.str());
    total += m;
  }
  if (total != Rational(1))
    throw std::invalid_argument("probability masses sum to " + total.str() + ", not 1");
}

Rational Distribution::prob(const Event& e) const {
  Rational total;
  for (std::size_t i = 0; i < masses_.size(); ++i)
    if (e.contains(i)) total += masses_[i];
  return total;
}

std::vector<Rational> Distribution::event_table() const {
  std::vector<Rational> table(frame_->event_count());
  for (std::size_t m = 1; m < table.size(); ++m) {
    const std::size_t low_bit = m & (~m + 1);
    table[m] = table[m ^ low_bit] + masses_[static_cast<std::size_t>(std::countr_zero(low_bit))];
  }
  return table;
}

LowerProbability LowerProbability::from(SetFunction sf) {
  const auto report = validate_lower(sf);
  if (!report.ok()) {
    std::ostringstream msg;
    msg << "not a lower probability: " << report.total_violations << " violation(s)";
    const auto& v = report.violations.front();
    msg << "; first: " << to_string(v.kind) << " " << v.detail;
    throw std::invalid_argument(msg.str());
  }
  return LowerProbability(std::move(sf));
}

LowerProbability LowerProbability::vacuous(const Frame& frame) {
  SetFunction sf(frame);
  sf.set(frame.full_event(), Rational(1));
  return LowerProbability(std::move(sf));
}

LowerProbability LowerProbability::of(const Distribution& p) {
  return LowerProbability(SetFunction(p.frame(), p.event_table()));
}

Rational LowerProbability::upper(const Event& e) const { return Rational(1) - sf_[e.complement()]; }

Rational MobiusMass::total() const {
  Rational t;
  for (const auto& v : m_.values()) t += v;
  return t;
}

void require_same_frame(const Frame& a, const Frame& b, const char* what) {
  if (!(a == b)) throw FrameMismatch(std::string(what) + ": operands are on different frames");
}

}  // namespace lowprob
