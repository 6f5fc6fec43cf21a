#include "lowprob/abstraction.hpp"

#include <stdexcept>

#include "lowprob/errors.hpp"

namespace lowprob {

LowerProbability marginal_restriction(const LowerProbability& low, const ProductFrame& split, Side side) {
  require_same_frame(split.joint(), low.frame(), "marginal_restriction");
  const Frame& f = side == Side::Left ? split.left() : split.right();
  SetFunction out(f);
  for (std::uint32_t mask = 0; mask < f.event_count(); ++mask) {
    const Event e(mask, f.size());
    out.set(e, low(side == Side::Left ? split.left_cylinder(e) : split.right_cylinder(e)));
  }
  return LowerProbability::unchecked(std::move(out));
}

AbstractionCheck is_abstraction(const LowerProbability& low, const Distribution& pstar, const ProductFrame& split) {
  require_same_frame(split.joint(), low.frame(), "is_abstraction");
  require_same_frame(split.joint(), pstar.frame(), "is_abstraction");
  AbstractionCheck r;
  const auto c = is_consistent(pstar, low);
  r.consistent = c.consistent;
  r.violating_event = c.violating_event;

  const auto m = mobius(low);
  const auto ma = mobius(marginal_restriction(low, split, Side::Left));
  const auto mb = mobius(marginal_restriction(low, split, Side::Right));
  r.factorizes = true;
  for (const auto& e : all_events(split.joint())) {
    Rational expected;
    if (split.is_rectangular(e)) expected = ma(split.project_left(e)) * mb(split.project_right(e));
    if (m(e) != expected) {
      r.factorizes = false;
      r.factorization_failure = e;
      break;
    }
  }
  return r;
}

AbstractionCandidate build_abstraction(const Distribution& pstar, const ProductFrame& split,
                                       const LowerProbability& low_a, const LowerProbability& low_b) {
  require_same_frame(split.joint(), pstar.frame(), "build_abstraction");
  auto joint = product_type2(split, low_a, low_b);
  const auto c = is_consistent(pstar, joint);
  return {low_a, low_b, std::move(joint), pstar, c.consistent, c.violating_event};
}

Rational raise_ceiling(const LowerProbability& low, const Event& a) {
  const Event rest = a.complement();
  std::optional<Rational> best;
  // Enumerate non-empty submasks of the complement.
  for (std::uint32_t c = rest.mask(); c != 0; c = (c - 1) & rest.mask()) {
    const Event ce(c, a.frame_size());
    Rational bound = low(a | ce) - low(ce);
    if (!best || bound < *best) best = std::move(bound);
  }
  return best ? *best : low(a);
}

ProprietyResult local_propriety_check(const AbstractionCandidate& cand, const ProductFrame& split,
                                      const Rational& step, Execution exec) {
  if (step.sign() <= 0) throw std::invalid_argument("propriety step must be positive");

  struct Raise {
    Side side;
    Event event;
    LowerProbability marginal;
  };
  std::vector<Raise> raises;
  for (const Side side : {Side::Left, Side::Right}) {
    const LowerProbability& m = side == Side::Left ? cand.low_a : cand.low_b;
    for (const auto& e : all_events(m.frame())) {
      if (e.is_empty() || e.is_full()) continue;
      const Rational v = m(e);
      if (!(v < m.upper(e))) continue;
      const Rational raised = min(v + step, raise_ceiling(m, e));
      if (!(raised > v)) continue;
      SetFunction sf = m.function();
      sf.set(e, raised);
      raises.push_back({side, e, LowerProbability::unchecked(std::move(sf))});
    }
  }

  std::vector<std::optional<AbstractionCandidate>> found(raises.size());
  kernels::for_each_index(
      raises.size(),
      [&](std::size_t i) {
        const Raise& r = raises[i];
        auto next = r.side == Side::Left ? build_abstraction(cand.target, split, r.marginal, cand.low_b)
                                         : build_abstraction(cand.target, split, cand.low_a, r.marginal);
        if (next.valid && dominates(next.joint, cand.joint) && !(next.joint == cand.joint)) found[i] = std::move(next);
      },
      exec);

  ProprietyResult out;
  for (std::size_t i = 0; i < raises.size(); ++i) {
    if (!found[i]) continue;
    out.locally_proper = false;
    out.dominating = std::move(found[i]);
    out.raised_side = raises[i].side;
    out.raised_event = raises[i].event;
    break;
  }
  return out;
}

}  // namespace lowprob
