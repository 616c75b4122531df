#include "sccdet/weak_succ.hpp"

#include <cassert>

namespace sccdet {

WeakState weak_initial(const SccClassification& cls, state_t initial) {
  WeakState ws;
  if (set_contains(cls.weak, initial)) ws.p.push_back(initial);
  return ws;
}

WeakStep weak_succ(const Nba& nba, const SccClassification& cls, const WeakState& ws,
                   letter_t a, const StateSet& s_next) {
  WeakStep step;
  step.color = ws.o.empty() ? 1 : 2;
  step.next.p = set_intersect(s_next, cls.weak);
  if (ws.o.empty()) {
    // breakpoint: start a fresh round of obligations
    step.next.o = set_intersect(step.next.p, cls.weak_accepting);
  } else {
    step.next.o = set_intersect(reached_step(nba, ws.o, a), cls.weak_accepting);
  }
  assert(set_difference(step.next.o, set_intersect(step.next.p, cls.weak_accepting)).empty());
  return step;
}

}  // namespace sccdet
