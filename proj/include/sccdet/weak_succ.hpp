#pragma once

#include "sccdet/automata.hpp"
#include "sccdet/scc.hpp"

namespace sccdet {

// Breakpoint pair tracking all inherently weak SCCs at once. P holds the
// reached weak states; O holds the accepting-weak states still owing an
// accepting visit since the last breakpoint.
struct WeakState {
  StateSet p;
  StateSet o;

  bool operator==(const WeakState& other) const { return p == other.p && o == other.o; }
  bool operator!=(const WeakState& other) const { return !(*this == other); }
};

struct WeakStep {
  WeakState next;
  color_t color;  // 1 iff the source obligation set was empty, else 2
};

WeakState weak_initial(const SccClassification& cls, state_t initial);

// One transition. `s_next` must be the full one-step reached set of the
// enclosing macrostate (the per-component functions cannot see states flowing
// in from other SCCs on their own).
WeakStep weak_succ(const Nba& nba, const SccClassification& cls, const WeakState& ws,
                   letter_t a, const StateSet& s_next);

}  // namespace sccdet
