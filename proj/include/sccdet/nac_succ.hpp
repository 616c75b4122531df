#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sccdet/automata.hpp"
#include "sccdet/dac_succ.hpp"

namespace sccdet {

// Strictly ascending list of integers naming one path of run-tree branch
// points; the empty list marks a state the labelling does not reach.
using LabelList = std::vector<std::uint32_t>;

// Labelling of one nondeterministic accepting SCC, aligned with the member
// states in ascending order.
using NacLabel = std::vector<LabelList>;

// List order: pad the shorter list with +infinity and compare
// lexicographically. A proper extension comes before its prefix
// (<1,3,5> < <1,3>), larger entries come later (<1,3,5> > <1,2>), and the
// empty list is the largest of all.
int list_compare(const LabelList& a, const LabelList& b);
inline bool list_less(const LabelList& a, const LabelList& b) {
  return list_compare(a, b) < 0;
}

// Internal transition structure of one NAC, grouped by target so the step
// can visit targets and their predecessors in state order.
struct NacView {
  StateSet members;  // ascending
  unsigned alphabet_size = 1;
  // per (target member index * alphabet_size + letter): internal predecessor
  // member indices ascending, each with its edge's accepting flag
  std::vector<std::vector<std::pair<std::uint32_t, bool>>> preds;

  unsigned size() const { return static_cast<unsigned>(members.size()); }
  unsigned index_of(state_t q) const;
};

NacView make_nac_view(const Nba& nba, const StateSet& nac);

// All-empty, except the initial state at <1> when it is a member.
NacLabel nac_initial(const StateSet& nac, state_t initial);

// States of `nac` hit by an internal transition from a labelled state.
StateSet nac_image(const NacView& view, const NacLabel& label, letter_t a);

struct NacStep {
  NacLabel label;  // prefix-closed and compressed
  color_t color;   // in {1 .. 2|N|+1}, relative to the block base
  ColorSet bad;    // integers that disappeared, plus |N|+1
  ColorSet good;   // last elements of truncated branches, plus |N|+1
};

// One transition of the labelling. Each labelled predecessor offers its list
// to every internal successor, extended by a fresh number when the edge is
// accepting; every target keeps the smallest offer. Entering members then
// receive fresh singletons in state order. Branches whose proper prefixes
// all survived are kept; the rest are truncated to their shortest vanished
// prefix, which signals an accepting merge (good). Finally the integers are
// compressed to 1..m by rank.
NacStep nondet_succ(const NacView& view, const NacLabel& label, letter_t a,
                    const StateSet& entering);

}  // namespace sccdet
