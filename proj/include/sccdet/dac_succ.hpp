#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "sccdet/automata.hpp"

namespace sccdet {

// Marks a state the labelling has not reached.
inline constexpr std::uint32_t kUnlabelled = std::numeric_limits<std::uint32_t>::max();

// Labelling of one deterministic accepting SCC: label[i] is the value of the
// i-th member (members ascending), kUnlabelled if the run tree does not pass
// through it. Finite values are distinct and, after compression, form
// exactly {1..m}.
using DacLabel = std::vector<std::uint32_t>;

// Internal transition structure of one DAC, precomputed for stepping.
struct DacView {
  StateSet members;  // ascending
  unsigned alphabet_size = 1;
  // per (member index * alphabet_size + letter): member index of the unique
  // internal successor, or kUnlabelled if the edge leaves the SCC
  std::vector<std::uint32_t> succ;
  std::vector<bool> succ_accepting;  // aligned with succ

  unsigned size() const { return static_cast<unsigned>(members.size()); }
  unsigned index_of(state_t q) const;
};

DacView make_dac_view(const Nba& nba, const StateSet& dac);

// All-unlabelled, except the initial state at value 1 when it is a member.
DacLabel dac_initial(const StateSet& dac, state_t initial);

// Rank map of sorted distinct values onto 1..k, e.g. {2,4,7} -> 2:1 4:2 7:3.
std::vector<std::pair<std::uint32_t, std::uint32_t>> rank_map(
    std::vector<std::uint32_t> values);

// States of `dac` hit by an internal transition from a labelled state.
StateSet dac_image(const DacView& view, const DacLabel& label, letter_t a);

struct DacStep {
  DacLabel label;  // compressed
  color_t color;   // in {1 .. 2|D|+1}, relative to the block base
  ColorSet bad;    // values whose runs vanished or merged away, plus |D|+1
  ColorSet good;   // values carried through an accepting edge, plus |D|+1
};

// One transition of the labelling. `entering` lists the members reached from
// outside the SCC this step (computed by the composer from the global reached
// set); they must be disjoint from the internal successor image.
DacStep det_succ(const DacView& view, const DacLabel& label, letter_t a,
                 const StateSet& entering);

}  // namespace sccdet
