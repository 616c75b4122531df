#pragma once

#include "sccdet/automata.hpp"
#include "sccdet/determinize.hpp"

namespace sccdet {

// One pair per block-internal even color plus one for the weak colors.
inline unsigned rabin_pair_count(const ColorLayout& layout) {
  unsigned pairs = 1;
  for (const ColorBlock& block : layout.blocks) pairs += block.size;
  return pairs;
}

// Recolors a composed-acceptance automaton into Rabin form, keeping states
// and transitions untouched. Pair r uses Fin(2r) / Inf(2r+1):
//  - pair 0 tracks the weak colors: Fin-color 0 on transitions carrying
//    color 1, Inf-color 1 on every transition;
//  - a block pair for even internal color 2c gets its Inf-color where the
//    block emits exactly 2c and its Fin-color where the block emits less.
// Throws std::runtime_error if some transition's colors do not fit the
// layout (exactly one color per block range, one of {1,2} for the weak pair).
Dela to_rabin(const Dela& dela, const ColorLayout& layout);

}  // namespace sccdet
