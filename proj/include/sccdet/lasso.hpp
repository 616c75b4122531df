#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sccdet/automata.hpp"

namespace sccdet {

// Ultimately periodic word: the stem once, then the cycle forever.
struct LassoWord {
  std::vector<letter_t> stem;
  std::vector<letter_t> cycle;  // nonempty

  bool operator==(const LassoWord& o) const { return stem == o.stem && cycle == o.cycle; }
};

// Diagnostic form, e.g. `stem=0,1 cycle=0`.
std::string lasso_to_string(const LassoWord& w);

// True iff some run over the word takes accepting transitions infinitely
// often. Decided on the product of the automaton with the cycle positions:
// accepted iff a cycle through an accepting edge is reachable from some
// (q, 0) with q reached over the stem. Works for incomplete automata too.
bool nba_accepts(const Nba& nba, const LassoWord& w);

// Follows the unique run of a deterministic automaton, finds the repeating
// part by revisiting a cycle-boundary state, and evaluates the acceptance
// formula on the union of colors along the repeating part. Terminates within
// num_states cycle iterations.
bool det_accepts(const Dela& det, const LassoWord& w);

// Compares the automata on every stem of length <= max_stem and cycle of
// length 1..max_cycle (shorter first, lexicographic within one length);
// returns the first disagreement, if any.
std::optional<LassoWord> bounded_equiv(const Nba& nba, const Dela& det, unsigned max_stem,
                                       unsigned max_cycle);

// Family with one single-state deterministic accepting SCC per letter:
// q0 self-loops on every letter and seeds q1..qn with accepting edges; qi
// loops on letter i (accepting) and letter 0 (nonaccepting); every other
// letter drops qi into the sink. The alphabet {0..n} is padded up to the
// next power of two so the automaton serializes; padding letters act like
// foreign letters (qi to sink, q0 and the sink keep looping).
Nba gen_family_an(unsigned n);

struct RandomNbaParams {
  std::uint64_t seed = 0;
  unsigned states = 1;
  unsigned alphabet_size = 2;
  double transition_density = 1.5;  // average successors per (state, letter), >= 1
  double accepting_density = 0.3;   // chance that an edge is accepting
};

// Reproducible pseudo-random automaton: equal parameters give the identical
// automaton. Every (state, letter) cell gets at least one successor, so the
// result is always complete.
Nba gen_random_nba(const RandomNbaParams& params);

}  // namespace sccdet
