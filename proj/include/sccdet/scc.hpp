#pragma once

#include <vector>

#include "sccdet/automata.hpp"

namespace sccdet {

enum class SccKind { IwcAccepting, IwcNonaccepting, Dac, Nac };

// Fixed names used by the classify subcommand: IWC_ACCEPTING,
// IWC_NONACCEPTING, DAC, NAC.
const char* scc_kind_name(SccKind kind);

struct SccClassification {
  std::vector<unsigned> scc_of;  // state -> index into sccs
  std::vector<StateSet> sccs;    // reverse topological order
  std::vector<SccKind> kind;     // aligned with sccs
  StateSet weak;                 // W: states of all inherently weak SCCs
  StateSet weak_accepting;       // WA: states of accepting inherently weak SCCs
  std::vector<StateSet> dacs;    // each ordered by smallest member state
  std::vector<StateSet> nacs;
};

// Maximal SCCs, in reverse topological order: every edge leaving an SCC
// points into an SCC that appears earlier in the list. Trivial SCCs (single
// state without a self-loop) are included.
std::vector<StateSet> decompose(const Nba& nba);

// Sorts each SCC into one of four kinds:
//  - no internal accepting transition (trivial and nonaccepting SCCs
//    included): IWC_NONACCEPTING;
//  - accepting and every internal cycle takes an accepting transition
//    (equivalently, the internal nonaccepting edges form no cycle):
//    IWC_ACCEPTING;
//  - otherwise DAC when at most one internal successor per (state, letter),
//    else NAC.
SccClassification classify(const Nba& nba, const std::vector<StateSet>& sccs);

inline SccClassification classify(const Nba& nba) { return classify(nba, decompose(nba)); }

}  // namespace sccdet
