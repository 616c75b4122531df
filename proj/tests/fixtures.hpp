#pragma once

#include "sccdet/automata.hpp"

namespace sccdet::fixtures {

// Seven states over {a=0, b=1}; one SCC of each kind.  q0,q1 feed each
// other nondeterministically (NAC), q2,q3 are weak accepting, q4,q5 form a
// deterministic accepting cycle, q6 is a nonaccepting trap.
inline Nba mixed_nba() {
  Nba nba;
  nba.num_states = 7;
  nba.alphabet_size = 2;
  nba.initial = 0;
  nba.edges.assign(14, {});
  nba.add_edge(0, 0, 0, true);
  nba.add_edge(0, 0, 1, false);
  nba.add_edge(0, 1, 0, false);
  nba.add_edge(1, 0, 0, false);
  nba.add_edge(1, 0, 2, false);
  nba.add_edge(1, 1, 1, false);
  nba.add_edge(2, 0, 3, true);
  nba.add_edge(2, 0, 4, false);
  nba.add_edge(2, 1, 6, false);
  nba.add_edge(3, 0, 2, true);
  nba.add_edge(3, 0, 6, false);
  nba.add_edge(3, 1, 6, false);
  nba.add_edge(4, 0, 5, true);
  nba.add_edge(4, 1, 4, false);
  nba.add_edge(5, 0, 6, false);
  nba.add_edge(5, 1, 4, false);
  nba.add_edge(5, 1, 6, false);
  nba.add_edge(6, 0, 6, false);
  nba.add_edge(6, 1, 6, false);
  return nba;
}

// The weak part of mixed_nba in isolation: 0,1 accepting cycle, 2 trap.
// External successors of the cycle are redirected to the trap.
inline Nba weak_nba() {
  Nba nba;
  nba.num_states = 3;
  nba.alphabet_size = 2;
  nba.initial = 0;
  nba.edges.assign(6, {});
  nba.add_edge(0, 0, 1, true);
  nba.add_edge(0, 0, 2, false);
  nba.add_edge(0, 1, 2, false);
  nba.add_edge(1, 0, 0, true);
  nba.add_edge(1, 0, 2, false);
  nba.add_edge(1, 1, 2, false);
  nba.add_edge(2, 0, 2, false);
  nba.add_edge(2, 1, 2, false);
  return nba;
}

// mixed_nba restricted to q2..q6 (renumbered 0..4): weak and deterministic
// accepting SCCs only, no NAC.
inline Nba elevator_nba() {
  Nba nba;
  nba.num_states = 5;
  nba.alphabet_size = 2;
  nba.initial = 0;
  nba.edges.assign(10, {});
  nba.add_edge(0, 0, 1, true);
  nba.add_edge(0, 0, 2, false);
  nba.add_edge(0, 1, 4, false);
  nba.add_edge(1, 0, 0, true);
  nba.add_edge(1, 0, 4, false);
  nba.add_edge(1, 1, 4, false);
  nba.add_edge(2, 0, 3, true);
  nba.add_edge(2, 1, 2, false);
  nba.add_edge(3, 0, 4, false);
  nba.add_edge(3, 1, 2, false);
  nba.add_edge(3, 1, 4, false);
  nba.add_edge(4, 0, 4, false);
  nba.add_edge(4, 1, 4, false);
  return nba;
}

// The nondeterministic pair from mixed_nba with the onward states collapsed
// into a single nonaccepting trap: exactly one NAC plus the trap.
inline Nba nac_only_nba() {
  Nba nba;
  nba.num_states = 3;
  nba.alphabet_size = 2;
  nba.initial = 0;
  nba.edges.assign(6, {});
  nba.add_edge(0, 0, 0, true);
  nba.add_edge(0, 0, 1, false);
  nba.add_edge(0, 1, 0, false);
  nba.add_edge(1, 0, 0, false);
  nba.add_edge(1, 0, 2, false);
  nba.add_edge(1, 1, 1, false);
  nba.add_edge(2, 0, 2, false);
  nba.add_edge(2, 1, 2, false);
  return nba;
}

}  // namespace sccdet::fixtures
