#include "sccdet/lasso.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <random>
#include <sstream>
#include <unordered_map>

#include "sccdet/scc.hpp"

namespace sccdet {

std::string lasso_to_string(const LassoWord& w) {
  std::ostringstream os;
  os << "stem=";
  for (std::size_t i = 0; i < w.stem.size(); ++i) os << (i ? "," : "") << w.stem[i];
  os << " cycle=";
  for (std::size_t i = 0; i < w.cycle.size(); ++i) os << (i ? "," : "") << w.cycle[i];
  return os.str();
}

bool nba_accepts(const Nba& nba, const LassoWord& w) {
  StateSet cur{nba.initial};
  for (letter_t a : w.stem) cur = reached_step(nba, cur, a);
  if (cur.empty()) return false;

  // product with the cycle positions, collapsed onto a one-letter alphabet
  const unsigned period = static_cast<unsigned>(w.cycle.size());
  Nba product(nba.num_states * period, 1, 0);
  for (state_t q = 0; q < nba.num_states; ++q) {
    for (unsigned i = 0; i < period; ++i) {
      for (const NbaEdge& e : nba.out(q, w.cycle[i])) {
        product.add_edge(q * period + i, 0, e.dst * period + (i + 1) % period,
                         e.accepting);
      }
    }
  }

  std::vector<bool> reachable(product.num_states, false);
  std::vector<state_t> queue;
  for (state_t q : cur) {
    reachable[q * period] = true;
    queue.push_back(q * period);
  }
  while (!queue.empty()) {
    state_t u = queue.back();
    queue.pop_back();
    for (const NbaEdge& e : product.out(u, 0)) {
      if (!reachable[e.dst]) {
        reachable[e.dst] = true;
        queue.push_back(e.dst);
      }
    }
  }

  // an accepting edge inside one SCC lies on a cycle
  std::vector<StateSet> sccs = decompose(product);
  std::vector<unsigned> scc_of(product.num_states);
  for (unsigned i = 0; i < sccs.size(); ++i)
    for (state_t q : sccs[i]) scc_of[q] = i;
  for (state_t u = 0; u < product.num_states; ++u) {
    if (!reachable[u]) continue;
    for (const NbaEdge& e : product.out(u, 0))
      if (e.accepting && scc_of[u] == scc_of[e.dst]) return true;
  }
  return false;
}

bool det_accepts(const Dela& det, const LassoWord& w) {
  state_t s = det.initial;
  for (letter_t a : w.stem) s = det.step(s, a);

  std::unordered_map<state_t, unsigned> first_seen;
  std::vector<ColorSet> iteration_colors;
  while (true) {
    auto it = first_seen.find(s);
    if (it != first_seen.end()) {
      ColorSet repeating;
      for (unsigned k = it->second; k < iteration_colors.size(); ++k)
        repeating = set_union(repeating, iteration_colors[k]);
      return det.acceptance.eval(repeating);
    }
    first_seen.emplace(s, static_cast<unsigned>(iteration_colors.size()));
    ColorSet seen;
    for (letter_t a : w.cycle) {
      for (color_t c : det.step_colors(s, a)) set_insert(seen, c);
      s = det.step(s, a);
    }
    iteration_colors.push_back(std::move(seen));
  }
}

namespace {

// odometer step through words of one length, most significant letter first
bool next_word(std::vector<letter_t>& word, unsigned alphabet) {
  for (std::size_t i = word.size(); i-- > 0;) {
    if (++word[i] < alphabet) return true;
    word[i] = 0;
  }
  return false;
}

}  // namespace

std::optional<LassoWord> bounded_equiv(const Nba& nba, const Dela& det, unsigned max_stem,
                                       unsigned max_cycle) {
  assert(nba.alphabet_size == det.alphabet_size);
  const unsigned alphabet = nba.alphabet_size;
  LassoWord w;
  for (unsigned stem_len = 0; stem_len <= max_stem; ++stem_len) {
    w.stem.assign(stem_len, 0);
    do {
      for (unsigned cycle_len = 1; cycle_len <= max_cycle; ++cycle_len) {
        w.cycle.assign(cycle_len, 0);
        do {
          if (nba_accepts(nba, w) != det_accepts(det, w)) return w;
        } while (next_word(w.cycle, alphabet));
      }
    } while (next_word(w.stem, alphabet));
  }
  return std::nullopt;
}

Nba gen_family_an(unsigned n) {
  assert(n >= 1);
  const unsigned letters = std::bit_ceil(n + 1);
  const state_t q0 = 0;
  const state_t sink = n + 1;
  Nba nba(n + 2, letters, q0);
  for (letter_t l = 0; l < letters; ++l) nba.add_edge(q0, l, q0, false);
  for (unsigned i = 1; i <= n; ++i) {
    nba.add_edge(q0, i, i, true);
    nba.add_edge(i, i, i, true);
    nba.add_edge(i, 0, i, false);
    for (letter_t l = 1; l < letters; ++l)
      if (l != i) nba.add_edge(i, l, sink, false);
  }
  for (letter_t l = 0; l < letters; ++l) nba.add_edge(sink, l, sink, false);
  return nba;
}

Nba gen_random_nba(const RandomNbaParams& params) {
  std::mt19937_64 rng(params.seed);
  // hand-rolled draws: the standard distributions differ between library
  // implementations, mt19937_64 itself does not
  auto below = [&rng](unsigned bound) { return static_cast<unsigned>(rng() % bound); };
  auto chance = [&rng](double prob) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < prob;
  };

  const double density = std::max(1.0, params.transition_density);
  const unsigned guaranteed = static_cast<unsigned>(density);
  const double extra = density - guaranteed;

  Nba nba(params.states, params.alphabet_size, 0);
  for (state_t q = 0; q < params.states; ++q) {
    for (letter_t a = 0; a < params.alphabet_size; ++a) {
      unsigned want = std::min(params.states, guaranteed + (chance(extra) ? 1u : 0u));
      auto& cell = nba.out(q, a);
      while (cell.size() < want) {
        state_t target = below(params.states);
        bool present = std::any_of(cell.begin(), cell.end(),
                                   [target](const NbaEdge& e) { return e.dst == target; });
        if (present) continue;
        nba.add_edge(q, a, target, chance(params.accepting_density));
      }
    }
  }
  return nba;
}

}  // namespace sccdet
