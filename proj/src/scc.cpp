#include "sccdet/scc.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace sccdet {

const char* scc_kind_name(SccKind kind) {
  switch (kind) {
    case SccKind::IwcAccepting:
      return "IWC_ACCEPTING";
    case SccKind::IwcNonaccepting:
      return "IWC_NONACCEPTING";
    case SccKind::Dac:
      return "DAC";
    case SccKind::Nac:
      return "NAC";
  }
  return "?";
}

namespace {

constexpr unsigned kUnvisited = std::numeric_limits<unsigned>::max();

}  // namespace

std::vector<StateSet> decompose(const Nba& nba) {
  const unsigned n = nba.num_states;

  // flattened successor lists; parallel edges over several letters are fine
  std::vector<std::vector<state_t>> succs(n);
  for (state_t q = 0; q < n; ++q)
    for (letter_t a = 0; a < nba.alphabet_size; ++a)
      for (const NbaEdge& e : nba.out(q, a)) succs[q].push_back(e.dst);

  std::vector<unsigned> index(n, kUnvisited);
  std::vector<unsigned> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<state_t> stack;
  std::vector<StateSet> sccs;
  unsigned next_index = 0;

  struct Frame {
    state_t q;
    std::size_t next_succ;
  };
  std::vector<Frame> frames;

  for (state_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!frames.empty()) {
      Frame& frame = frames.back();
      state_t q = frame.q;
      if (frame.next_succ < succs[q].size()) {
        state_t succ = succs[q][frame.next_succ++];
        if (index[succ] == kUnvisited) {
          index[succ] = low[succ] = next_index++;
          stack.push_back(succ);
          on_stack[succ] = true;
          frames.push_back({succ, 0});
        } else if (on_stack[succ]) {
          low[q] = std::min(low[q], index[succ]);
        }
        continue;
      }
      frames.pop_back();
      if (!frames.empty()) low[frames.back().q] = std::min(low[frames.back().q], low[q]);
      if (low[q] == index[q]) {
        StateSet members;
        state_t member;
        do {
          member = stack.back();
          stack.pop_back();
          on_stack[member] = false;
          members.push_back(member);
        } while (member != q);
        std::sort(members.begin(), members.end());
        sccs.push_back(std::move(members));
      }
    }
  }
  return sccs;
}

namespace {

struct InternalEdge {
  state_t src;
  state_t dst;
  bool accepting;
};

// Depth-first cycle check on the nonaccepting internal edges of one SCC.
bool has_nonaccepting_cycle(const StateSet& members, const std::vector<InternalEdge>& edges) {
  std::vector<std::vector<state_t>> adj(members.size());
  auto local = [&](state_t q) {
    return static_cast<unsigned>(std::lower_bound(members.begin(), members.end(), q) -
                                 members.begin());
  };
  for (const InternalEdge& e : edges)
    if (!e.accepting) adj[local(e.src)].push_back(local(e.dst));

  enum class Mark : std::uint8_t { White, Gray, Black };
  std::vector<Mark> mark(members.size(), Mark::White);
  struct Frame {
    unsigned v;
    std::size_t next;
  };
  std::vector<Frame> frames;
  for (unsigned start = 0; start < members.size(); ++start) {
    if (mark[start] != Mark::White) continue;
    mark[start] = Mark::Gray;
    frames.push_back({start, 0});
    while (!frames.empty()) {
      Frame& frame = frames.back();
      if (frame.next < adj[frame.v].size()) {
        unsigned succ = adj[frame.v][frame.next++];
        if (mark[succ] == Mark::Gray) return true;
        if (mark[succ] == Mark::White) {
          mark[succ] = Mark::Gray;
          frames.push_back({succ, 0});
        }
        continue;
      }
      mark[frame.v] = Mark::Black;
      frames.pop_back();
    }
  }
  return false;
}

}  // namespace

SccClassification classify(const Nba& nba, const std::vector<StateSet>& sccs) {
  SccClassification out;
  out.sccs = sccs;
  out.scc_of.assign(nba.num_states, 0);
  for (unsigned i = 0; i < sccs.size(); ++i)
    for (state_t q : sccs[i]) out.scc_of[q] = i;

  out.kind.reserve(sccs.size());
  for (unsigned i = 0; i < sccs.size(); ++i) {
    const StateSet& members = sccs[i];
    std::vector<InternalEdge> internal;
    bool has_accepting = false;
    for (state_t q : members) {
      for (letter_t a = 0; a < nba.alphabet_size; ++a) {
        for (const NbaEdge& e : nba.out(q, a)) {
          if (out.scc_of[e.dst] != i) continue;
          internal.push_back({q, e.dst, e.accepting});
          has_accepting = has_accepting || e.accepting;
        }
      }
    }

    SccKind kind;
    if (!has_accepting) {
      kind = SccKind::IwcNonaccepting;
    } else if (!has_nonaccepting_cycle(members, internal)) {
      kind = SccKind::IwcAccepting;
    } else {
      bool deterministic = true;
      for (state_t q : members) {
        for (letter_t a = 0; a < nba.alphabet_size && deterministic; ++a) {
          unsigned inside = 0;
          for (const NbaEdge& e : nba.out(q, a))
            if (out.scc_of[e.dst] == i) ++inside;
          deterministic = inside <= 1;
        }
        if (!deterministic) break;
      }
      kind = deterministic ? SccKind::Dac : SccKind::Nac;
    }
    out.kind.push_back(kind);

    switch (kind) {
      case SccKind::IwcAccepting:
        for (state_t q : members) {
          set_insert(out.weak, q);
          set_insert(out.weak_accepting, q);
        }
        break;
      case SccKind::IwcNonaccepting:
        for (state_t q : members) set_insert(out.weak, q);
        break;
      case SccKind::Dac:
        out.dacs.push_back(members);
        break;
      case SccKind::Nac:
        out.nacs.push_back(members);
        break;
    }
  }

  auto by_smallest_member = [](const StateSet& a, const StateSet& b) {
    return a.front() < b.front();
  };
  std::sort(out.dacs.begin(), out.dacs.end(), by_smallest_member);
  std::sort(out.nacs.begin(), out.nacs.end(), by_smallest_member);
  return out;
}

}  // namespace sccdet
