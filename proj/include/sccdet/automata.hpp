#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace sccdet {

using state_t = std::uint32_t;
using letter_t = std::uint32_t;
using color_t = std::uint32_t;

// State and color sets are sorted, duplicate-free vectors so that every set
// has exactly one representation (sets are used as parts of hash keys).
using StateSet = std::vector<state_t>;
using ColorSet = std::vector<color_t>;

bool set_contains(const StateSet& xs, state_t x);
void set_insert(StateSet& xs, state_t x);
StateSet set_union(const StateSet& a, const StateSet& b);
StateSet set_intersect(const StateSet& a, const StateSet& b);
StateSet set_difference(const StateSet& a, const StateSet& b);

// Emerson-Lei acceptance condition: positive Boolean combination of Fin(c)
// and Inf(c) atoms. Nodes are immutable and shared, so copies are cheap.
class AccFormula {
 public:
  enum class Kind { True, False, Fin, Inf, And, Or };

  AccFormula() : AccFormula(tt()) {}

  static AccFormula tt();
  static AccFormula ff();
  static AccFormula fin(color_t c);
  static AccFormula inf(color_t c);
  static AccFormula conj(AccFormula lhs, AccFormula rhs);
  static AccFormula disj(AccFormula lhs, AccFormula rhs);

  Kind kind() const { return node_->kind; }
  color_t color() const { return node_->color; }  // Fin / Inf only
  AccFormula left() const { return AccFormula(node_->lhs); }
  AccFormula right() const { return AccFormula(node_->rhs); }

  // Truth value for a run whose transitions visit exactly the colors in
  // `inf` infinitely often: Inf(c) holds iff c is in `inf`, Fin(c) iff not.
  bool eval(const ColorSet& inf) const;

  // Largest color mentioned by any atom; 0 if there is none.
  color_t max_color() const;

  // HOA acceptance syntax, e.g. "Fin(1) | (Fin(3) & Inf(4))".
  std::string to_text() const;

  bool operator==(const AccFormula& other) const;  // structural
  bool operator!=(const AccFormula& other) const { return !(*this == other); }

 private:
  struct Node {
    Kind kind = Kind::True;
    color_t color = 0;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  explicit AccFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static AccFormula make(Kind kind, color_t color, const AccFormula* lhs, const AccFormula* rhs);

  std::shared_ptr<const Node> node_;
};

// Parses HOA acceptance syntax: t, f, Fin(c), Inf(c), &, |, parentheses,
// with & binding tighter than |. Throws std::runtime_error on bad input.
AccFormula parse_acc_formula(std::string_view text);

// De Morgan dual: swaps Fin/Inf, &/|, t/f. For every color set M,
// acc_dual(f).eval(M) == !f.eval(M).
AccFormula acc_dual(const AccFormula& f);

inline bool eval_acceptance(const AccFormula& f, const ColorSet& inf) {
  return f.eval(inf);
}

struct NbaEdge {
  state_t dst;
  bool accepting;

  bool operator==(const NbaEdge& o) const { return dst == o.dst && accepting == o.accepting; }
};

// Nondeterministic Buchi automaton with transition-based acceptance over the
// explicit alphabet {0, ..., alphabet_size-1}.
struct Nba {
  unsigned num_states = 0;
  unsigned alphabet_size = 1;
  state_t initial = 0;
  // out(q, a) == edges[q * alphabet_size + a], sorted by destination.
  std::vector<std::vector<NbaEdge>> edges;

  Nba() = default;
  Nba(unsigned states, unsigned letters, state_t init)
      : num_states(states),
        alphabet_size(letters),
        initial(init),
        edges(static_cast<std::size_t>(states) * letters) {}

  std::vector<NbaEdge>& out(state_t q, letter_t a) {
    return edges[static_cast<std::size_t>(q) * alphabet_size + a];
  }
  const std::vector<NbaEdge>& out(state_t q, letter_t a) const {
    return edges[static_cast<std::size_t>(q) * alphabet_size + a];
  }

  // Inserts (src, a, dst); a duplicate edge keeps the stronger accepting flag
  // (a run may always pick the accepting copy, so parallel copies collapse).
  void add_edge(state_t src, letter_t a, state_t dst, bool accepting);

  // Every (state, letter) cell has at least one successor.
  bool complete() const;

  std::size_t edge_count() const;

  bool operator==(const Nba& o) const {
    return num_states == o.num_states && alphabet_size == o.alphabet_size &&
           initial == o.initial && edges == o.edges;
  }
};

// Deterministic Emerson-Lei automaton: exactly one successor per
// (state, letter), each transition carrying a set of colors.
struct Dela {
  unsigned num_states = 0;
  unsigned alphabet_size = 1;
  state_t initial = 0;
  std::vector<state_t> succ;     // succ[q * alphabet_size + a]
  std::vector<ColorSet> colors;  // aligned with succ
  unsigned color_count = 0;      // transitions use colors from [0, color_count)
  AccFormula acceptance;
  std::string acc_name = "generic";  // serialized as the acc-name: header

  state_t step(state_t q, letter_t a) const {
    return succ[static_cast<std::size_t>(q) * alphabet_size + a];
  }
  const ColorSet& step_colors(state_t q, letter_t a) const {
    return colors[static_cast<std::size_t>(q) * alphabet_size + a];
  }
};

// All states reachable from `from` in one step reading `a`.
StateSet reached_step(const Nba& nba, const StateSet& from, letter_t a);

}  // namespace sccdet
