#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sccdet/automata.hpp"

namespace sccdet {

// Parse failure with a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(unsigned line, unsigned column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  unsigned line() const { return line_; }
  unsigned column() const { return column_; }

 private:
  unsigned line_;
  unsigned column_;
};

// Propositional formula over atomic-proposition indices, as written between
// [ and ] on edges.
class LabelFormula {
 public:
  enum class Kind { True, False, Ap, Not, And, Or };

  LabelFormula() : LabelFormula(tt()) {}

  static LabelFormula tt();
  static LabelFormula ff();
  static LabelFormula ap(unsigned index);
  static LabelFormula neg(LabelFormula f);
  static LabelFormula conj(LabelFormula lhs, LabelFormula rhs);
  static LabelFormula disj(LabelFormula lhs, LabelFormula rhs);

  Kind kind() const { return node_->kind; }
  unsigned ap_index() const { return node_->ap; }
  LabelFormula left() const { return LabelFormula(node_->lhs); }
  LabelFormula right() const { return LabelFormula(node_->rhs); }

  // Truth under the assignment where bit j of `letter` is the value of AP j.
  bool eval(letter_t letter) const;

 private:
  struct Node {
    Kind kind = Kind::True;
    unsigned ap = 0;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  explicit LabelFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static LabelFormula make(Kind kind, unsigned ap, const LabelFormula* lhs,
                           const LabelFormula* rhs);

  std::shared_ptr<const Node> node_;
};

// The explicit alphabet has one letter per truth assignment of the APs; the
// assignment for letter w sets AP j to bit j of w.
struct Alphabet {
  unsigned ap_count = 0;

  unsigned size() const { return 1u << ap_count; }
};

// More APs would make the explicit alphabet (2^|AP| letters) unworkable.
inline constexpr unsigned kMaxAps = 16;

struct HoaEdge {
  state_t src = 0;
  LabelFormula label;
  state_t dst = 0;
  ColorSet colors;
};

struct HoaHeaderItem {
  std::string name;   // without the trailing ':'
  std::string value;  // raw token text, space-joined
};

// One parsed HOA automaton, structurally faithful to the input.
struct HoaDocument {
  std::string version;
  unsigned state_count = 0;
  std::vector<state_t> start_states;
  std::vector<std::string> ap_names;
  unsigned acceptance_color_count = 0;
  AccFormula acceptance;
  std::string acceptance_text;
  std::string acc_name;  // empty if the header is absent
  std::string name;
  std::string tool;
  std::vector<std::string> properties;
  std::vector<HoaHeaderItem> extra_headers;  // unknown headers, kept opaque
  std::vector<HoaEdge> edges;
  std::vector<ColorSet> state_colors;  // marks written on State: lines
};

// Parses one HOA v1 automaton with explicit transition labels. Rejects
// alternation, implicit labels, state labels and a second Start: header.
HoaDocument parse_hoa(std::string_view text);

// Throws std::runtime_error if the document has more than kMaxAps APs.
Alphabet explicit_alphabet(const HoaDocument& doc);

// Letters satisfying `label`, ascending.
std::vector<letter_t> satisfying_letters(const LabelFormula& label, const Alphabet& alphabet);

// Interprets the document as a Buchi automaton (acceptance must be exactly
// Inf(0) with one color): expands edge labels over the explicit alphabet,
// folds State:-level marks onto all outgoing transitions, and makes the
// result complete by adding a fresh nonaccepting sink if any (state, letter)
// cell is empty. Already-complete automata come back unchanged.
Nba normalize(const HoaDocument& doc, const Alphabet& alphabet);

// Interprets the document as a deterministic Emerson-Lei automaton: exactly
// one successor per (state, letter) required.
Dela dela_from_hoa(const HoaDocument& doc, const Alphabet& alphabet);

// "p0", "p1", ..., used when an automaton was generated rather than parsed.
std::vector<std::string> default_ap_names(unsigned ap_count);

// Canonical text form; states ascending, letters ascending, targets
// ascending, every label a full conjunction over all APs. Parsing the result
// reproduces the automaton exactly.
std::string serialize_hoa(const Nba& nba, const std::vector<std::string>& ap_names);
std::string serialize_hoa(const Dela& dela, const std::vector<std::string>& ap_names);

}  // namespace sccdet
