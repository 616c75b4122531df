#include "sccdet/automata.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <sstream>
#include <stdexcept>

namespace sccdet {

bool set_contains(const StateSet& xs, state_t x) {
  return std::binary_search(xs.begin(), xs.end(), x);
}

void set_insert(StateSet& xs, state_t x) {
  auto it = std::lower_bound(xs.begin(), xs.end(), x);
  if (it == xs.end() || *it != x) xs.insert(it, x);
}

StateSet set_union(const StateSet& a, const StateSet& b) {
  StateSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

StateSet set_intersect(const StateSet& a, const StateSet& b) {
  StateSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

StateSet set_difference(const StateSet& a, const StateSet& b) {
  StateSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

AccFormula AccFormula::make(Kind kind, color_t color, const AccFormula* lhs,
                            const AccFormula* rhs) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->color = color;
  if (lhs) node->lhs = lhs->node_;
  if (rhs) node->rhs = rhs->node_;
  return AccFormula(std::move(node));
}

AccFormula AccFormula::tt() { return make(Kind::True, 0, nullptr, nullptr); }
AccFormula AccFormula::ff() { return make(Kind::False, 0, nullptr, nullptr); }
AccFormula AccFormula::fin(color_t c) { return make(Kind::Fin, c, nullptr, nullptr); }
AccFormula AccFormula::inf(color_t c) { return make(Kind::Inf, c, nullptr, nullptr); }

AccFormula AccFormula::conj(AccFormula lhs, AccFormula rhs) {
  return make(Kind::And, 0, &lhs, &rhs);
}

AccFormula AccFormula::disj(AccFormula lhs, AccFormula rhs) {
  return make(Kind::Or, 0, &lhs, &rhs);
}

bool AccFormula::eval(const ColorSet& inf) const {
  switch (node_->kind) {
    case Kind::True:
      return true;
    case Kind::False:
      return false;
    case Kind::Fin:
      return !std::binary_search(inf.begin(), inf.end(), node_->color);
    case Kind::Inf:
      return std::binary_search(inf.begin(), inf.end(), node_->color);
    case Kind::And:
      return AccFormula(node_->lhs).eval(inf) && AccFormula(node_->rhs).eval(inf);
    case Kind::Or:
      return AccFormula(node_->lhs).eval(inf) || AccFormula(node_->rhs).eval(inf);
  }
  return false;
}

color_t AccFormula::max_color() const {
  switch (node_->kind) {
    case Kind::True:
    case Kind::False:
      return 0;
    case Kind::Fin:
    case Kind::Inf:
      return node_->color;
    case Kind::And:
    case Kind::Or:
      return std::max(AccFormula(node_->lhs).max_color(), AccFormula(node_->rhs).max_color());
  }
  return 0;
}

namespace {

// Conjunctions nested in a disjunction get parentheses (and vice versa);
// chains of one connective print flat, so reparsing rebuilds the same tree.
void print_formula(std::ostringstream& os, const AccFormula& f, AccFormula::Kind parent) {
  using Kind = AccFormula::Kind;
  switch (f.kind()) {
    case Kind::True:
      os << 't';
      return;
    case Kind::False:
      os << 'f';
      return;
    case Kind::Fin:
      os << "Fin(" << f.color() << ')';
      return;
    case Kind::Inf:
      os << "Inf(" << f.color() << ')';
      return;
    case Kind::And: {
      bool parens = parent == Kind::Or;
      if (parens) os << '(';
      print_formula(os, f.left(), Kind::And);
      os << " & ";
      print_formula(os, f.right(), Kind::And);
      if (parens) os << ')';
      return;
    }
    case Kind::Or: {
      bool parens = parent == Kind::And;
      if (parens) os << '(';
      print_formula(os, f.left(), Kind::Or);
      os << " | ";
      print_formula(os, f.right(), Kind::Or);
      if (parens) os << ')';
      return;
    }
  }
}

}  // namespace

std::string AccFormula::to_text() const {
  std::ostringstream os;
  print_formula(os, *this, Kind::True);
  return os.str();
}

bool AccFormula::operator==(const AccFormula& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case Kind::True:
    case Kind::False:
      return true;
    case Kind::Fin:
    case Kind::Inf:
      return node_->color == other.node_->color;
    case Kind::And:
    case Kind::Or:
      return AccFormula(node_->lhs) == AccFormula(other.node_->lhs) &&
             AccFormula(node_->rhs) == AccFormula(other.node_->rhs);
  }
  return false;
}

namespace {

struct AccParser {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::runtime_error("acceptance formula: " + what + " at offset " +
                             std::to_string(pos));
  }

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  bool eat_word(std::string_view w) {
    skip_ws();
    if (text.substr(pos, w.size()) == w) {
      pos += w.size();
      return true;
    }
    return false;
  }

  color_t parse_number() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected color number");
    color_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + static_cast<color_t>(text[pos] - '0');
      ++pos;
    }
    return value;
  }

  AccFormula parse_atom() {
    skip_ws();
    if (eat('(')) {
      AccFormula inner = parse_or();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (eat_word("Fin")) {
      if (!eat('(')) fail("expected '(' after Fin");
      color_t c = parse_number();
      if (!eat(')')) fail("expected ')'");
      return AccFormula::fin(c);
    }
    if (eat_word("Inf")) {
      if (!eat('(')) fail("expected '(' after Inf");
      color_t c = parse_number();
      if (!eat(')')) fail("expected ')'");
      return AccFormula::inf(c);
    }
    if (eat('t')) return AccFormula::tt();
    if (eat('f')) return AccFormula::ff();
    fail("expected t, f, Fin, Inf or '('");
  }

  AccFormula parse_and() {
    AccFormula result = parse_atom();
    while (eat('&')) result = AccFormula::conj(result, parse_atom());
    return result;
  }

  AccFormula parse_or() {
    AccFormula result = parse_and();
    while (eat('|')) result = AccFormula::disj(result, parse_and());
    return result;
  }
};

}  // namespace

AccFormula parse_acc_formula(std::string_view text) {
  AccParser parser{text};
  AccFormula result = parser.parse_or();
  parser.skip_ws();
  if (parser.pos != text.size()) parser.fail("trailing input");
  return result;
}

AccFormula acc_dual(const AccFormula& f) {
  using Kind = AccFormula::Kind;
  switch (f.kind()) {
    case Kind::True:
      return AccFormula::ff();
    case Kind::False:
      return AccFormula::tt();
    case Kind::Fin:
      return AccFormula::inf(f.color());
    case Kind::Inf:
      return AccFormula::fin(f.color());
    case Kind::And:
      return AccFormula::disj(acc_dual(f.left()), acc_dual(f.right()));
    case Kind::Or:
      return AccFormula::conj(acc_dual(f.left()), acc_dual(f.right()));
  }
  return AccFormula::tt();
}

void Nba::add_edge(state_t src, letter_t a, state_t dst, bool accepting) {
  auto& cell = out(src, a);
  auto it = std::lower_bound(cell.begin(), cell.end(), dst,
                             [](const NbaEdge& e, state_t d) { return e.dst < d; });
  if (it != cell.end() && it->dst == dst) {
    it->accepting = it->accepting || accepting;
    return;
  }
  cell.insert(it, NbaEdge{dst, accepting});
}

bool Nba::complete() const {
  for (const auto& cell : edges)
    if (cell.empty()) return false;
  return true;
}

std::size_t Nba::edge_count() const {
  std::size_t n = 0;
  for (const auto& cell : edges) n += cell.size();
  return n;
}

StateSet reached_step(const Nba& nba, const StateSet& from, letter_t a) {
  StateSet out;
  for (state_t q : from)
    for (const NbaEdge& e : nba.out(q, a)) set_insert(out, e.dst);
  return out;
}

}  // namespace sccdet
