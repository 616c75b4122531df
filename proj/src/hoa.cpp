#include "sccdet/hoa.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sccdet {

LabelFormula LabelFormula::make(Kind kind, unsigned ap, const LabelFormula* lhs,
                                const LabelFormula* rhs) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->ap = ap;
  if (lhs) node->lhs = lhs->node_;
  if (rhs) node->rhs = rhs->node_;
  return LabelFormula(std::move(node));
}

LabelFormula LabelFormula::tt() { return make(Kind::True, 0, nullptr, nullptr); }
LabelFormula LabelFormula::ff() { return make(Kind::False, 0, nullptr, nullptr); }
LabelFormula LabelFormula::ap(unsigned index) { return make(Kind::Ap, index, nullptr, nullptr); }
LabelFormula LabelFormula::neg(LabelFormula f) { return make(Kind::Not, 0, &f, nullptr); }
LabelFormula LabelFormula::conj(LabelFormula lhs, LabelFormula rhs) {
  return make(Kind::And, 0, &lhs, &rhs);
}
LabelFormula LabelFormula::disj(LabelFormula lhs, LabelFormula rhs) {
  return make(Kind::Or, 0, &lhs, &rhs);
}

bool LabelFormula::eval(letter_t letter) const {
  switch (node_->kind) {
    case Kind::True:
      return true;
    case Kind::False:
      return false;
    case Kind::Ap:
      return (letter >> node_->ap) & 1u;
    case Kind::Not:
      return !left().eval(letter);
    case Kind::And:
      return left().eval(letter) && right().eval(letter);
    case Kind::Or:
      return left().eval(letter) || right().eval(letter);
  }
  return false;
}

namespace {

struct Token {
  enum class Type { Ident, Header, Int, String, Punct, Body, End, Eof };

  Type type = Type::Eof;
  std::string text;          // Ident/Header/String content, Punct char
  unsigned long value = 0;   // Int
  unsigned line = 1;
  unsigned col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  const Token& peek() {
    if (!has_pending_) {
      pending_ = scan();
      has_pending_ = true;
    }
    return pending_;
  }

  Token next() {
    Token t = peek();
    has_pending_ = false;
    return t;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  unsigned line_ = 1;
  unsigned col_ = 1;
  Token pending_;
  bool has_pending_ = false;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(line_, col_, what);
  }

  char current() const { return text_[pos_]; }
  bool done() const { return pos_ >= text_.size(); }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space_and_comments() {
    while (!done()) {
      char c = current();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '*') {
        advance();
        advance();
        while (!done() && !(current() == '*' && pos_ + 1 < text_.size() &&
                            text_[pos_ + 1] == '/')) {
          advance();
        }
        if (done()) fail("unterminated comment");
        advance();
        advance();
      } else {
        break;
      }
    }
  }

  static bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
  }

  Token scan() {
    skip_space_and_comments();
    Token t;
    t.line = line_;
    t.col = col_;
    if (done()) {
      t.type = Token::Type::Eof;
      return t;
    }
    char c = current();
    if (c == '-') {
      // only the section markers start with '-'
      static constexpr std::string_view kBody = "--BODY--";
      static constexpr std::string_view kEnd = "--END--";
      if (text_.substr(pos_, kBody.size()) == kBody) {
        for (std::size_t i = 0; i < kBody.size(); ++i) advance();
        t.type = Token::Type::Body;
        return t;
      }
      if (text_.substr(pos_, kEnd.size()) == kEnd) {
        for (std::size_t i = 0; i < kEnd.size(); ++i) advance();
        t.type = Token::Type::End;
        return t;
      }
      fail("unexpected '-'");
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      unsigned long value = 0;
      while (!done() && std::isdigit(static_cast<unsigned char>(current()))) {
        value = value * 10 + static_cast<unsigned long>(current() - '0');
        if (value > 100000000ul) fail("number too large");
        advance();
      }
      t.type = Token::Type::Int;
      t.value = value;
      return t;
    }
    if (ident_start(c)) {
      std::string name;
      while (!done() && ident_char(current())) {
        name.push_back(current());
        advance();
      }
      if (!done() && current() == ':') {
        advance();
        t.type = Token::Type::Header;
      } else {
        t.type = Token::Type::Ident;
      }
      t.text = std::move(name);
      return t;
    }
    if (c == '"') {
      advance();
      std::string content;
      while (!done() && current() != '"') {
        if (current() == '\\') {
          advance();
          if (done()) break;
        }
        content.push_back(current());
        advance();
      }
      if (done()) fail("unterminated string");
      advance();
      t.type = Token::Type::String;
      t.text = std::move(content);
      return t;
    }
    if (std::string_view("{}[]()&|!").find(c) != std::string_view::npos) {
      advance();
      t.type = Token::Type::Punct;
      t.text = std::string(1, c);
      return t;
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

[[noreturn]] void fail_at(const Token& t, const std::string& what) {
  throw ParseError(t.line, t.col, what);
}

bool is_punct(const Token& t, char c) {
  return t.type == Token::Type::Punct && t.text[0] == c;
}

unsigned expect_int(Lexer& lex, const char* what) {
  Token t = lex.next();
  if (t.type != Token::Type::Int) fail_at(t, std::string("expected ") + what);
  return static_cast<unsigned>(t.value);
}

void expect_punct(Lexer& lex, char c) {
  Token t = lex.next();
  if (!is_punct(t, c)) fail_at(t, std::string("expected '") + c + "'");
}

// acceptance ::= acc-and ('|' acc-and)* ; acc-and ::= acc-atom ('&' acc-atom)*
AccFormula parse_acc_expr(Lexer& lex);

AccFormula parse_acc_atom(Lexer& lex) {
  Token t = lex.next();
  if (is_punct(t, '(')) {
    AccFormula inner = parse_acc_expr(lex);
    expect_punct(lex, ')');
    return inner;
  }
  if (t.type == Token::Type::Ident) {
    if (t.text == "t") return AccFormula::tt();
    if (t.text == "f") return AccFormula::ff();
    if (t.text == "Fin" || t.text == "Inf") {
      expect_punct(lex, '(');
      if (is_punct(lex.peek(), '!'))
        fail_at(lex.peek(), "complemented acceptance sets are not supported");
      unsigned color = expect_int(lex, "color");
      expect_punct(lex, ')');
      return t.text == "Fin" ? AccFormula::fin(color) : AccFormula::inf(color);
    }
  }
  fail_at(t, "expected acceptance atom (t, f, Fin, Inf)");
}

AccFormula parse_acc_and(Lexer& lex) {
  AccFormula result = parse_acc_atom(lex);
  while (is_punct(lex.peek(), '&')) {
    lex.next();
    result = AccFormula::conj(result, parse_acc_atom(lex));
  }
  return result;
}

AccFormula parse_acc_expr(Lexer& lex) {
  AccFormula result = parse_acc_and(lex);
  while (is_punct(lex.peek(), '|')) {
    lex.next();
    result = AccFormula::disj(result, parse_acc_and(lex));
  }
  return result;
}

// label ::= lab-or; lab-or ::= lab-and ('|' lab-and)*;
// lab-and ::= lab-atom ('&' lab-atom)*; lab-atom ::= '!' lab-atom | '(' lab-or ')'
//           | 't' | 'f' | AP-index
LabelFormula parse_label_expr(Lexer& lex, unsigned ap_count);

LabelFormula parse_label_atom(Lexer& lex, unsigned ap_count) {
  Token t = lex.next();
  if (is_punct(t, '!')) return LabelFormula::neg(parse_label_atom(lex, ap_count));
  if (is_punct(t, '(')) {
    LabelFormula inner = parse_label_expr(lex, ap_count);
    expect_punct(lex, ')');
    return inner;
  }
  if (t.type == Token::Type::Int) {
    if (t.value >= ap_count) fail_at(t, "AP index out of range");
    return LabelFormula::ap(static_cast<unsigned>(t.value));
  }
  if (t.type == Token::Type::Ident) {
    if (t.text == "t") return LabelFormula::tt();
    if (t.text == "f") return LabelFormula::ff();
  }
  fail_at(t, "expected label atom (t, f, !, AP index)");
}

LabelFormula parse_label_and(Lexer& lex, unsigned ap_count) {
  LabelFormula result = parse_label_atom(lex, ap_count);
  while (is_punct(lex.peek(), '&')) {
    lex.next();
    result = LabelFormula::conj(result, parse_label_atom(lex, ap_count));
  }
  return result;
}

LabelFormula parse_label_expr(Lexer& lex, unsigned ap_count) {
  LabelFormula result = parse_label_and(lex, ap_count);
  while (is_punct(lex.peek(), '|')) {
    lex.next();
    result = LabelFormula::disj(result, parse_label_and(lex, ap_count));
  }
  return result;
}

ColorSet parse_color_marks(Lexer& lex, unsigned color_count) {
  // caller consumed '{'
  ColorSet colors;
  while (true) {
    Token t = lex.next();
    if (is_punct(t, '}')) break;
    if (t.type != Token::Type::Int) fail_at(t, "expected color number or '}'");
    if (t.value >= color_count) fail_at(t, "color out of range");
    set_insert(colors, static_cast<color_t>(t.value));
  }
  return colors;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

bool header_like(const Token& t) {
  return t.type == Token::Type::Header || t.type == Token::Type::Body ||
         t.type == Token::Type::Eof;
}

bool formula_has_atoms(const AccFormula& f) {
  switch (f.kind()) {
    case AccFormula::Kind::Fin:
    case AccFormula::Kind::Inf:
      return true;
    case AccFormula::Kind::And:
    case AccFormula::Kind::Or:
      return formula_has_atoms(f.left()) || formula_has_atoms(f.right());
    default:
      return false;
  }
}

}  // namespace

HoaDocument parse_hoa(std::string_view text) {
  Lexer lex(text);
  HoaDocument doc;

  Token t = lex.next();
  if (t.type != Token::Type::Header || t.text != "HOA")
    fail_at(t, "expected 'HOA:' at start of input");
  Token version = lex.next();
  if (version.type != Token::Type::Ident) fail_at(version, "expected format version");
  doc.version = version.text;
  if (doc.version != "v1") fail_at(version, "unsupported HOA version '" + doc.version + "'");

  bool saw_states = false;
  bool saw_start = false;
  bool saw_acceptance = false;
  Token start_token;

  while (true) {
    t = lex.next();
    if (t.type == Token::Type::Body) break;
    if (t.type == Token::Type::Eof) fail_at(t, "missing --BODY--");
    if (t.type != Token::Type::Header) fail_at(t, "expected header item or --BODY--");

    if (t.text == "States") {
      if (saw_states) fail_at(t, "duplicate States: header");
      saw_states = true;
      doc.state_count = expect_int(lex, "state count");
    } else if (t.text == "Start") {
      if (saw_start)
        fail_at(t, "second Start: header (multiple initial states are not supported)");
      saw_start = true;
      start_token = lex.peek();
      doc.start_states.push_back(expect_int(lex, "start state"));
      if (is_punct(lex.peek(), '&'))
        fail_at(lex.peek(), "initial state conjunction (alternation) is not supported");
    } else if (t.text == "AP") {
      unsigned count = expect_int(lex, "AP count");
      for (unsigned i = 0; i < count; ++i) {
        Token name = lex.next();
        if (name.type != Token::Type::String)
          fail_at(name, "AP count mismatch: expected " + std::to_string(count) +
                            " quoted names");
        doc.ap_names.push_back(name.text);
      }
      if (lex.peek().type == Token::Type::String)
        fail_at(lex.peek(), "AP count mismatch: more names than declared");
    } else if (t.text == "Acceptance") {
      if (saw_acceptance) fail_at(t, "duplicate Acceptance: header");
      saw_acceptance = true;
      doc.acceptance_color_count = expect_int(lex, "acceptance set count");
      Token first = lex.peek();
      doc.acceptance = parse_acc_expr(lex);
      if (formula_has_atoms(doc.acceptance) &&
          doc.acceptance.max_color() >= doc.acceptance_color_count)
        fail_at(first, "acceptance formula uses a color out of range");
      doc.acceptance_text = doc.acceptance.to_text();
    } else if (t.text == "acc-name") {
      std::string value;
      while (!header_like(lex.peek())) {
        Token part = lex.next();
        if (part.type != Token::Type::Ident && part.type != Token::Type::Int)
          fail_at(part, "malformed acc-name: value");
        if (!value.empty()) value.push_back(' ');
        value += part.type == Token::Type::Int ? std::to_string(part.value) : part.text;
      }
      doc.acc_name = value;
    } else if (t.text == "name") {
      Token name = lex.next();
      if (name.type != Token::Type::String) fail_at(name, "expected quoted name");
      doc.name = name.text;
    } else if (t.text == "tool") {
      std::string value;
      while (lex.peek().type == Token::Type::String) {
        if (!value.empty()) value.push_back(' ');
        value += lex.next().text;
      }
      doc.tool = value;
    } else if (t.text == "properties") {
      while (lex.peek().type == Token::Type::Ident) doc.properties.push_back(lex.next().text);
    } else {
      HoaHeaderItem item;
      item.name = t.text;
      while (!header_like(lex.peek())) {
        Token part = lex.next();
        std::string piece;
        switch (part.type) {
          case Token::Type::Ident:
            piece = part.text;
            break;
          case Token::Type::Int:
            piece = std::to_string(part.value);
            break;
          case Token::Type::String:
            piece = quote(part.text);
            break;
          case Token::Type::Punct:
            piece = part.text;
            break;
          default:
            fail_at(part, "malformed header value");
        }
        if (!item.value.empty()) item.value.push_back(' ');
        item.value += piece;
      }
      doc.extra_headers.push_back(std::move(item));
    }
  }

  if (!saw_states) fail_at(t, "missing mandatory States: header");
  if (!saw_start) fail_at(t, "missing mandatory Start: header");
  if (!saw_acceptance) fail_at(t, "missing mandatory Acceptance: header");
  for (state_t s : doc.start_states)
    if (s >= doc.state_count) fail_at(start_token, "start state out of range");

  doc.state_colors.assign(doc.state_count, {});
  std::vector<bool> declared(doc.state_count, false);
  bool have_state = false;
  state_t cur = 0;

  while (true) {
    t = lex.next();
    if (t.type == Token::Type::End) break;
    if (t.type == Token::Type::Eof) fail_at(t, "missing --END--");
    if (t.type == Token::Type::Header && t.text == "State") {
      if (is_punct(lex.peek(), '['))
        fail_at(lex.peek(), "state labels are not supported (transition labels only)");
      Token id = lex.peek();
      unsigned s = expect_int(lex, "state id");
      if (s >= doc.state_count) fail_at(id, "state id out of range");
      if (declared[s]) fail_at(id, "duplicate State: declaration");
      declared[s] = true;
      cur = s;
      have_state = true;
      if (lex.peek().type == Token::Type::String) lex.next();  // optional state name
      if (is_punct(lex.peek(), '{')) {
        lex.next();
        doc.state_colors[s] = parse_color_marks(lex, doc.acceptance_color_count);
      }
      continue;
    }
    if (is_punct(t, '[')) {
      if (!have_state) fail_at(t, "edge before the first State: declaration");
      HoaEdge edge;
      edge.src = cur;
      edge.label = parse_label_expr(lex, static_cast<unsigned>(doc.ap_names.size()));
      expect_punct(lex, ']');
      Token dst = lex.peek();
      edge.dst = expect_int(lex, "destination state");
      if (edge.dst >= doc.state_count) fail_at(dst, "destination state out of range");
      if (is_punct(lex.peek(), '{')) {
        lex.next();
        edge.colors = parse_color_marks(lex, doc.acceptance_color_count);
      }
      doc.edges.push_back(std::move(edge));
      continue;
    }
    if (t.type == Token::Type::Int)
      fail_at(t, "implicit labels are not supported (expected '[')");
    fail_at(t, "expected State:, a labeled edge, or --END--");
  }

  t = lex.next();
  if (t.type != Token::Type::Eof) fail_at(t, "trailing input after --END--");
  return doc;
}

Alphabet explicit_alphabet(const HoaDocument& doc) {
  if (doc.ap_names.size() > kMaxAps)
    throw std::runtime_error("too many atomic propositions (" +
                             std::to_string(doc.ap_names.size()) + ", limit " +
                             std::to_string(kMaxAps) + ")");
  return Alphabet{static_cast<unsigned>(doc.ap_names.size())};
}

std::vector<letter_t> satisfying_letters(const LabelFormula& label, const Alphabet& alphabet) {
  std::vector<letter_t> out;
  for (letter_t w = 0; w < alphabet.size(); ++w)
    if (label.eval(w)) out.push_back(w);
  return out;
}

Nba normalize(const HoaDocument& doc, const Alphabet& alphabet) {
  if (doc.start_states.size() != 1)
    throw std::runtime_error("exactly one initial state required");
  if (doc.acceptance_color_count != 1 || doc.acceptance != AccFormula::inf(0))
    throw std::runtime_error(
        "input acceptance is not Buchi (expected Acceptance: 1 Inf(0))");

  Nba nba(doc.state_count, alphabet.size(), doc.start_states[0]);
  for (const HoaEdge& edge : doc.edges) {
    bool accepting = set_contains(edge.colors, 0) || set_contains(doc.state_colors[edge.src], 0);
    for (letter_t w : satisfying_letters(edge.label, alphabet))
      nba.add_edge(edge.src, w, edge.dst, accepting);
  }
  if (nba.complete()) return nba;

  Nba full(doc.state_count + 1, alphabet.size(), doc.start_states[0]);
  full.edges.assign(nba.edges.begin(), nba.edges.end());
  full.edges.resize(static_cast<std::size_t>(full.num_states) * full.alphabet_size);
  state_t sink = doc.state_count;
  for (state_t q = 0; q < doc.state_count; ++q)
    for (letter_t a = 0; a < full.alphabet_size; ++a)
      if (full.out(q, a).empty()) full.add_edge(q, a, sink, false);
  for (letter_t a = 0; a < full.alphabet_size; ++a) full.add_edge(sink, a, sink, false);
  return full;
}

Dela dela_from_hoa(const HoaDocument& doc, const Alphabet& alphabet) {
  if (doc.start_states.size() != 1)
    throw std::runtime_error("exactly one initial state required");

  Dela dela;
  dela.num_states = doc.state_count;
  dela.alphabet_size = alphabet.size();
  dela.initial = doc.start_states[0];
  dela.color_count = doc.acceptance_color_count;
  dela.acceptance = doc.acceptance;
  dela.acc_name = doc.acc_name;
  std::size_t cells = static_cast<std::size_t>(doc.state_count) * alphabet.size();
  dela.succ.assign(cells, 0);
  dela.colors.assign(cells, {});
  std::vector<bool> filled(cells, false);

  for (const HoaEdge& edge : doc.edges) {
    for (letter_t w : satisfying_letters(edge.label, alphabet)) {
      std::size_t cell = static_cast<std::size_t>(edge.src) * alphabet.size() + w;
      if (filled[cell])
        throw std::runtime_error("automaton is not deterministic (state " +
                                 std::to_string(edge.src) + ", letter " + std::to_string(w) +
                                 " has two successors)");
      filled[cell] = true;
      dela.succ[cell] = edge.dst;
      ColorSet colors = edge.colors;
      for (color_t c : doc.state_colors[edge.src]) set_insert(colors, c);
      dela.colors[cell] = std::move(colors);
    }
  }
  for (std::size_t cell = 0; cell < cells; ++cell)
    if (!filled[cell])
      throw std::runtime_error("automaton is not complete (state " +
                               std::to_string(cell / alphabet.size()) + ", letter " +
                               std::to_string(cell % alphabet.size()) + " has no successor)");
  return dela;
}

std::vector<std::string> default_ap_names(unsigned ap_count) {
  std::vector<std::string> names;
  names.reserve(ap_count);
  for (unsigned i = 0; i < ap_count; ++i) names.push_back("p" + std::to_string(i));
  return names;
}

namespace {

unsigned ap_count_for(unsigned alphabet_size, std::size_t ap_names) {
  unsigned bits = 0;
  while ((1u << bits) < alphabet_size) ++bits;
  if ((1u << bits) != alphabet_size || bits != ap_names)
    throw std::runtime_error("alphabet size must be 2^|AP| to serialize");
  return bits;
}

void append_minterm(std::ostringstream& os, letter_t w, unsigned ap_count) {
  if (ap_count == 0) {
    os << "[t]";
    return;
  }
  os << '[';
  for (unsigned j = 0; j < ap_count; ++j) {
    if (j > 0) os << " & ";
    if (!((w >> j) & 1u)) os << '!';
    os << j;
  }
  os << ']';
}

void append_header(std::ostringstream& os, unsigned num_states, state_t initial,
                   const std::vector<std::string>& ap_names) {
  os << "HOA: v1\n";
  os << "States: " << num_states << '\n';
  os << "Start: " << initial << '\n';
  os << "AP: " << ap_names.size();
  for (const std::string& name : ap_names) os << ' ' << quote(name);
  os << '\n';
}

void append_colors(std::ostringstream& os, const ColorSet& colors) {
  if (colors.empty()) return;
  os << " {";
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (i > 0) os << ' ';
    os << colors[i];
  }
  os << '}';
}

}  // namespace

std::string serialize_hoa(const Nba& nba, const std::vector<std::string>& ap_names) {
  unsigned ap_count = ap_count_for(nba.alphabet_size, ap_names.size());
  std::ostringstream os;
  append_header(os, nba.num_states, nba.initial, ap_names);
  os << "acc-name: Buchi\n";
  os << "Acceptance: 1 Inf(0)\n";
  os << "properties: trans-labels explicit-labels trans-acc\n";
  os << "--BODY--\n";
  for (state_t q = 0; q < nba.num_states; ++q) {
    os << "State: " << q << '\n';
    for (letter_t a = 0; a < nba.alphabet_size; ++a) {
      for (const NbaEdge& e : nba.out(q, a)) {
        append_minterm(os, a, ap_count);
        os << ' ' << e.dst;
        if (e.accepting) os << " {0}";
        os << '\n';
      }
    }
  }
  os << "--END--\n";
  return os.str();
}

std::string serialize_hoa(const Dela& dela, const std::vector<std::string>& ap_names) {
  unsigned ap_count = ap_count_for(dela.alphabet_size, ap_names.size());
  std::ostringstream os;
  append_header(os, dela.num_states, dela.initial, ap_names);
  if (!dela.acc_name.empty()) os << "acc-name: " << dela.acc_name << '\n';
  os << "Acceptance: " << dela.color_count << ' ' << dela.acceptance.to_text() << '\n';
  os << "properties: trans-labels explicit-labels trans-acc deterministic complete\n";
  os << "--BODY--\n";
  for (state_t q = 0; q < dela.num_states; ++q) {
    os << "State: " << q << '\n';
    for (letter_t a = 0; a < dela.alphabet_size; ++a) {
      append_minterm(os, a, ap_count);
      os << ' ' << dela.step(q, a);
      append_colors(os, dela.step_colors(q, a));
      os << '\n';
    }
  }
  os << "--END--\n";
  return os.str();
}

}  // namespace sccdet
