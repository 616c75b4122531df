#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sccdet/determinize.hpp"
#include "sccdet/hoa.hpp"
#include "sccdet/lasso.hpp"
#include "sccdet/rabin.hpp"
#include "sccdet/scc.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path.empty() || path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    buffer << in.rdbuf();
  }
  return buffer.str();
}

std::vector<sccdet::letter_t> parse_letters(const std::string& text, unsigned alphabet,
                                            const char* what) {
  std::vector<sccdet::letter_t> letters;
  if (text.empty()) return letters;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(item, &used);
    } catch (const std::exception&) {
      throw std::runtime_error(std::string(what) + ": '" + item + "' is not a letter");
    }
    if (used != item.size())
      throw std::runtime_error(std::string(what) + ": '" + item + "' is not a letter");
    if (value >= alphabet)
      throw std::runtime_error(std::string(what) + ": letter " + item +
                               " outside the alphabet (size " + std::to_string(alphabet) + ")");
    letters.push_back(static_cast<sccdet::letter_t>(value));
  }
  return letters;
}

void write_dot(std::ostream& os, const sccdet::Dela& dela) {
  os << "digraph dela {\n  rankdir=LR;\n  node [shape=circle];\n";
  os << "  init [shape=point];\n  init -> s" << dela.initial << ";\n";
  for (sccdet::state_t q = 0; q < dela.num_states; ++q) {
    for (sccdet::letter_t a = 0; a < dela.alphabet_size; ++a) {
      os << "  s" << q << " -> s" << dela.step(q, a) << " [label=\"" << a << " {";
      const sccdet::ColorSet& colors = dela.step_colors(q, a);
      for (std::size_t i = 0; i < colors.size(); ++i) os << (i ? " " : "") << colors[i];
      os << "}\"];\n";
    }
  }
  os << "}\n";
}

struct ParsedAutomaton {
  sccdet::HoaDocument doc;
  sccdet::Alphabet alphabet;
};

ParsedAutomaton parse_file(const std::string& path) {
  ParsedAutomaton parsed;
  parsed.doc = sccdet::parse_hoa(read_input(path));
  parsed.alphabet = sccdet::explicit_alphabet(parsed.doc);
  return parsed;
}

bool is_buchi(const sccdet::HoaDocument& doc) {
  return doc.acceptance_color_count == 1 && doc.acceptance == sccdet::AccFormula::inf(0);
}

int cmd_determinize(const std::string& input, const std::string& acceptance,
                    std::size_t max_states, bool dot) {
  ParsedAutomaton parsed = parse_file(input);
  sccdet::Nba nba = sccdet::normalize(parsed.doc, parsed.alphabet);

  auto start = std::chrono::steady_clock::now();
  sccdet::Determinizer det(nba);
  sccdet::Dela dela = sccdet::build_dela(det, {max_states});
  if (acceptance == "rabin") dela = sccdet::to_rabin(dela, det.layout());
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);

  std::vector<std::string> ap_names = parsed.doc.ap_names;
  if (dot)
    write_dot(std::cout, dela);
  else
    std::cout << sccdet::serialize_hoa(dela, ap_names);
  std::cerr << "states=" << dela.num_states << " colors=" << dela.color_count
            << " time_ms=" << elapsed.count() << "\n";
  return kExitOk;
}

int cmd_classify(const std::string& input) {
  ParsedAutomaton parsed = parse_file(input);
  sccdet::Nba nba = sccdet::normalize(parsed.doc, parsed.alphabet);
  sccdet::SccClassification cls = sccdet::classify(nba);
  for (std::size_t i = 0; i < cls.sccs.size(); ++i)
    std::cout << "SCC " << i << ' ' << sccdet::scc_kind_name(cls.kind[i]) << ' '
              << cls.sccs[i].size() << "\n";
  return kExitOk;
}

int cmd_to_rabin(const std::string& input) {
  ParsedAutomaton parsed = parse_file(input);
  sccdet::Dela dela = sccdet::dela_from_hoa(parsed.doc, parsed.alphabet);
  auto layout = sccdet::layout_from_acceptance(dela.acceptance, dela.color_count);
  if (!layout)
    throw std::runtime_error("input acceptance does not have the composed shape");
  sccdet::Dela rabin = sccdet::to_rabin(dela, *layout);
  std::cout << sccdet::serialize_hoa(rabin, parsed.doc.ap_names);
  return kExitOk;
}

int cmd_member(const std::string& input, const std::string& stem, const std::string& cycle) {
  ParsedAutomaton parsed = parse_file(input);
  sccdet::LassoWord w;
  w.stem = parse_letters(stem, parsed.alphabet.size(), "--stem");
  w.cycle = parse_letters(cycle, parsed.alphabet.size(), "--cycle");
  if (w.cycle.empty()) throw std::runtime_error("--cycle must name at least one letter");

  bool accepted;
  if (is_buchi(parsed.doc)) {
    accepted = sccdet::nba_accepts(sccdet::normalize(parsed.doc, parsed.alphabet), w);
  } else {
    accepted = sccdet::det_accepts(sccdet::dela_from_hoa(parsed.doc, parsed.alphabet), w);
  }
  std::cout << (accepted ? "accepted" : "rejected") << "\n";
  return accepted ? kExitOk : kExitCounterexample;
}

int cmd_diff_check(const std::string& input, unsigned stem_max, unsigned cycle_max,
                   std::size_t max_states) {
  ParsedAutomaton parsed = parse_file(input);
  sccdet::Nba nba = sccdet::normalize(parsed.doc, parsed.alphabet);
  sccdet::Dela dela = sccdet::build_dela(nba, {max_states});
  auto counterexample = sccdet::bounded_equiv(nba, dela, stem_max, cycle_max);
  if (counterexample) {
    std::cerr << "counterexample: " << sccdet::lasso_to_string(*counterexample) << "\n";
    return kExitCounterexample;
  }
  std::cerr << "equivalent on all lassos with stem<=" << stem_max << " cycle<=" << cycle_max
            << "\n";
  return kExitOk;
}

int cmd_gen_family(unsigned n) {
  sccdet::Nba nba = sccdet::gen_family_an(n);
  unsigned ap_count = 0;
  while ((1u << ap_count) < nba.alphabet_size) ++ap_count;
  std::cout << sccdet::serialize_hoa(nba, sccdet::default_ap_names(ap_count));
  return kExitOk;
}

int cmd_gen_random(const sccdet::RandomNbaParams& params) {
  if (params.alphabet_size == 0 || (params.alphabet_size & (params.alphabet_size - 1)) != 0)
    throw std::runtime_error("--alphabet must be a power of two");
  sccdet::Nba nba = sccdet::gen_random_nba(params);
  unsigned ap_count = 0;
  while ((1u << ap_count) < nba.alphabet_size) ++ap_count;
  std::cout << sccdet::serialize_hoa(nba, sccdet::default_ap_names(ap_count));
  return kExitOk;
}

int run(int argc, char** argv) {
  CLI::App app{"SCC-aware determinization of Buchi automata into "
               "Emerson-Lei or Rabin automata"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string acceptance = "ela";
  std::size_t max_states = 1000000;
  bool dot = false;

  auto* determinize = app.add_subcommand(
      "determinize", "Read a Buchi automaton (HOA), write a deterministic automaton (HOA)");
  determinize->add_option("input", input, "input file, or - for stdin");
  determinize->add_option("--acceptance", acceptance, "output acceptance: ela or rabin")
      ->check(CLI::IsMember({"ela", "rabin"}));
  determinize->add_option("--max-states", max_states, "macrostate cap")
      ->envname("SCCDET_MAX_STATES");
  determinize->add_flag("--dot", dot, "emit the transition graph as DOT instead of HOA");

  auto* classify = app.add_subcommand("classify", "Print the SCC kinds of a Buchi automaton");
  classify->add_option("input", input, "input file, or - for stdin");

  auto* to_rabin = app.add_subcommand(
      "to-rabin", "Recolor a determinized automaton (HOA) into Rabin form");
  to_rabin->add_option("input", input, "input file, or - for stdin");

  std::string stem;
  std::string cycle;
  auto* member = app.add_subcommand("member", "Test one lasso word against an automaton");
  member->add_option("input", input, "input file, or - for stdin");
  member->add_option("--stem", stem, "comma-separated letters, may be empty");
  member->add_option("--cycle", cycle, "comma-separated letters, at least one")->required();

  unsigned stem_max = 3;
  unsigned cycle_max = 4;
  auto* diff_check = app.add_subcommand(
      "diff-check", "Determinize and compare against the input on bounded lassos");
  diff_check->add_option("input", input, "input file, or - for stdin");
  diff_check->add_option("--stem-max", stem_max, "largest stem length");
  diff_check->add_option("--cycle-max", cycle_max, "largest cycle length");
  diff_check->add_option("--max-states", max_states, "macrostate cap")
      ->envname("SCCDET_MAX_STATES");

  auto* gen = app.add_subcommand("gen", "Emit a generated Buchi automaton (HOA)");
  gen->require_subcommand(1);
  unsigned family_n = 3;
  auto* family = gen->add_subcommand("family-an", "hard family with one DAC per letter");
  family->add_option("n", family_n, "number of deterministic components")
      ->required()
      ->check(CLI::PositiveNumber);
  sccdet::RandomNbaParams params;
  params.states = 4;
  auto* random = gen->add_subcommand("random", "seeded random complete automaton");
  random->add_option("--seed", params.seed, "RNG seed");
  random->add_option("--states", params.states, "state count")->check(CLI::PositiveNumber);
  random->add_option("--alphabet", params.alphabet_size, "alphabet size (power of two)");
  random->add_option("--density", params.transition_density,
                     "average successors per state and letter");
  random->add_option("--accepting-density", params.accepting_density,
                     "chance of an edge being accepting");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (determinize->parsed()) return cmd_determinize(input, acceptance, max_states, dot);
  if (classify->parsed()) return cmd_classify(input);
  if (to_rabin->parsed()) return cmd_to_rabin(input);
  if (member->parsed()) return cmd_member(input, stem, cycle);
  if (diff_check->parsed()) return cmd_diff_check(input, stem_max, cycle_max, max_states);
  if (gen->parsed()) {
    if (family->parsed()) return cmd_gen_family(family_n);
    if (random->parsed()) return cmd_gen_random(params);
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const sccdet::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
