#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sccdet/automata.hpp"
#include "sccdet/dac_succ.hpp"
#include "sccdet/nac_succ.hpp"
#include "sccdet/scc.hpp"
#include "sccdet/weak_succ.hpp"

namespace sccdet {

// One accepting SCC owns the colors base+1 .. base+2*size+1; the weak pair
// {1, 2} comes first and block ranges never overlap.
struct ColorBlock {
  color_t base = 0;
  unsigned size = 0;

  bool operator==(const ColorBlock& o) const { return base == o.base && size == o.size; }
};

struct ColorLayout {
  unsigned nba_states = 0;
  unsigned dac_count = 0;          // blocks[0..dac_count) belong to DACs
  std::vector<ColorBlock> blocks;  // DAC blocks first, then NAC blocks
  unsigned color_count = 0;        // nominal inventory: 3 * nba_states + 1

  // largest color any transition can carry: 2 + sum over blocks of (2s+1)
  color_t top_color() const {
    color_t top = 2;
    for (const ColorBlock& b : blocks) top += 2 * b.size + 1;
    return top;
  }
};

ColorLayout make_color_layout(unsigned nba_states, const SccClassification& cls);

// Recovers the block structure from a composed acceptance formula (for
// automata read back from files). Empty if the formula has a different shape.
std::optional<ColorLayout> layout_from_acceptance(const AccFormula& acc,
                                                  unsigned color_count);

// Disjunction of: the weak pair Fin(1), and per block the parity-style
// disjuncts (Fin(b+1) & ... & Fin(b+2c-1) & Inf(b+2c)) for c = 1..size.
AccFormula build_acceptance(const ColorLayout& layout);

// One state of the deterministic automaton: the breakpoint pair plus one
// labelling per accepting SCC. The overall reached set is implicit in the
// components.
struct Macrostate {
  WeakState weak;
  std::vector<DacLabel> dac_labels;
  std::vector<NacLabel> nac_labels;

  bool operator==(const Macrostate& o) const {
    return weak == o.weak && dac_labels == o.dac_labels && nac_labels == o.nac_labels;
  }
};

// Canonical byte encoding, usable as an interning key.
std::string macrostate_key(const Macrostate& m);

struct MacroStep {
  Macrostate next;
  ColorSet colors;  // exactly 1 + #DACs + #NACs colors, one per range
};

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Classification, per-SCC views and color layout of one input automaton,
// precomputed once so macrostates can be stepped cheaply.
class Determinizer {
 public:
  explicit Determinizer(const Nba& nba);

  const Nba& nba() const { return *nba_; }
  const SccClassification& classification() const { return cls_; }
  const ColorLayout& layout() const { return layout_; }

  Macrostate initial_macrostate() const;

  // The reached state set S the macrostate stands for.
  StateSet reached_set(const Macrostate& m) const;

  MacroStep macro_succ(const Macrostate& m, letter_t a) const;

 private:
  const Nba* nba_;
  SccClassification cls_;
  ColorLayout layout_;
  std::vector<DacView> dac_views_;
  std::vector<NacView> nac_views_;
};

struct BuildOptions {
  std::size_t max_states = 1000000;
};

// Breadth-first exploration from the initial macrostate; throws
// ResourceLimitError when more than options.max_states macrostates appear.
Dela build_dela(const Determinizer& det, const BuildOptions& options = {});
Dela build_dela(const Nba& nba, const BuildOptions& options = {});

}  // namespace sccdet
