#include "sccdet/rabin.hpp"

#include <algorithm>
#include <stdexcept>

namespace sccdet {

Dela to_rabin(const Dela& dela, const ColorLayout& layout) {
  const unsigned pairs = rabin_pair_count(layout);

  Dela out;
  out.num_states = dela.num_states;
  out.alphabet_size = dela.alphabet_size;
  out.initial = dela.initial;
  out.succ = dela.succ;
  out.color_count = 2 * pairs;
  out.acc_name = "Rabin " + std::to_string(pairs);

  AccFormula acc = AccFormula::conj(AccFormula::fin(0), AccFormula::inf(1));
  for (unsigned r = 1; r < pairs; ++r)
    acc = AccFormula::disj(acc,
                           AccFormula::conj(AccFormula::fin(2 * r), AccFormula::inf(2 * r + 1)));
  out.acceptance = acc;

  out.colors.reserve(dela.colors.size());
  for (const ColorSet& colors : dela.colors) {
    bool weak_empty = set_contains(colors, 1);
    if (weak_empty == set_contains(colors, 2))
      throw std::runtime_error("transition does not carry exactly one weak color");

    ColorSet recolored;
    recolored.push_back(1);  // pair 0's Inf-color sits on every transition
    if (weak_empty) recolored.insert(recolored.begin(), 0);

    unsigned r = 1;
    for (const ColorBlock& block : layout.blocks) {
      color_t internal = 0;
      for (color_t c : colors) {
        if (c <= block.base || c > block.base + 2 * block.size + 1) continue;
        if (internal != 0)
          throw std::runtime_error("transition carries two colors of one block");
        internal = c - block.base;
      }
      if (internal == 0)
        throw std::runtime_error("transition misses the color of a block");
      for (unsigned c = 1; c <= block.size; ++c, ++r) {
        if (internal == 2 * c) set_insert(recolored, 2 * r + 1);
        if (internal < 2 * c) set_insert(recolored, 2 * r);
      }
    }
    out.colors.push_back(std::move(recolored));
  }
  return out;
}

}  // namespace sccdet
