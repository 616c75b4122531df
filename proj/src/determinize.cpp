#include "sccdet/determinize.hpp"

#include <algorithm>
#include <unordered_map>

namespace sccdet {

ColorLayout make_color_layout(unsigned nba_states, const SccClassification& cls) {
  ColorLayout layout;
  layout.nba_states = nba_states;
  layout.dac_count = static_cast<unsigned>(cls.dacs.size());
  color_t base = 2;
  for (const StateSet& dac : cls.dacs) {
    layout.blocks.push_back({base, static_cast<unsigned>(dac.size())});
    base += 2 * static_cast<color_t>(dac.size()) + 1;
  }
  for (const StateSet& nac : cls.nacs) {
    layout.blocks.push_back({base, static_cast<unsigned>(nac.size())});
    base += 2 * static_cast<color_t>(nac.size()) + 1;
  }
  layout.color_count = 3 * nba_states + 1;
  return layout;
}

namespace {

void flatten_or(const AccFormula& f, std::vector<AccFormula>& out) {
  if (f.kind() == AccFormula::Kind::Or) {
    flatten_or(f.left(), out);
    flatten_or(f.right(), out);
  } else {
    out.push_back(f);
  }
}

void flatten_and(const AccFormula& f, std::vector<AccFormula>& out) {
  if (f.kind() == AccFormula::Kind::And) {
    flatten_and(f.left(), out);
    flatten_and(f.right(), out);
  } else {
    out.push_back(f);
  }
}

// disjunct for (base, c): Fin(base+1) & Fin(base+3) & ... & Fin(base+2c-1)
// & Inf(base+2c)
bool matches_block_disjunct(const AccFormula& f, color_t base, unsigned c) {
  std::vector<AccFormula> parts;
  flatten_and(f, parts);
  if (parts.size() != c + 1) return false;
  for (unsigned j = 0; j < c; ++j) {
    if (parts[j].kind() != AccFormula::Kind::Fin) return false;
    if (parts[j].color() != base + 2 * j + 1) return false;
  }
  return parts[c].kind() == AccFormula::Kind::Inf && parts[c].color() == base + 2 * c;
}

}  // namespace

std::optional<ColorLayout> layout_from_acceptance(const AccFormula& acc,
                                                  unsigned color_count) {
  std::vector<AccFormula> disjuncts;
  flatten_or(acc, disjuncts);
  if (disjuncts.empty() || disjuncts[0] != AccFormula::fin(1)) return std::nullopt;

  ColorLayout layout;
  color_t base = 2;
  std::size_t i = 1;
  while (i < disjuncts.size()) {
    unsigned size = 0;
    while (i < disjuncts.size() && matches_block_disjunct(disjuncts[i], base, size + 1)) {
      ++size;
      ++i;
    }
    if (size == 0) return std::nullopt;
    layout.blocks.push_back({base, size});
    base += 2 * size + 1;
  }
  // after the loop `base` is one above the largest color in the formula
  if (color_count < base) return std::nullopt;

  layout.dac_count = static_cast<unsigned>(layout.blocks.size());
  layout.color_count = color_count;
  return layout;
}

AccFormula build_acceptance(const ColorLayout& layout) {
  AccFormula acc = AccFormula::fin(1);
  for (const ColorBlock& block : layout.blocks) {
    for (unsigned c = 1; c <= block.size; ++c) {
      AccFormula disjunct = AccFormula::fin(block.base + 1);
      for (unsigned j = 2; j <= c; ++j)
        disjunct = AccFormula::conj(disjunct, AccFormula::fin(block.base + 2 * j - 1));
      disjunct = AccFormula::conj(disjunct, AccFormula::inf(block.base + 2 * c));
      acc = AccFormula::disj(acc, disjunct);
    }
  }
  return acc;
}

namespace {

void put_u32(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 24) & 0xff));
}

}  // namespace

std::string macrostate_key(const Macrostate& m) {
  std::string key;
  put_u32(key, static_cast<std::uint32_t>(m.weak.p.size()));
  for (state_t q : m.weak.p) put_u32(key, q);
  put_u32(key, static_cast<std::uint32_t>(m.weak.o.size()));
  for (state_t q : m.weak.o) put_u32(key, q);
  for (const DacLabel& label : m.dac_labels)
    for (std::uint32_t v : label) put_u32(key, v);
  for (const NacLabel& label : m.nac_labels) {
    for (const LabelList& list : label) {
      put_u32(key, static_cast<std::uint32_t>(list.size()));
      for (std::uint32_t v : list) put_u32(key, v);
    }
  }
  return key;
}

Determinizer::Determinizer(const Nba& nba)
    : nba_(&nba), cls_(classify(nba)), layout_(make_color_layout(nba.num_states, cls_)) {
  dac_views_.reserve(cls_.dacs.size());
  for (const StateSet& dac : cls_.dacs) dac_views_.push_back(make_dac_view(nba, dac));
  nac_views_.reserve(cls_.nacs.size());
  for (const StateSet& nac : cls_.nacs) nac_views_.push_back(make_nac_view(nba, nac));
}

Macrostate Determinizer::initial_macrostate() const {
  Macrostate m;
  m.weak = weak_initial(cls_, nba_->initial);
  m.dac_labels.reserve(cls_.dacs.size());
  for (const StateSet& dac : cls_.dacs) m.dac_labels.push_back(dac_initial(dac, nba_->initial));
  m.nac_labels.reserve(cls_.nacs.size());
  for (const StateSet& nac : cls_.nacs) m.nac_labels.push_back(nac_initial(nac, nba_->initial));
  return m;
}

StateSet Determinizer::reached_set(const Macrostate& m) const {
  StateSet s = m.weak.p;
  for (std::size_t i = 0; i < dac_views_.size(); ++i)
    for (unsigned j = 0; j < dac_views_[i].size(); ++j)
      if (m.dac_labels[i][j] != kUnlabelled) set_insert(s, dac_views_[i].members[j]);
  for (std::size_t i = 0; i < nac_views_.size(); ++i)
    for (unsigned j = 0; j < nac_views_[i].size(); ++j)
      if (!m.nac_labels[i][j].empty()) set_insert(s, nac_views_[i].members[j]);
  return s;
}

MacroStep Determinizer::macro_succ(const Macrostate& m, letter_t a) const {
  StateSet s_next = reached_step(*nba_, reached_set(m), a);

  MacroStep out;
  WeakStep ws = weak_succ(*nba_, cls_, m.weak, a, s_next);
  out.next.weak = std::move(ws.next);
  out.colors.push_back(ws.color);

  out.next.dac_labels.resize(dac_views_.size());
  for (std::size_t i = 0; i < dac_views_.size(); ++i) {
    const DacView& view = dac_views_[i];
    StateSet entering = set_difference(set_intersect(s_next, view.members),
                                       dac_image(view, m.dac_labels[i], a));
    DacStep step = det_succ(view, m.dac_labels[i], a, entering);
    out.next.dac_labels[i] = std::move(step.label);
    set_insert(out.colors, layout_.blocks[i].base + step.color);
  }

  out.next.nac_labels.resize(nac_views_.size());
  for (std::size_t i = 0; i < nac_views_.size(); ++i) {
    const NacView& view = nac_views_[i];
    StateSet entering = set_difference(set_intersect(s_next, view.members),
                                       nac_image(view, m.nac_labels[i], a));
    NacStep step = nondet_succ(view, m.nac_labels[i], a, entering);
    out.next.nac_labels[i] = std::move(step.label);
    set_insert(out.colors, layout_.blocks[layout_.dac_count + i].base + step.color);
  }
  return out;
}

Dela build_dela(const Determinizer& det, const BuildOptions& options) {
  const unsigned alphabet = det.nba().alphabet_size;

  std::vector<Macrostate> states;
  std::unordered_map<std::string, state_t> intern;
  Dela dela;
  dela.alphabet_size = alphabet;
  dela.initial = 0;
  dela.color_count = det.layout().color_count;
  dela.acceptance = build_acceptance(det.layout());

  auto intern_state = [&](Macrostate&& m) {
    std::string key = macrostate_key(m);
    auto it = intern.find(key);
    if (it != intern.end()) return it->second;
    if (states.size() >= options.max_states)
      throw ResourceLimitError("macrostate limit of " + std::to_string(options.max_states) +
                               " exceeded");
    state_t id = static_cast<state_t>(states.size());
    states.push_back(std::move(m));
    intern.emplace(std::move(key), id);
    return id;
  };

  intern_state(det.initial_macrostate());
  color_t max_used = dela.acceptance.max_color();
  for (state_t q = 0; q < states.size(); ++q) {
    for (letter_t a = 0; a < alphabet; ++a) {
      // states grows while iterating; keep indices, not references
      MacroStep step = det.macro_succ(states[q], a);
      state_t dst = intern_state(std::move(step.next));
      if (!step.colors.empty()) max_used = std::max(max_used, step.colors.back());
      dela.succ.push_back(dst);
      dela.colors.push_back(std::move(step.colors));
    }
  }
  // Automata whose every state sits in an accepting non-weak SCC can emit
  // neutral block colors above the nominal inventory; widen only then.
  dela.color_count = std::max(dela.color_count, max_used + 1);
  dela.num_states = static_cast<unsigned>(states.size());
  return dela;
}

Dela build_dela(const Nba& nba, const BuildOptions& options) {
  Determinizer det(nba);
  return build_dela(det, options);
}

}  // namespace sccdet
