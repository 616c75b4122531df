#include "sccdet/dac_succ.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace sccdet {

unsigned DacView::index_of(state_t q) const {
  auto it = std::lower_bound(members.begin(), members.end(), q);
  assert(it != members.end() && *it == q);
  return static_cast<unsigned>(it - members.begin());
}

DacView make_dac_view(const Nba& nba, const StateSet& dac) {
  DacView view;
  view.members = dac;
  view.alphabet_size = nba.alphabet_size;
  view.succ.assign(dac.size() * nba.alphabet_size, kUnlabelled);
  view.succ_accepting.assign(dac.size() * nba.alphabet_size, false);
  for (unsigned i = 0; i < dac.size(); ++i) {
    for (letter_t a = 0; a < nba.alphabet_size; ++a) {
      for (const NbaEdge& e : nba.out(dac[i], a)) {
        if (!set_contains(dac, e.dst)) continue;
        std::size_t cell = static_cast<std::size_t>(i) * nba.alphabet_size + a;
        if (view.succ[cell] != kUnlabelled)
          throw std::logic_error("SCC is not internally deterministic");
        view.succ[cell] = view.index_of(e.dst);
        view.succ_accepting[cell] = e.accepting;
      }
    }
  }
  return view;
}

DacLabel dac_initial(const StateSet& dac, state_t initial) {
  DacLabel label(dac.size(), kUnlabelled);
  auto it = std::lower_bound(dac.begin(), dac.end(), initial);
  if (it != dac.end() && *it == initial)
    label[static_cast<unsigned>(it - dac.begin())] = 1;
  return label;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> rank_map(
    std::vector<std::uint32_t> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<std::pair<std::uint32_t, std::uint32_t>> map;
  map.reserve(values.size());
  for (std::uint32_t i = 0; i < values.size(); ++i) map.emplace_back(values[i], i + 1);
  return map;
}

StateSet dac_image(const DacView& view, const DacLabel& label, letter_t a) {
  StateSet image;
  for (unsigned i = 0; i < view.size(); ++i) {
    if (label[i] == kUnlabelled) continue;
    std::uint32_t j = view.succ[static_cast<std::size_t>(i) * view.alphabet_size + a];
    if (j != kUnlabelled) set_insert(image, view.members[j]);
  }
  return image;
}

DacStep det_succ(const DacView& view, const DacLabel& label, letter_t a,
                 const StateSet& entering) {
  const unsigned size = view.size();
  const std::uint32_t sentinel = size + 1;
  DacLabel next(size, kUnlabelled);

  // carry every labelled state along its internal edge, merging to the
  // minimum when several runs land on the same state
  for (unsigned i = 0; i < size; ++i) {
    if (label[i] == kUnlabelled) continue;
    std::uint32_t j = view.succ[static_cast<std::size_t>(i) * view.alphabet_size + a];
    if (j != kUnlabelled) next[j] = std::min(next[j], label[i]);
  }

  DacStep step;
  step.bad = {sentinel};
  step.good = {sentinel};

  // a value is good when its run wins its merge through an accepting edge
  for (unsigned i = 0; i < size; ++i) {
    if (label[i] == kUnlabelled) continue;
    std::size_t cell = static_cast<std::size_t>(i) * view.alphabet_size + a;
    std::uint32_t j = view.succ[cell];
    if (j != kUnlabelled && view.succ_accepting[cell] && next[j] == label[i])
      set_insert(step.good, label[i]);
  }

  // newcomers queue up behind the existing values, in state order
  std::uint32_t fresh = size + 1;
  for (state_t q : entering) {
    unsigned j = view.index_of(q);
    if (next[j] != kUnlabelled)
      throw std::logic_error("entering state already reached through the SCC");
    next[j] = fresh++;
  }

  // a value is bad when it vanished (run left the SCC) or lost a merge
  for (unsigned i = 0; i < size; ++i) {
    if (label[i] == kUnlabelled) continue;
    if (std::find(next.begin(), next.end(), label[i]) == next.end())
      set_insert(step.bad, label[i]);
  }

  std::vector<std::uint32_t> finite;
  for (std::uint32_t v : next)
    if (v != kUnlabelled) finite.push_back(v);
  auto ranks = rank_map(std::move(finite));
  for (std::uint32_t& v : next) {
    if (v == kUnlabelled) continue;
    auto it = std::lower_bound(ranks.begin(), ranks.end(), std::make_pair(v, 0u));
    v = it->second;
  }

  step.label = std::move(next);
  step.color = std::min(2 * step.bad.front() - 1, 2 * step.good.front());
  return step;
}

}  // namespace sccdet
