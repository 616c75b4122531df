#include "sccdet/nac_succ.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace sccdet {

int list_compare(const LabelList& a, const LabelList& b) {
  std::size_t len = std::max(a.size(), b.size());
  for (std::size_t k = 0; k < len; ++k) {
    std::uint32_t av = k < a.size() ? a[k] : kUnlabelled;
    std::uint32_t bv = k < b.size() ? b[k] : kUnlabelled;
    if (av != bv) return av < bv ? -1 : 1;
  }
  return 0;
}

unsigned NacView::index_of(state_t q) const {
  auto it = std::lower_bound(members.begin(), members.end(), q);
  assert(it != members.end() && *it == q);
  return static_cast<unsigned>(it - members.begin());
}

NacView make_nac_view(const Nba& nba, const StateSet& nac) {
  NacView view;
  view.members = nac;
  view.alphabet_size = nba.alphabet_size;
  view.preds.resize(nac.size() * nba.alphabet_size);
  for (unsigned i = 0; i < nac.size(); ++i) {
    for (letter_t a = 0; a < nba.alphabet_size; ++a) {
      for (const NbaEdge& e : nba.out(nac[i], a)) {
        if (!set_contains(nac, e.dst)) continue;
        unsigned j = view.index_of(e.dst);
        view.preds[static_cast<std::size_t>(j) * nba.alphabet_size + a].emplace_back(
            i, e.accepting);
      }
    }
  }
  return view;
}

NacLabel nac_initial(const StateSet& nac, state_t initial) {
  NacLabel label(nac.size());
  auto it = std::lower_bound(nac.begin(), nac.end(), initial);
  if (it != nac.end() && *it == initial)
    label[static_cast<unsigned>(it - nac.begin())] = {1};
  return label;
}

StateSet nac_image(const NacView& view, const NacLabel& label, letter_t a) {
  StateSet image;
  for (unsigned j = 0; j < view.size(); ++j) {
    for (const auto& [i, accepting] : view.preds[static_cast<std::size_t>(j) * view.alphabet_size + a]) {
      (void)accepting;
      if (!label[i].empty()) {
        set_insert(image, view.members[j]);
        break;
      }
    }
  }
  return image;
}

namespace {

// all integers occurring in the label's lists, sorted and distinct
std::vector<std::uint32_t> label_ints(const NacLabel& label) {
  std::vector<std::uint32_t> out;
  for (const LabelList& list : label) out.insert(out.end(), list.begin(), list.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

NacStep nondet_succ(const NacView& view, const NacLabel& label, letter_t a,
                    const StateSet& entering) {
  const unsigned size = view.size();
  const std::uint32_t sentinel = size + 1;

  // the labels are compressed, so the used integers are exactly {1..m}
  std::uint32_t m = 0;
  for (const LabelList& list : label)
    if (!list.empty()) m = std::max(m, list.back());
  std::uint32_t fresh = m + 1;

  // every labelled predecessor offers its list to each internal successor,
  // appending a fresh branch number when the edge is accepting (the number
  // is consumed even if the offer loses); each target keeps the smallest
  NacLabel next(size);
  for (unsigned j = 0; j < size; ++j) {
    const auto& offers = view.preds[static_cast<std::size_t>(j) * view.alphabet_size + a];
    bool have = false;
    LabelList best;
    for (const auto& [i, accepting] : offers) {
      if (label[i].empty()) continue;
      LabelList candidate = label[i];
      if (accepting) candidate.push_back(fresh++);
      if (!have || list_less(candidate, best)) {
        best = std::move(candidate);
        have = true;
      }
    }
    if (have) next[j] = std::move(best);
  }

  for (state_t q : entering) {
    unsigned j = view.index_of(q);
    if (!next[j].empty())
      throw std::logic_error("entering state already reached through the SCC");
    next[j] = {fresh++};
  }

  NacStep step;
  step.bad = {sentinel};
  step.good = {sentinel};

  // integers that did not survive into any offer vanished with their runs
  std::vector<std::uint32_t> old_ints = label_ints(label);
  std::vector<std::uint32_t> new_ints = label_ints(next);
  for (std::uint32_t v : old_ints)
    if (!std::binary_search(new_ints.begin(), new_ints.end(), v)) set_insert(step.bad, v);

  // a branch whose proper prefix vanished from the label set has merged into
  // that branch point through an accepting edge: truncate and report good
  std::vector<LabelList> present;
  for (const LabelList& list : next)
    if (!list.empty()) present.push_back(list);
  std::sort(present.begin(), present.end());
  for (LabelList& list : next) {
    for (std::size_t k = 1; k < list.size(); ++k) {
      LabelList prefix(list.begin(), list.begin() + static_cast<std::ptrdiff_t>(k));
      if (std::binary_search(present.begin(), present.end(), prefix)) continue;
      set_insert(step.good, prefix.back());
      list = std::move(prefix);
      break;
    }
  }

  std::vector<std::uint32_t> finite = label_ints(next);
  auto ranks = rank_map(std::move(finite));
  for (LabelList& list : next) {
    for (std::uint32_t& v : list) {
      auto it = std::lower_bound(ranks.begin(), ranks.end(), std::make_pair(v, 0u));
      v = it->second;
    }
  }

#ifndef NDEBUG
  for (const LabelList& list : next) {
    for (std::size_t k = 1; k < list.size(); ++k) assert(list[k - 1] < list[k]);
    if (!list.empty()) assert(list.back() <= size);
  }
#endif

  step.label = std::move(next);
  step.color = std::min(2 * step.bad.front() - 1, 2 * step.good.front());
  return step;
}

}  // namespace sccdet
