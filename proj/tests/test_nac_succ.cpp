#include <doctest.h>

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

#include "fixtures.hpp"
#include "sccdet/nac_succ.hpp"

using namespace sccdet;

namespace {

// on letter 0 each state branches to its cyclic successor (accepting) and
// itself (not); letter 1 is a nonaccepting self-loop
Nba branch_nac(unsigned m) {
  Nba nba(m, 2, 0);
  for (unsigned i = 0; i < m; ++i) {
    nba.add_edge(i, 0, (i + 1) % m, true);
    nba.add_edge(i, 0, i, false);
    nba.add_edge(i, 1, i, false);
  }
  return nba;
}

// on letter 0 every state reaches every state, accepting only into the
// cyclic successor; letter 1 is a nonaccepting self-loop
Nba dense_nac(unsigned m) {
  Nba nba(m, 2, 0);
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned j = 0; j < m; ++j) nba.add_edge(i, 0, j, j == (i + 1) % m);
    nba.add_edge(i, 1, i, false);
  }
  return nba;
}

std::vector<StateSet> subsets(const StateSet& pool) {
  std::vector<StateSet> out;
  for (unsigned mask = 0; mask < (1u << pool.size()); ++mask) {
    StateSet s;
    for (unsigned j = 0; j < pool.size(); ++j)
      if (mask & (1u << j)) s.push_back(pool[j]);
    out.push_back(s);
  }
  return out;
}

NacView mixed_view() {
  static const Nba nba = fixtures::mixed_nba();
  return make_nac_view(nba, {0, 1});
}

void check_step_invariants(const NacStep& step, unsigned m) {
  const std::uint32_t sentinel = m + 1;

  // lists ascend strictly and the used integers are exactly 1..k
  std::vector<std::uint32_t> ints;
  for (const LabelList& list : step.label) {
    for (std::size_t k = 1; k < list.size(); ++k) CHECK(list[k - 1] < list[k]);
    ints.insert(ints.end(), list.begin(), list.end());
  }
  std::sort(ints.begin(), ints.end());
  ints.erase(std::unique(ints.begin(), ints.end()), ints.end());
  for (std::uint32_t r = 0; r < ints.size(); ++r) CHECK(ints[r] == r + 1);
  CHECK(ints.size() <= m);

  // every proper prefix of a kept list is itself some state's list
  std::set<LabelList> lists(step.label.begin(), step.label.end());
  for (const LabelList& list : step.label) {
    for (std::size_t k = 1; k < list.size(); ++k)
      CHECK(lists.count(LabelList(list.begin(), list.begin() + static_cast<std::ptrdiff_t>(k))));
  }

  CHECK(set_contains(step.bad, sentinel));
  CHECK(set_contains(step.good, sentinel));
  CHECK(step.color == std::min(2 * step.bad.front() - 1, 2 * step.good.front()));
  CHECK(step.color >= 1);
  CHECK(step.color <= 2 * m + 1);
}

}  // namespace

TEST_CASE("list order pads with infinity") {
  CHECK(list_compare({1, 3, 5}, {1, 3}) < 0);
  CHECK(list_compare({1, 3}, {1, 3, 5}) > 0);
  CHECK(list_compare({1, 3, 5}, {1, 2}) > 0);
  CHECK(list_compare({1, 2}, {1, 3, 5}) < 0);
  CHECK(list_compare({2}, {1, 7}) > 0);
  CHECK(list_compare({1, 3}, {1, 3}) == 0);
  CHECK(list_compare({}, {}) == 0);

  // the empty list is the largest of all
  CHECK(list_compare({}, {4}) > 0);
  CHECK(list_less({4}, {}));
  CHECK_FALSE(list_less({}, {4}));
}

TEST_CASE("view of the running example component") {
  NacView view = mixed_view();
  CHECK(view.members == StateSet{0, 1});
  CHECK(view.size() == 2);
  CHECK(view.index_of(0) == 0);
  CHECK(view.index_of(1) == 1);

  using Pred = std::pair<std::uint32_t, bool>;
  // target 0 on letter 0: from 0 accepting, from 1 not
  CHECK(view.preds[0] == std::vector<Pred>{{0, true}, {1, false}});
  // target 0 on letter 1: its own nonaccepting loop
  CHECK(view.preds[1] == std::vector<Pred>{{0, false}});
  // target 1 on letter 0: branched off from 0
  CHECK(view.preds[2] == std::vector<Pred>{{0, false}});
  CHECK(view.preds[3] == std::vector<Pred>{{1, false}});
}

TEST_CASE("initial labelling") {
  CHECK(nac_initial({0, 1}, 0) == NacLabel{{1}, {}});
  CHECK(nac_initial({0, 1}, 1) == NacLabel{{}, {1}});
  CHECK(nac_initial({0, 1}, 5) == NacLabel{{}, {}});
}

TEST_CASE("internal image of a labelling") {
  NacView view = mixed_view();
  CHECK(nac_image(view, {{1}, {}}, 0) == StateSet{0, 1});
  CHECK(nac_image(view, {{1}, {}}, 1) == StateSet{0});
  CHECK(nac_image(view, {{}, {1}}, 0) == StateSet{0});
  CHECK(nac_image(view, {{}, {}}, 0).empty());
}

TEST_CASE("a branch point opens on the accepting edge") {
  // the run at 0 loops accepting (new branch number) and also branches off
  // to 1 carrying its plain list
  NacView view = mixed_view();
  NacStep step = nondet_succ(view, {{1}, {}}, 0, {});
  CHECK(step.label == NacLabel{{1, 2}, {1}});
  CHECK(step.bad == ColorSet{3});
  CHECK(step.good == ColorSet{3});
  CHECK(step.color == 5);
  check_step_invariants(step, 2);
}

TEST_CASE("merging back into the branch point truncates and reports good") {
  // both successors lose the integer 2, so <1,2,3> and <1,2> truncate to
  // their shortest vanished prefix <1>
  NacView view = mixed_view();
  NacStep step = nondet_succ(view, {{1, 2}, {1}}, 0, {});
  CHECK(step.label == NacLabel{{1}, {1}});
  CHECK(step.bad == ColorSet{3});
  CHECK(step.good == ColorSet{1, 3});
  CHECK(step.color == 2);
  check_step_invariants(step, 2);
}

TEST_CASE("an idle labelling reports only the sentinel") {
  NacView view = mixed_view();
  NacStep step = nondet_succ(view, {{}, {}}, 0, {});
  CHECK(step.label == NacLabel{{}, {}});
  CHECK(step.bad == ColorSet{3});
  CHECK(step.good == ColorSet{3});
  CHECK(step.color == 5);
}

TEST_CASE("a vanished integer is reported bad") {
  // letter 1 keeps both runs in place; the branch child <1,2> survives only
  // at state 1 and state 0 keeps <1>, so nothing vanishes. Letter 1 from a
  // label where only state 1 is reached drops the integer 1 entirely.
  NacView view = mixed_view();
  NacStep step = nondet_succ(view, {{}, {1}}, 0, {});
  // state 1's only letter-0 edges go to 0 (nonaccepting) and out of the set
  CHECK(step.label == NacLabel{{1}, {}});
  CHECK(step.bad == ColorSet{3});
  CHECK(step.good == ColorSet{3});
  CHECK(step.color == 5);

  NacStep vanish = nondet_succ(view, {{1}, {2}}, 1, {});
  // both self-loop without merging, nothing is lost
  CHECK(vanish.label == NacLabel{{1}, {2}});
  CHECK(vanish.bad == ColorSet{3});

  // a label reaching only state 0 steps on letter 1 and keeps its run; one
  // reaching only state 1 on letter 1 keeps its run too; dropping happens
  // when a run leaves the component entirely
  Nba leaver(2, 1, 0);
  leaver.add_edge(0, 0, 1, false);
  leaver.add_edge(1, 0, 1, false);
  NacView leave_view = make_nac_view(leaver, {0});
  NacStep left = nondet_succ(leave_view, {{1}}, 0, {});
  CHECK(left.label == NacLabel{{}});
  CHECK(left.bad == ColorSet{1, 2});
  CHECK(left.good == ColorSet{2});
  CHECK(left.color == 1);
}

TEST_CASE("entering states take fresh singletons in state order") {
  NacView view = mixed_view();
  NacStep step = nondet_succ(view, {{}, {}}, 0, {0, 1});
  CHECK(step.label == NacLabel{{1}, {2}});
  CHECK(step.bad == ColorSet{3});
  CHECK(step.good == ColorSet{3});
  check_step_invariants(step, 2);
}

TEST_CASE("an entering state colliding with the image is a composer bug") {
  NacView view = mixed_view();
  CHECK_THROWS_AS(nondet_succ(view, {{1}, {}}, 0, {1}), std::logic_error);
}

TEST_CASE("the smallest offer wins a contested target") {
  // both states feed target 1; the plain offer <1> beats the extended <2,f>
  Nba nba(2, 1, 0);
  nba.add_edge(0, 0, 1, true);
  nba.add_edge(1, 0, 1, false);
  NacView view = make_nac_view(nba, {0, 1});
  NacStep step = nondet_succ(view, {{2}, {1}}, 0, {});
  CHECK(step.label == NacLabel{{}, {1}});
  CHECK(step.bad == ColorSet{2, 3});
  CHECK(step.good == ColorSet{3});
  CHECK(step.color == 3);

  // with the labels swapped the extension of <1> wins; its parent vanished,
  // so the branch immediately folds back onto <1> and reports good
  NacStep swapped = nondet_succ(view, {{1}, {2}}, 0, {});
  CHECK(swapped.label == NacLabel{{}, {1}});
  CHECK(swapped.bad == ColorSet{2, 3});
  CHECK(swapped.good == ColorSet{1, 3});
  CHECK(swapped.color == 2);
}

TEST_CASE("label space stays within its bound") {
  auto explore = [](const Nba& nba, unsigned m) {
    StateSet members;
    for (unsigned i = 0; i < m; ++i) members.push_back(i);
    NacView view = make_nac_view(nba, members);

    std::set<NacLabel> seen;
    std::queue<NacLabel> work;
    NacLabel empty(m);
    seen.insert(empty);
    work.push(empty);
    while (!work.empty()) {
      NacLabel t = work.front();
      work.pop();
      for (letter_t a = 0; a < 2; ++a) {
        StateSet image = nac_image(view, t, a);
        for (const StateSet& enter : subsets(set_difference(members, image))) {
          NacStep step = nondet_succ(view, t, a, enter);
          check_step_invariants(step, m);
          if (seen.insert(step.label).second) work.push(step.label);
        }
      }
    }
    return seen.size();
  };

  for (unsigned m = 1; m <= 3; ++m) {
    CAPTURE(m);
    unsigned long fact = 1;
    for (unsigned i = 2; i <= m; ++i) fact *= i;
    CHECK(explore(branch_nac(m), m) <= 2 * fact * fact);
    CHECK(explore(dense_nac(m), m) <= 2 * fact * fact);
  }
}
