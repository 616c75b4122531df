#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "sccdet/determinize.hpp"
#include "sccdet/lasso.hpp"

using namespace sccdet;

TEST_CASE("color layout of the running example") {
  Nba nba = fixtures::mixed_nba();
  ColorLayout layout = make_color_layout(nba.num_states, classify(nba));
  CHECK(layout.nba_states == 7);
  CHECK(layout.dac_count == 1);
  REQUIRE(layout.blocks.size() == 2);
  CHECK(layout.blocks[0] == ColorBlock{2, 2});
  CHECK(layout.blocks[1] == ColorBlock{7, 2});
  CHECK(layout.top_color() == 12);
  CHECK(layout.color_count == 22);
}

TEST_CASE("block ranges stay disjoint and ordered") {
  for (const Nba& nba : {fixtures::mixed_nba(), fixtures::weak_nba(), fixtures::elevator_nba(),
                         fixtures::nac_only_nba(), gen_family_an(4)}) {
    SccClassification cls = classify(nba);
    ColorLayout layout = make_color_layout(nba.num_states, cls);
    CHECK(layout.dac_count == cls.dacs.size());
    CHECK(layout.blocks.size() == cls.dacs.size() + cls.nacs.size());
    color_t prev_end = 2;  // the weak pair owns {1, 2}
    for (unsigned i = 0; i < layout.blocks.size(); ++i) {
      const ColorBlock& b = layout.blocks[i];
      CHECK(b.base == prev_end);
      const StateSet& scc =
          i < layout.dac_count ? cls.dacs[i] : cls.nacs[i - layout.dac_count];
      CHECK(b.size == scc.size());
      prev_end = b.base + 2 * b.size + 1;
    }
    CHECK(layout.top_color() == prev_end);
  }
}

TEST_CASE("acceptance formula construction") {
  SUBCASE("no accepting components") {
    ColorLayout layout;
    layout.nba_states = 3;
    layout.color_count = 10;
    CHECK(build_acceptance(layout) == AccFormula::fin(1));
  }
  SUBCASE("a single block of size one") {
    ColorLayout layout;
    layout.nba_states = 2;
    layout.dac_count = 1;
    layout.blocks = {{2, 1}};
    layout.color_count = 7;
    AccFormula expected = AccFormula::disj(
        AccFormula::fin(1), AccFormula::conj(AccFormula::fin(3), AccFormula::inf(4)));
    CHECK(build_acceptance(layout) == expected);
  }
  SUBCASE("the running example") {
    Nba nba = fixtures::mixed_nba();
    ColorLayout layout = make_color_layout(nba.num_states, classify(nba));
    AccFormula acc = build_acceptance(layout);
    CHECK(acc.to_text() ==
          "Fin(1) | (Fin(3) & Inf(4)) | (Fin(3) & Fin(5) & Inf(6)) | (Fin(8) & Inf(9)) | "
          "(Fin(8) & Fin(10) & Inf(11))");

    // same structure, built by hand: per block c ranges over 1..size with
    // disjunct Fin(b+1) & ... & Fin(b+2c-1) & Inf(b+2c)
    AccFormula expected = AccFormula::fin(1);
    for (const ColorBlock& b : layout.blocks) {
      for (unsigned c = 1; c <= b.size; ++c) {
        AccFormula term = AccFormula::fin(b.base + 1);
        for (unsigned j = 3; j < 2 * c; j += 2)
          term = AccFormula::conj(term, AccFormula::fin(b.base + j));
        term = AccFormula::conj(term, AccFormula::inf(b.base + 2 * c));
        expected = AccFormula::disj(expected, term);
      }
    }
    CHECK(acc == expected);
  }
}

TEST_CASE("layout round-trips through its acceptance formula") {
  for (const Nba& nba : {fixtures::mixed_nba(), fixtures::weak_nba(), fixtures::elevator_nba(),
                         fixtures::nac_only_nba()}) {
    SccClassification cls = classify(nba);
    ColorLayout layout = make_color_layout(nba.num_states, cls);
    AccFormula acc = build_acceptance(layout);
    auto back = layout_from_acceptance(acc, layout.color_count);
    REQUIRE(back.has_value());
    CHECK(back->blocks == layout.blocks);
    CHECK(back->color_count == layout.color_count);
    CHECK(back->top_color() == layout.top_color());
    // the formula does not say which blocks were deterministic; they are
    // interchangeable for consumers of the recovered layout
    CHECK(back->dac_count == back->blocks.size());
  }
}

TEST_CASE("foreign acceptance shapes are rejected") {
  CHECK_FALSE(layout_from_acceptance(AccFormula::tt(), 4).has_value());
  CHECK_FALSE(layout_from_acceptance(AccFormula::inf(0), 1).has_value());
  // Buchi: not the composed shape
  CHECK_FALSE(layout_from_acceptance(parse_acc_formula("Inf(0)"), 1).has_value());
  // right pair but wrong colors
  CHECK_FALSE(layout_from_acceptance(parse_acc_formula("Fin(1) | (Fin(2) & Inf(4))"), 6)
                  .has_value());
  // declared inventory too small for the blocks
  CHECK_FALSE(layout_from_acceptance(parse_acc_formula("Fin(1) | (Fin(3) & Inf(4))"), 3)
                  .has_value());
  // genuine shape is accepted even with slack in the inventory
  CHECK(layout_from_acceptance(parse_acc_formula("Fin(1) | (Fin(3) & Inf(4))"), 7)
            .has_value());
}

TEST_CASE("initial macrostate of the running example") {
  Nba nba = fixtures::mixed_nba();
  Determinizer det(nba);
  Macrostate init = det.initial_macrostate();
  CHECK(init.weak.p.empty());
  CHECK(init.weak.o.empty());
  REQUIRE(init.dac_labels.size() == 1);
  CHECK(init.dac_labels[0] == DacLabel{kUnlabelled, kUnlabelled});
  REQUIRE(init.nac_labels.size() == 1);
  CHECK(init.nac_labels[0] == NacLabel{{1}, {}});
  CHECK(det.reached_set(init) == StateSet{0});
}

TEST_CASE("one step from the initial macrostate") {
  Nba nba = fixtures::mixed_nba();
  Determinizer det(nba);
  MacroStep step = det.macro_succ(det.initial_macrostate(), 0);
  CHECK(det.reached_set(step.next) == StateSet{0, 1});
  CHECK(step.next.weak.p.empty());
  CHECK(step.next.dac_labels[0] == DacLabel{kUnlabelled, kUnlabelled});
  // the accepting self-loop at 0 opens a branch; the branch to 1 stays plain
  CHECK(step.next.nac_labels[0] == NacLabel{{1, 2}, {1}});
  // weak pair idle (1), DAC idle (2 + 5), NAC fresh branch (7 + 5)
  CHECK(step.colors == ColorSet{1, 7, 12});
}

TEST_CASE("a composed step drives all components at once") {
  Nba nba = fixtures::mixed_nba();
  Determinizer det(nba);

  Macrostate m;
  m.weak = {{2, 3}, {3}};
  m.dac_labels = {{1, kUnlabelled}};
  m.nac_labels = {{{1, 2}, {1}}};
  CHECK(det.reached_set(m) == StateSet{0, 1, 2, 3, 4});

  MacroStep step = det.macro_succ(m, 0);
  // reached set steps to {0,1,2,3,4,5,6}; 4 re-enters its component
  CHECK(det.reached_set(step.next) == StateSet{0, 1, 2, 3, 4, 5, 6});
  CHECK(step.next.weak.p == StateSet{2, 3, 6});
  CHECK(step.next.weak.o == StateSet{2});
  CHECK(step.next.dac_labels[0] == DacLabel{2, 1});
  CHECK(step.next.nac_labels[0] == NacLabel{{1}, {1}});
  // weak obligation pending (2), DAC good value 1 (2 + 2), NAC merge (7 + 2)
  CHECK(step.colors == ColorSet{2, 4, 9});
}

TEST_CASE("macrostate keys are injective on the reached set") {
  Nba nba = fixtures::mixed_nba();
  Determinizer det(nba);
  std::set<std::string> keys;
  std::set<std::string> reprs;

  std::vector<Macrostate> frontier{det.initial_macrostate()};
  std::set<std::string> seen{macrostate_key(frontier[0])};
  while (!frontier.empty()) {
    Macrostate m = frontier.back();
    frontier.pop_back();
    for (letter_t a = 0; a < nba.alphabet_size; ++a) {
      MacroStep step = det.macro_succ(m, a);
      std::string key = macrostate_key(step.next);
      if (seen.insert(key).second) frontier.push_back(step.next);
    }
  }
  CHECK(seen.size() > 1);

  // distinct macrostates get distinct keys
  Macrostate a = det.initial_macrostate();
  Macrostate b = a;
  b.nac_labels[0] = {{1, 2}, {1}};
  CHECK(macrostate_key(a) != macrostate_key(b));
  Macrostate c = a;
  c.weak.p = {2};
  CHECK(macrostate_key(a) != macrostate_key(c));
  Macrostate d = a;
  d.dac_labels[0] = {1, kUnlabelled};
  CHECK(macrostate_key(a) != macrostate_key(d));
}

TEST_CASE("full construction on the running example") {
  Nba nba = fixtures::mixed_nba();
  Determinizer det(nba);
  Dela dela = build_dela(det);

  CHECK(dela.alphabet_size == 2);
  CHECK(dela.color_count == 22);
  CHECK(dela.acceptance == build_acceptance(det.layout()));
  // state space bound: 3^|W| * 3|D|! * 2(|N|!)^2 = 27 * 6 * 8
  CHECK(dela.num_states <= 1296);

  const color_t top = det.layout().top_color();
  for (state_t q = 0; q < dela.num_states; ++q) {
    for (letter_t a = 0; a < dela.alphabet_size; ++a) {
      const ColorSet& colors = dela.step_colors(q, a);
      REQUIRE(colors.size() == 3);
      CHECK(dela.step(q, a) < dela.num_states);
      // one color per component range
      CHECK(colors[0] >= 1);
      CHECK(colors[0] <= 2);
      CHECK(colors[1] >= 3);
      CHECK(colors[1] <= 7);
      CHECK(colors[2] >= 8);
      CHECK(colors[2] <= top);
    }
  }
}

TEST_CASE("construction sizes for the small fixtures") {
  SUBCASE("weak input") {
    Dela dela = build_dela(fixtures::weak_nba());
    CHECK(dela.num_states <= 27);
    CHECK(dela.color_count == 10);
    CHECK(dela.acceptance == AccFormula::fin(1));
    for (state_t q = 0; q < dela.num_states; ++q)
      for (letter_t a = 0; a < dela.alphabet_size; ++a)
        CHECK(dela.step_colors(q, a).size() == 1);
  }
  SUBCASE("one deterministic accepting component") {
    Nba nba = fixtures::elevator_nba();
    Dela dela = build_dela(nba);
    // 3^3 * 3 * 2! = 162 macrostates at most
    CHECK(dela.num_states <= 162);
    CHECK(dela.color_count == 16);
    ColorLayout layout = make_color_layout(nba.num_states, classify(nba));
    CHECK(dela.acceptance == build_acceptance(layout));
  }
  SUBCASE("one nondeterministic accepting component") {
    Nba nba = fixtures::nac_only_nba();
    Dela dela = build_dela(nba);
    // 3^1 * 2(2!)^2 = 24 macrostates at most
    CHECK(dela.num_states <= 24);
    CHECK(dela.color_count == 10);
  }
}

TEST_CASE("the state budget is enforced") {
  BuildOptions options;
  options.max_states = 2;
  CHECK_THROWS_AS(build_dela(fixtures::mixed_nba(), options), ResourceLimitError);
}

TEST_CASE("every deterministic state is reachable") {
  Dela dela = build_dela(fixtures::mixed_nba());
  std::vector<bool> reached(dela.num_states, false);
  std::vector<state_t> queue{dela.initial};
  reached[dela.initial] = true;
  while (!queue.empty()) {
    state_t q = queue.back();
    queue.pop_back();
    for (letter_t a = 0; a < dela.alphabet_size; ++a) {
      state_t r = dela.step(q, a);
      if (!reached[r]) {
        reached[r] = true;
        queue.push_back(r);
      }
    }
  }
  for (state_t q = 0; q < dela.num_states; ++q) CHECK(reached[q]);
}
