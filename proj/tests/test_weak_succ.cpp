#include <doctest.h>

#include "fixtures.hpp"
#include "sccdet/lasso.hpp"
#include "sccdet/weak_succ.hpp"

using namespace sccdet;

TEST_CASE("initial pair") {
  SUBCASE("initial state outside the weak part") {
    Nba nba = fixtures::mixed_nba();
    WeakState ws = weak_initial(classify(nba), nba.initial);
    CHECK(ws.p.empty());
    CHECK(ws.o.empty());
  }
  SUBCASE("initial state inside an accepting weak component") {
    Nba nba = fixtures::weak_nba();
    WeakState ws = weak_initial(classify(nba), nba.initial);
    CHECK(ws.p == StateSet{0});
    CHECK(ws.o.empty());
  }
}

TEST_CASE("one step on the running example") {
  Nba nba = fixtures::mixed_nba();
  SccClassification cls = classify(nba);

  // from {2, 3} with obligation {3}, reading letter 0: the reached set is
  // {2, 3, 4, 6}, its weak part {2, 3, 6}; the obligation steps to {2}
  WeakState ws{{2, 3}, {3}};
  StateSet s_next = reached_step(nba, {2, 3}, 0);
  CHECK(s_next == StateSet{2, 3, 4, 6});
  WeakStep step = weak_succ(nba, cls, ws, 0, s_next);
  CHECK(step.next.p == StateSet{2, 3, 6});
  CHECK(step.next.o == StateSet{2});
  CHECK(step.color == 2);

  SUBCASE("an empty obligation refills from the accepting weak states") {
    WeakState empty_o{{2, 3}, {}};
    WeakStep refill = weak_succ(nba, cls, empty_o, 0, s_next);
    CHECK(refill.next.p == StateSet{2, 3, 6});
    CHECK(refill.next.o == StateSet{2, 3});
    CHECK(refill.color == 1);
  }
}

TEST_CASE("the nonaccepting sink never joins the obligation") {
  Nba nba = fixtures::mixed_nba();
  SccClassification cls = classify(nba);
  WeakState ws{{6}, {}};
  StateSet s_next = reached_step(nba, {6}, 0);
  WeakStep step = weak_succ(nba, cls, ws, 0, s_next);
  CHECK(step.next.p == StateSet{6});
  CHECK(step.next.o.empty());
  CHECK(step.color == 1);
}

TEST_CASE("empty pair stays empty with the idle color") {
  Nba nba = fixtures::mixed_nba();
  SccClassification cls = classify(nba);
  WeakStep step = weak_succ(nba, cls, WeakState{}, 1, reached_step(nba, {0}, 1));
  CHECK(step.next.p.empty());
  CHECK(step.next.o.empty());
  CHECK(step.color == 1);
}

TEST_CASE("breakpoint walk on the weak automaton") {
  Nba nba = fixtures::weak_nba();
  SccClassification cls = classify(nba);

  WeakState ws = weak_initial(cls, nba.initial);
  StateSet cur{nba.initial};

  StateSet next = reached_step(nba, cur, 0);
  WeakStep first = weak_succ(nba, cls, ws, 0, next);
  CHECK(first.next.p == StateSet{1, 2});
  CHECK(first.next.o == StateSet{1});
  CHECK(first.color == 1);

  StateSet next2 = reached_step(nba, next, 0);
  WeakStep second = weak_succ(nba, cls, first.next, 0, next2);
  CHECK(second.next.p == StateSet{0, 2});
  CHECK(second.next.o == StateSet{0});
  CHECK(second.color == 2);
}

TEST_CASE("pair invariants hold along random walks") {
  for (unsigned seed = 1; seed <= 40; ++seed) {
    RandomNbaParams params;
    params.seed = seed;
    params.states = 2 + seed % 6;
    params.transition_density = 1.0 + 0.5 * (seed % 4);
    params.accepting_density = 0.4;
    Nba nba = gen_random_nba(params);
    SccClassification cls = classify(nba);
    CAPTURE(seed);

    WeakState ws = weak_initial(cls, nba.initial);
    StateSet cur{nba.initial};
    CHECK(ws.p == set_intersect(cur, cls.weak));

    unsigned long x = 88172645463325252ul ^ seed;  // xorshift letter picks
    for (int step = 0; step < 60; ++step) {
      x ^= x << 13;
      x ^= x >> 7;
      x ^= x << 17;
      letter_t a = static_cast<letter_t>(x % nba.alphabet_size);

      StateSet s_next = reached_step(nba, cur, a);
      WeakStep ws_next = weak_succ(nba, cls, ws, a, s_next);

      // the reached part is exactly the weak slice of the macro successor
      CHECK(ws_next.next.p == set_intersect(s_next, cls.weak));
      // obligations live inside the accepting weak slice of the reached part
      CHECK(set_intersect(ws_next.next.o, ws_next.next.p) == ws_next.next.o);
      CHECK(set_intersect(ws_next.next.o, cls.weak_accepting) == ws_next.next.o);
      // the breakpoint color marks exactly the steps out of an empty obligation
      CHECK(ws_next.color == (ws.o.empty() ? 1 : 2));

      ws = ws_next.next;
      cur = s_next;
    }
  }
}
