#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "rulinglab/front.hpp"
#include "common.hpp"

using namespace rulinglab;
using rltest::load;
using E = Event;

TEST_CASE("slice word parsing round trip") {
  FrontDiagram tre = load("trefoil.front");
  CHECK(tre.ok());
  CHECK(tre.left == 0);
  CHECK(tre.right == 0);
  CHECK(tre.events.size() == 7);
  CHECK(FrontDiagram::from_text(tre.to_text()) == tre);
  CHECK(FrontDiagram::from_json(tre.to_json()) == tre);

  FrontDiagram pin = load("pinched_trefoil.front");
  CHECK(pin.ok());
  CHECK(pin.vertices.size() == 1);
  CHECK(pin.vertices[0].lv == 2);
  CHECK(pin.vertices[0].rv == 2);
  CHECK(pin.vertices[0].name == "v");
  CHECK(FrontDiagram::from_text(pin.to_text()) == pin);
  CHECK(FrontDiagram::from_json(pin.to_json()) == pin);
}

TEST_CASE("strand counts") {
  FrontDiagram tre = load("trefoil.front");
  std::vector<int> want = {0, 2, 4, 4, 4, 4, 2, 0};
  CHECK(tre.strand_counts() == want);
  FrontDiagram theta = load("two_vertex.front");
  // LC1 V(1,3) V(3,1) RC1
  want = {0, 2, 4, 2, 0};
  CHECK(theta.strand_counts() == want);
}

TEST_CASE("validation catches bad inputs") {
  CHECK_FALSE(load("bad_rightcusp.front").ok());
  FrontDiagram d;  // crossing on no strands
  d.events.push_back(E::x(1));
  CHECK_FALSE(d.ok());
  d = FrontDiagram{};  // open end
  d.events.push_back(E::lc(1));
  CHECK_FALSE(d.ok());
  d = FrontDiagram{};  // dangling vertex id
  d.events.push_back(E::lc(1));
  d.events.push_back(E::v(1, 3));
  d.events.push_back(E::rc(1));
  CHECK_FALSE(d.ok());
}

TEST_CASE("commutation normal form") {
  // distant events commute: LC1 ... LC4 vs LC4 ... LC1 started elsewhere
  FrontDiagram a, b;
  a.events = {E::lc(1), E::lc(3), E::x(2), E::rc(2), E::rc(1)};
  b.events = {E::lc(1), E::lc(3), E::x(2), E::rc(2), E::rc(1)};
  CHECK(a.same_up_to_commutation(b));
  // applying a commutation move changes the word but not the class
  bool swapped_one = false;
  for (const MoveSite& s : enumerate_moves(a)) {
    if (s.move != "0") continue;
    FrontDiagram c = apply_move(a, s);
    CHECK(c.ok());
    CHECK(c.same_up_to_commutation(a));
    CHECK(c.normal_form() == a.normal_form());
    swapped_one = true;
  }
  CHECK(swapped_one);
  // changing the crossing position is not a commutation
  FrontDiagram e = a;
  e.events[2] = E::x(1);
  CHECK(e.ok());
  CHECK_FALSE(e.same_up_to_commutation(a));
}

TEST_CASE("concatenate and close") {
  FrontDiagram l, r;
  l.right = 2;
  l.events = {E::lc(1)};
  r.left = 2;
  r.events = {E::rc(1)};
  FrontDiagram glued = concatenate(l, r);
  CHECK(glued.ok());
  CHECK(glued.left == 0);
  CHECK(glued.right == 0);
  FrontDiagram half;  // closing a bordered diagram adds border vertices
  half.left = half.right = 2;
  FrontDiagram closed = close_diagram(half);
  CHECK(closed.ok());
  CHECK(closed.left == 0);
  CHECK(closed.vertices.size() == 2);
  CHECK(close_diagram(load("trefoil.front")) == load("trefoil.front"));
}

TEST_CASE("arc map structure") {
  FrontDiagram tre = load("trefoil.front");
  ArcMap arcs = build_arcs(tre);
  CHECK(arcs.num_arcs == 4);  // crossings do not break arcs
  CHECK(arcs.left_border.empty());
  CHECK(arcs.right_border.empty());
  for (size_t i = 0; i < tre.events.size(); ++i) {
    if (tre.events[i].kind == EventKind::X) continue;
    CHECK(arcs.event_arcs[i].arcs.size() == 2);
  }
  FrontDiagram theta = load("two_vertex.front");
  ArcMap ta = build_arcs(theta);
  CHECK(ta.event_arcs[1].arcs.size() == 4);  // (1,3) vertex
  CHECK(ta.event_arcs[2].arcs.size() == 4);  // (3,1) vertex
}

TEST_CASE("moves preserve validity") {
  std::mt19937 rng(3);
  for (const char* name : {"trefoil.front", "k52.front", "pinched_trefoil.front"}) {
    FrontDiagram d = load(name);
    for (int step = 0; step < 30; ++step) {
      auto sites = enumerate_moves(d);
      REQUIRE_FALSE(sites.empty());
      d = apply_move(d, sites[rng() % sites.size()]);
      REQUIRE(d.ok());
    }
  }
}

TEST_CASE("move round trips") {
  FrontDiagram tre = load("trefoil.front");
  // II insertion followed by the matching removal restores the diagram
  FrontDiagram up = apply_move(tre, {"IIa", 1, true});
  CHECK(up.ok());
  CHECK(up.events.size() == tre.events.size() + 2);
  CHECK(apply_move(up, {"IIa", 1, false}) == tre);
  // III applied twice at the same slice restores the diagram
  FrontDiagram braid;
  braid.left = braid.right = 3;
  braid.events = {E::x(1), E::x(2), E::x(1)};
  FrontDiagram tri = apply_move(braid, {"III", 0, true});
  CHECK(tri.ok());
  CHECK_FALSE(tri == braid);
  CHECK(apply_move(tri, {"III", 0, true}) == braid);
  // SL moves a marked crossing past the cusp and reverses at the swapped
  // positions; it refuses plain crossings
  FrontDiagram mtre = tre;
  mtre.events[2].marked = true;
  FrontDiagram sl = apply_move(mtre, {"SL", 1, true});
  CHECK(sl.ok());
  CHECK(apply_move(sl, {"SL", 1, true}) == mtre);
  CHECK_THROWS(apply_move(tre, {"SL", 1, true}));
  CHECK_THROWS(apply_move(tre, MoveSite{"III", 0, true}));
}

TEST_CASE("Ng resolution of the trefoil") {
  FrontDiagram tre = load("trefoil.front");
  NgResolution ng = ng_resolution(tre);
  CHECK(ng.pd.well_formed());
  CHECK(ng.pd.crossings.size() == 5);  // 3 crossings + 2 kinks
  CHECK(ng.pd.nodes.empty());
  CHECK(ng.pd.component_count() == 1);
  CHECK(ng.crossing_source.size() == 5);
  int kinks = 0;
  for (int src : ng.crossing_source)
    if (tre.events[src].kind == EventKind::RC) kinks++;
  CHECK(kinks == 2);
}

TEST_CASE("Ng resolution keeps vertices as nodes") {
  FrontDiagram pin = load("pinched_trefoil.front");
  NgResolution ng = ng_resolution(pin);
  CHECK(ng.pd.well_formed());
  CHECK(ng.pd.nodes.size() == 1);
  CHECK(ng.pd.nodes[0].legs.size() == 4);
  CHECK(ng.pd.nodes[0].east == 2);
}
