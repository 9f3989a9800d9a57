#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rulinglab/maslov.hpp"
#include "common.hpp"

using namespace rulinglab;
using rltest::load;

TEST_CASE("potential of the standard unknot") {
  FrontDiagram d = load("unknot.front");
  ArcMap arcs = build_arcs(d);
  MaslovResult r = solve_maslov(d, {0});
  REQUIRE(r.feasible);
  CHECK(r.mu.values.size() == (size_t)arcs.num_arcs);
  // the two arcs differ by 1 across each cusp
  CHECK(std::abs(r.mu.values[0] - r.mu.values[1]) == 1);
}

TEST_CASE("rotation obstructs Z potentials") {
  FrontDiagram d = load("unknot_stab.front");  // rotation number 1
  MaslovResult r = solve_maslov(d, {0});
  CHECK_FALSE(r.feasible);
  CHECK_FALSE(r.violating_cycle.empty());
  // over Z/2 the obstruction disappears
  MaslovResult r2 = solve_maslov(d, {2});
  CHECK(r2.feasible);
  // the doubly stabilized unknot has rotation 0, so Z works
  CHECK(solve_maslov(load("unknot_stab2.front"), {0}).feasible);
}

TEST_CASE("fixed values propagate") {
  FrontDiagram d = load("unknot.front");
  MaslovResult r = solve_maslov(d, {0}, {{0, 5}});
  REQUIRE(r.feasible);
  CHECK(r.mu.values[0] == 5);
  // conflicting pins on the two cusp arcs are infeasible
  MaslovResult bad = solve_maslov(d, {0}, {{0, 0}, {1, 5}});
  CHECK_FALSE(bad.feasible);
}

TEST_CASE("crossing gradings of the max-tb trefoil") {
  FrontDiagram d = load("trefoil.front");
  ArcMap arcs = build_arcs(d);
  MaslovResult r = solve_maslov(d, {0});
  REQUIRE(r.feasible);
  std::vector<int> g = crossing_gradings(d, arcs, r.mu);
  for (size_t i = 0; i < d.events.size(); ++i)
    if (d.events[i].kind == EventKind::X) CHECK(g[i] == 0);
}

TEST_CASE("rho graded matchings") {
  // border of 4 points with potentials 1,0,1,0 top-down
  std::vector<int> mu = {1, 0, 1, 0};
  Matching eye = {{1, 2}, {3, 4}};      // both pairs differ by 1
  Matching cross = {{1, 3}, {2, 4}};    // both pairs differ by 0
  CHECK(is_rho_graded_matching(mu, 0, eye, 0));
  CHECK_FALSE(is_rho_graded_matching(mu, 0, cross, 0));
  CHECK(is_rho_graded_matching(mu, 0, cross, 1));  // rho = 1 allows all
  CHECK_FALSE(is_rho_graded_matching(mu, 0, cross, 2));
  // through pairs at a (2,2) vertex: labels 1,2 right and 3,4 left
  std::vector<int> vmu = {1, 0, 1, 0};
  Matching thru = {{1, 3}, {2, 4}};  // same potential across the vertex
  CHECK(is_rho_graded_matching(vmu, 2, thru, 0));
  Matching bent = {{1, 4}, {2, 3}};  // differs by 1 across the vertex
  CHECK_FALSE(is_rho_graded_matching(vmu, 2, bent, 0));
  CHECK(is_rho_graded_matching(vmu, 2, bent, 1));
}
