#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "rulinglab/resolve.hpp"
#include "common.hpp"

using namespace rulinglab;
using rltest::load;

TEST_CASE("matching enumeration") {
  CHECK(enumerate_matchings(0).size() == 1);  // the empty matching
  CHECK(enumerate_matchings(2).size() == 1);
  CHECK(enumerate_matchings(4).size() == 3);
  CHECK(enumerate_matchings(6).size() == 15);
  CHECK(enumerate_matchings(8).size() == 105);
  for (const Matching& m : enumerate_matchings(6)) {
    std::vector<int> seen;
    for (auto [a, b] : m) {
      CHECK(a < b);
      seen.push_back(a);
      seen.push_back(b);
    }
    std::sort(seen.begin(), seen.end());
    CHECK(seen == std::vector<int>{1, 2, 3, 4, 5, 6});
  }
  Matching m = {{1, 4}, {2, 3}};
  CHECK(parse_matching(matching_str(m)) == m);
}

TEST_CASE("permutation braids") {
  std::mt19937 rng(5);
  for (int it = 0; it < 40; ++it) {
    int b = 2 + (int)(rng() % 4);
    std::vector<int> pi(b);
    std::iota(pi.begin(), pi.end(), 0);
    std::shuffle(pi.begin(), pi.end(), rng);
    BraidWord w = permutation_braid(pi);
    CHECK(braid_permutation(b, w) == pi);
    // one crossing per inversion
    int inv = 0;
    for (int i = 0; i < b; ++i)
      for (int j = i + 1; j < b; ++j)
        if (pi[i] > pi[j]) inv++;
    CHECK((int)w.size() == inv);
  }
}

TEST_CASE("half twist and complements") {
  for (int b = 2; b <= 5; ++b) {
    BraidWord delta = half_twist(b);
    CHECK((int)delta.size() == b * (b - 1) / 2);
    std::vector<int> rev(b);
    for (int i = 0; i < b; ++i) rev[i] = b - 1 - i;
    CHECK(braid_permutation(b, delta) == rev);
  }
  std::mt19937 rng(6);
  for (int it = 0; it < 20; ++it) {
    int b = 2 + (int)(rng() % 4);
    std::vector<int> pi(b);
    std::iota(pi.begin(), pi.end(), 0);
    std::shuffle(pi.begin(), pi.end(), rng);
    BraidWord w = permutation_braid(pi);
    BraidWord c = complement_braid(b, w);
    BraidWord whole = w;
    whole.insert(whole.end(), c.begin(), c.end());
    CHECK(braid_permutation(b, whole) == braid_permutation(b, half_twist(b)));
    CHECK(w.size() + c.size() == half_twist(b).size());
  }
}

TEST_CASE("mirror and tau") {
  BraidWord w = {{1}, {1}, {2}};
  BraidWord m = mirror(w);
  CHECK(m.size() == 3);
  CHECK(m[0].i == 2);
  CHECK(m[1].i == 1);
  w = {{1}, {2}, {1}};
  BraidWord t = tau(3, w);
  CHECK(t[0].i == 2);
  CHECK(t[1].i == 1);
  CHECK(t[2].i == 2);
}

TEST_CASE("resolving the pinched trefoil vertex") {
  FrontDiagram d = load("pinched_trefoil.front");
  auto res = full_resolutions(d, 1);
  REQUIRE(res.size() == 3);
  int with_marks = 0;
  for (const Resolution& r : res) {
    CHECK(r.diagram.ok());
    CHECK(r.diagram.vertices.empty());
    CHECK(r.phis.size() == 1);
    ArcMap arcs = build_arcs(r.diagram);
    CHECK(r.arc_pot.size() == (size_t)arcs.num_arcs);
    bool marked = false;
    for (const Event& e : r.diagram.events)
      if (e.kind == EventKind::X && e.marked) marked = true;
    if (marked) with_marks++;
  }
  // the double-crossing resolution carries marked crossings
  CHECK(with_marks >= 1);
}

TEST_CASE("resolutions of the two vertex graph") {
  FrontDiagram d = load("two_vertex.front");
  auto res = full_resolutions(d, 1);
  CHECK(res.size() == 9);  // 3 matchings per (1,3)-type vertex
  for (const Resolution& r : res) {
    CHECK(r.diagram.ok());
    CHECK(r.diagram.vertices.empty());
    CHECK(r.phis.size() == 2);
  }
}

TEST_CASE("graded resolution counts depend on rho") {
  // over Z only through-type matchings survive at a (2,2) vertex with
  // alternating potentials; rho = 1 allows all three
  FrontDiagram d = load("pinched_trefoil.front");
  CHECK(full_resolutions(d, 1).size() == 3);
  CHECK(full_resolutions(d, 2).size() == 2);
  CHECK(full_resolutions(d, 0).size() == 1);
}
