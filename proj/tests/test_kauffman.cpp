#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "rulinglab/kauffman.hpp"
#include "common.hpp"

using namespace rulinglab;
using rltest::load;
using E = Event;

namespace {

FrontDiagram front(std::vector<Event> ev, std::vector<VertexInfo> vs = {}) {
  FrontDiagram d;
  d.events = std::move(ev);
  d.vertices = std::move(vs);
  REQUIRE(d.ok());
  return d;
}

MultiLaurent bracket(const FrontDiagram& d) {
  return kauffman_unnormalized(ng_resolution(d).pd);
}

}  // namespace

TEST_CASE("delta is forced by the skein axioms") {
  // evaluate a 2-crossing diagram of a split unknot pair two ways: the
  // crossing-switch relation at either crossing resolves it to kinked
  // unknots, so [unknot ⊔ unknot] / [unknot] must equal delta
  FrontDiagram two = front({E::lc(1), E::rc(1), E::lc(1), E::rc(1)});
  FrontDiagram one = front({E::lc(1), E::rc(1)});
  CHECK(bracket(two) == kauffman_delta() * bracket(one) * bracket(one));
  // clasped version: same split link forced through the skein relation
  FrontDiagram clasp = front({E::lc(1), E::lc(2), E::x(2), E::x(2), E::rc(2), E::rc(1)});
  CHECK(ng_resolution(clasp).pd.component_count() == 2);
}

TEST_CASE("unknots and kinks") {
  CHECK(bracket(front({E::lc(1), E::rc(1)})) == MultiLaurent::a(-1));
  // each stabilization adds one negative kink
  CHECK(bracket(load("unknot_stab.front")) == MultiLaurent::a(-2));
  CHECK(bracket(load("unknot_stab2.front")) == MultiLaurent::a(-3));
}

TEST_CASE("normalization divides out the writhe") {
  for (const char* name : {"unknot.front", "unknot_stab.front", "unknot_stab2.front"}) {
    FrontDiagram d = load(name);
    CHECK(kauffman_normalized(d) == MultiLaurent::one());
  }
  // the trefoil and its unknots differ after normalization
  CHECK_FALSE(kauffman_normalized(load("trefoil.front")) == MultiLaurent::one());
}

TEST_CASE("total tb fixtures") {
  CHECK(total_tb(load("unknot.front")) == -1);
  CHECK(total_tb(load("unknot_stab.front")) == -2);
  CHECK(total_tb(load("unknot_stab2.front")) == -3);
  CHECK(total_tb(load("trefoil.front")) == 1);
  CHECK(total_tb(load("k52.front")) == 1);
  CHECK(total_tb(load("pinched_trefoil.front")) == 0);
  CHECK(total_tb(load("two_vertex.front")) == -1);
}

TEST_CASE("node expansion satisfies the vertex skein") {
  FrontDiagram pin = load("pinched_trefoil.front");
  FrontDiagram lminus = front({E::lc(1), E::lc(3), E::x(2), E::rc(1), E::rc(1)});
  FrontDiagram k0 = front({E::lc(1), E::lc(3), E::x(2), E::x(2), E::rc(1), E::rc(1)});
  FrontDiagram kinf =
      front({E::lc(1), E::lc(3), E::rc(2), E::lc(2), E::x(2), E::rc(1), E::rc(1)});
  CHECK(bracket(pin) ==
        bracket(lminus) - MultiLaurent::B() * bracket(k0) -
            MultiLaurent::A() * bracket(kinf));
}

TEST_CASE("ruling coefficient theorem on the corpus") {
  for (const char* name : {"unknot.front", "unknot_stab.front", "unknot_stab2.front",
                           "trefoil.front", "k52.front", "pinched_trefoil.front",
                           "pinched_trefoil_alt.front", "two_vertex.front"}) {
    KvReport r = check_ruling_coefficient(load(name));
    CHECK_MESSAGE(r.equal, name, ": ", r.lhs.str(), " vs ", r.rhs.str());
  }
}

TEST_CASE("ruling coefficient theorem on random graphs") {
  std::mt19937 rng(17);
  std::vector<std::pair<int, int>> shapes = {{2, 2}, {1, 3}, {3, 1}, {0, 4}, {4, 0}};
  int done = 0;
  while (done < 40) {
    FrontDiagram d;
    if (!rltest::random_front(rng, shapes, 1 + (int)(rng() % 2), 6, &d)) continue;
    KvReport r = check_ruling_coefficient(d);
    CHECK_MESSAGE(r.equal, d.to_text());
    done++;
  }
}

TEST_CASE("degree bound") {
  std::mt19937 rng(19);
  int done = 0;
  while (done < 30) {
    FrontDiagram d;
    if (!rltest::random_front(rng, {{2, 2}, {1, 3}}, (int)(rng() % 2), 7, &d)) continue;
    MultiLaurent f = ml_substitute_AB(bracket(d));
    REQUIRE_FALSE(f.is_zero());
    CHECK(f.deg_a() <= -1);
    done++;
  }
}
