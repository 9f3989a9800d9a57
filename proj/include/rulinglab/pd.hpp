// Planar diagram codes for closed (unoriented) diagrams: crossings with
// over/under data, rigid even-valent nodes, and crossingless free loops.
//
// Every edge id occurs at exactly two leg slots over the whole diagram
// (a kink uses the same edge at two slots of one crossing).  Legs are stored
// in clockwise cyclic order as drawn (x right, y up): for sites coming from a
// front slice, slot 0 = east-top, 1 = east-bottom, 2 = west-bottom,
// 3 = west-top.  At a crossing the two strands are the slot pairs {0,2} and
// {1,3}; over02 says the {0,2} strand is the over-strand.

#pragma once

#include <array>
#include <string>
#include <vector>

namespace rulinglab {

struct PDCrossing {
  std::array<int, 4> legs;
  bool over02 = false;
};

struct PDNode {
  // even length; rigid: strands pass through to the cyclically opposite slot
  std::vector<int> legs;
  // for nodes from a front slice: legs 0..east-1 are the east (outgoing)
  // half-edges; the rest are west.  Joining two west legs makes a right cusp.
  int east = 0;
};

struct PDDiagram {
  std::vector<PDCrossing> crossings;
  std::vector<PDNode> nodes;
  int free_loops = 0;
  int num_edges = 0;  // edges are labeled 0..num_edges-1

  int fresh_edge() { return num_edges++; }

  // each edge id appears exactly twice among all leg slots
  bool well_formed(std::string* why = nullptr) const;

  // number of closed components, tracing straight through crossings and nodes
  int component_count() const;
};

}  // namespace rulinglab
