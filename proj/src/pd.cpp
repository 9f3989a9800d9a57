#include "rulinglab/pd.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <vector>

namespace rulinglab {

bool PDDiagram::well_formed(std::string* why) const {
  std::map<int, int> uses;
  auto touch = [&](int e) { uses[e]++; };
  for (const auto& c : crossings)
    for (int e : c.legs) touch(e);
  for (const auto& n : nodes) {
    if (n.legs.size() % 2 != 0 || n.legs.empty()) {
      if (why) *why = "node with odd or zero valence";
      return false;
    }
    for (int e : n.legs) touch(e);
  }
  for (const auto& [e, k] : uses) {
    if (e < 0 || e >= num_edges) {
      if (why) {
        std::ostringstream os;
        os << "edge id " << e << " out of range";
        *why = os.str();
      }
      return false;
    }
    if (k != 2) {
      if (why) {
        std::ostringstream os;
        os << "edge " << e << " used " << k << " times";
        *why = os.str();
      }
      return false;
    }
  }
  if ((int)uses.size() != num_edges) {
    if (why) *why = "unused edge ids";
    return false;
  }
  return true;
}

int PDDiagram::component_count() const {
  // half-edge = (site, slot); union edges and straight-through passes
  struct Half {
    int site;  // crossings first, then nodes
    int slot;
  };
  std::vector<Half> halves;
  std::map<int, std::vector<int>> edge_halves;  // edge -> indices into halves
  for (int i = 0; i < (int)crossings.size(); ++i)
    for (int s = 0; s < 4; ++s) {
      edge_halves[crossings[i].legs[s]].push_back((int)halves.size());
      halves.push_back({i, s});
    }
  for (int i = 0; i < (int)nodes.size(); ++i)
    for (int s = 0; s < (int)nodes[i].legs.size(); ++s) {
      edge_halves[nodes[i].legs[s]].push_back((int)halves.size());
      halves.push_back({(int)crossings.size() + i, s});
    }
  int n = (int)halves.size();
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (const auto& [e, hs] : edge_halves)
    if (hs.size() == 2) unite(hs[0], hs[1]);
  // straight-through: slot <-> slot + valence/2
  int base = 0;
  for (const auto& c : crossings) {
    (void)c;
    unite(base + 0, base + 2);
    unite(base + 1, base + 3);
    base += 4;
  }
  for (const auto& nd : nodes) {
    int v = (int)nd.legs.size();
    for (int s = 0; s < v / 2; ++s) unite(base + s, base + s + v / 2);
    base += v;
  }
  std::map<int, bool> roots;
  for (int i = 0; i < n; ++i) roots[find(i)] = true;
  return (int)roots.size() + free_loops;
}

}  // namespace rulinglab
