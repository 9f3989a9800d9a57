#include "rulinglab/maslov.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace rulinglab {

MaslovResult solve_maslov(const FrontDiagram& d, PotentialRing ring,
                          const std::map<int, int>& fixed) {
  ArcMap arcs = build_arcs(d);
  // constraint edges (u, l): mu(u) = mu(l) + 1
  struct Edge {
    int to;
    int diff;  // mu(to) = mu(from) + diff
  };
  std::vector<std::vector<Edge>> adj(arcs.num_arcs);
  for (size_t i = 0; i < d.events.size(); ++i) {
    EventKind k = d.events[i].kind;
    if (k != EventKind::LC && k != EventKind::RC) continue;
    int u = arcs.event_arcs[i].arcs[0], l = arcs.event_arcs[i].arcs[1];
    adj[l].push_back({u, 1});
    adj[u].push_back({l, -1});
  }
  MaslovResult res;
  res.mu.ring = ring;
  res.mu.values.assign(arcs.num_arcs, 0);
  std::vector<char> done(arcs.num_arcs, 0);
  std::vector<int> prev(arcs.num_arcs, -1);
  auto sweep = [&](int root, int v0) -> bool {
    std::queue<int> q;
    res.mu.values[root] = ring.reduce(v0);
    done[root] = 1;
    q.push(root);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (const Edge& e : adj[x]) {
        int want = ring.reduce((long long)res.mu.values[x] + e.diff);
        if (!done[e.to]) {
          res.mu.values[e.to] = want;
          done[e.to] = 1;
          prev[e.to] = x;
          q.push(e.to);
        } else if (res.mu.values[e.to] != want) {
          // report the tree path between the clashing arcs as the cycle
          std::vector<int> a, b;
          for (int t = x; t != -1; t = prev[t]) a.push_back(t);
          for (int t = e.to; t != -1; t = prev[t]) b.push_back(t);
          res.violating_cycle = a;
          res.violating_cycle.insert(res.violating_cycle.end(), b.rbegin(), b.rend());
          return false;
        }
      }
    }
    return true;
  };
  for (const auto& [arc, v] : fixed) {
    if (arc < 0 || arc >= arcs.num_arcs)
      throw std::invalid_argument("solve_maslov: fixed arc out of range");
    if (done[arc]) {
      if (res.mu.values[arc] != ring.reduce(v)) return res;
    } else if (!sweep(arc, v)) {
      return res;
    }
  }
  for (int a = 0; a < arcs.num_arcs; ++a)
    if (!done[a] && !sweep(a, 0)) return res;
  // post-hoc verification of every cusp constraint
  for (size_t i = 0; i < d.events.size(); ++i) {
    EventKind k = d.events[i].kind;
    if (k != EventKind::LC && k != EventKind::RC) continue;
    int u = arcs.event_arcs[i].arcs[0], l = arcs.event_arcs[i].arcs[1];
    if (res.mu.values[u] != ring.reduce((long long)res.mu.values[l] + 1))
      throw std::logic_error("solve_maslov: post-check failed");
  }
  res.feasible = true;
  return res;
}

int crossing_grading(const FrontDiagram& d, const ArcMap& arcs,
                     const MaslovPotential& mu, int event_index) {
  if (event_index < 0 || event_index >= (int)d.events.size() ||
      d.events[event_index].kind != EventKind::X)
    throw std::invalid_argument("crossing_grading: not a crossing event");
  int u = arcs.event_arcs[event_index].arcs[0];
  int l = arcs.event_arcs[event_index].arcs[1];
  return mu.ring.reduce((long long)mu.values[u] - mu.values[l]);
}

std::vector<int> crossing_gradings(const FrontDiagram& d, const ArcMap& arcs,
                                   const MaslovPotential& mu) {
  std::vector<int> g(d.events.size(), 0);
  for (size_t i = 0; i < d.events.size(); ++i)
    if (d.events[i].kind == EventKind::X)
      g[i] = crossing_grading(d, arcs, mu, (int)i);
  return g;
}

bool is_rho_graded_matching(const std::vector<int>& mu_by_label, int rv,
                            const Matching& phi, int rho) {
  auto cong = [&](long long v, int target) {
    if (rho == 0) return v == target;
    long long r = (v - target) % rho;
    return r == 0;
  };
  for (auto [i, j] : phi) {
    int a = std::min(i, j), b = std::max(i, j);
    bool same_side = (b <= rv) || (a > rv);
    long long diff = (long long)mu_by_label[a - 1] - mu_by_label[b - 1];
    if (same_side) {
      // a is the upper label on its side (smaller top-to-bottom index)
      if (!cong(diff, 1)) return false;
    } else {
      if (!cong(diff, 0)) return false;
    }
  }
  return true;
}

}  // namespace rulinglab
