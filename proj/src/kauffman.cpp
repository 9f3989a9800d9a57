#include "rulinglab/kauffman.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "rulinglab/ruling.hpp"

namespace rulinglab {

namespace {

// edges e2 -> e1 everywhere; a self-join closes a crossingless circle
void join_edges(PDDiagram& pd, int e1, int e2) {
  if (e1 == e2) {
    pd.free_loops++;
    return;
  }
  for (auto& c : pd.crossings)
    for (int& e : c.legs)
      if (e == e2) e = e1;
  for (auto& n : pd.nodes)
    for (int& e : n.legs)
      if (e == e2) e = e1;
}

// two joins on the legs of one removed site; the second pair must see the
// renaming done by the first (the legs may share edges)
void join_pairs(PDDiagram& pd, std::array<int, 4> legs, int i1, int j1, int i2,
                int j2) {
  int e1 = legs[i1], e2 = legs[j1];
  join_edges(pd, e1, e2);
  if (e1 != e2)
    for (int& e : legs)
      if (e == e2) e = e1;
  join_edges(pd, legs[i2], legs[j2]);
}

// sign of removing a kink whose repeated edge sits at adjacent slots (lo, lo+1)
int kink_sign(int lo, bool over02) {
  bool east_west = (lo == 0 || lo == 2);  // slot pairs {0,1} and {2,3}
  return east_west == over02 ? 1 : -1;
}

// traversal pass: entering `enter` exits at the cyclically opposite slot
struct Pass {
  int enter;
  int comp;
};

struct Trace {
  // per site (crossings then nodes), passes in traversal order of discovery
  std::map<int, std::vector<Pass>> passes;
  std::vector<std::pair<int, int>> order;  // (site, enter) in walk order
  int comps = 0;
};

Trace trace_diagram(const PDDiagram& pd) {
  struct End {
    int site, slot;
  };
  std::map<int, std::vector<End>> ends;
  auto valence = [&](int site) {
    return site < (int)pd.crossings.size()
               ? 4
               : (int)pd.nodes[site - pd.crossings.size()].legs.size();
  };
  auto leg = [&](int site, int slot) {
    return site < (int)pd.crossings.size()
               ? pd.crossings[site].legs[slot]
               : pd.nodes[site - pd.crossings.size()].legs[slot];
  };
  int nsites = (int)(pd.crossings.size() + pd.nodes.size());
  for (int s = 0; s < nsites; ++s)
    for (int k = 0; k < valence(s); ++k) ends[leg(s, k)].push_back({s, k});
  for (const auto& [e, v] : ends)
    if (v.size() != 2) throw std::invalid_argument("trace: open diagram");
  std::map<std::pair<int, int>, bool> visited;
  Trace t;
  for (int s0 = 0; s0 < nsites; ++s0) {
    for (int k0 = 0; k0 < valence(s0); ++k0) {
      if (visited[{s0, k0}]) continue;
      int s = s0, k = k0;
      do {
        visited[{s, k}] = true;
        t.passes[s].push_back({k, t.comps});
        t.order.push_back({s, k});
        int v = valence(s);
        int out = (k + v / 2) % v;
        visited[{s, out}] = true;
        int e = leg(s, out);
        End a = ends[e][0], b = ends[e][1];
        if (a.site == s && a.slot == out) {
          s = b.site;
          k = b.slot;
        } else {
          s = a.site;
          k = a.slot;
        }
      } while (!(s == s0 && k == k0));
      t.comps++;
    }
  }
  return t;
}

// direction of travel when entering a crossing at slot k (x east, y north)
std::pair<int, int> enter_dir(int k) {
  switch (k) {
    case 0: return {-1, -1};
    case 1: return {-1, 1};
    case 2: return {1, 1};
    default: return {1, -1};
  }
}

// +1 iff det(d_over, d_under) > 0; passes are the two entries of one crossing
int crossing_sign(const PDCrossing& c, int enter_a, int enter_b) {
  bool a_on_02 = (enter_a % 2 == 0);
  auto da = enter_dir(enter_a), db = enter_dir(enter_b);
  auto dov = (a_on_02 == c.over02) ? da : db;
  auto dun = (a_on_02 == c.over02) ? db : da;
  long long det = (long long)dov.first * dun.second - (long long)dov.second * dun.first;
  return det > 0 ? 1 : -1;
}

std::string memo_key(const PDDiagram& pd) {
  std::map<int, int> rl;
  std::ostringstream os;
  for (const auto& c : pd.crossings) {
    for (int e : c.legs) {
      auto [it, fresh] = rl.try_emplace(e, (int)rl.size());
      os << it->second << ",";
    }
    os << (c.over02 ? "o" : "u") << ";";
  }
  os << "#" << pd.free_loops;
  return os.str();
}

MultiLaurent eval_pd(PDDiagram pd, std::map<std::string, MultiLaurent>& memo);

MultiLaurent eval_core(const PDDiagram& pd0, std::map<std::string, MultiLaurent>& memo) {
  PDDiagram pd = pd0;
  int kink_a = 0;  // collected a-exponent from removed kinks
  bool again = true;
  while (again) {
    again = false;
    for (size_t i = 0; i < pd.crossings.size(); ++i) {
      const auto& L = pd.crossings[i].legs;
      int lo = -1;
      for (int s = 0; s < 4; ++s)
        if (L[s] == L[(s + 1) % 4]) lo = s;
      if (lo < 0) continue;
      kink_a += kink_sign(lo, pd.crossings[i].over02);
      int r1 = L[(lo + 2) % 4], r2 = L[(lo + 3) % 4];
      pd.crossings.erase(pd.crossings.begin() + i);
      join_edges(pd, r1, r2);
      again = true;
      break;
    }
  }
  MultiLaurent kink_factor = MultiLaurent::a(kink_a);
  if (pd.crossings.empty()) {
    int circles = pd.free_loops;
    if (circles < 1) throw std::logic_error("eval: empty closed diagram");
    MultiLaurent v = MultiLaurent::one();
    for (int i = 1; i < circles; ++i) v *= kauffman_delta();
    return v * kink_factor;
  }
  Trace t = trace_diagram(pd);
  // first pass in walk order that first reaches its crossing on the under strand
  int defect = -1;
  std::map<int, bool> seen;
  for (const auto& [site, enter] : t.order) {
    if (seen[site]) continue;
    seen[site] = true;
    bool on_02 = (enter % 2 == 0);
    if (on_02 != pd.crossings[site].over02) {
      defect = site;
      break;
    }
  }
  if (defect < 0) {
    // descending: unlink with self-writhe kinks
    MultiLaurent v = MultiLaurent::one();
    for (int i = 1; i < t.comps + pd.free_loops; ++i) v *= kauffman_delta();
    int w = 0;
    for (size_t c = 0; c < pd.crossings.size(); ++c) {
      const auto& ps = t.passes[(int)c];
      if (ps.size() == 2 && ps[0].comp == ps[1].comp)
        w += crossing_sign(pd.crossings[c], ps[0].enter, ps[1].enter);
    }
    return v * MultiLaurent::a(w) * kink_factor;
  }
  // Dubrovnik-type relation, calibrated against the node-expansion fixture:
  // [L-] - [L+] = z([sm_h] - [sm_v]) with delta = 1 + (a - a^{-1}) z^{-1}
  const PDCrossing c = pd.crossings[defect];
  int s = c.over02 ? -1 : 1;
  PDDiagram sw = pd;
  sw.crossings[defect].over02 = !c.over02;
  PDDiagram h = pd;  // horizontal smoothing: {3,0} and {1,2}
  h.crossings.erase(h.crossings.begin() + defect);
  join_pairs(h, c.legs, 3, 0, 1, 2);
  PDDiagram v = pd;  // vertical smoothing: {0,1} and {2,3}
  v.crossings.erase(v.crossings.begin() + defect);
  join_pairs(v, c.legs, 0, 1, 2, 3);
  MultiLaurent z = MultiLaurent::z_half(2);
  MultiLaurent out = eval_pd(sw, memo) +
                     (eval_pd(h, memo) - eval_pd(v, memo)) * z.scaled(s);
  return out * kink_factor;
}

MultiLaurent eval_pd(PDDiagram pd, std::map<std::string, MultiLaurent>& memo) {
  std::string k = memo_key(pd);
  auto it = memo.find(k);
  if (it != memo.end()) return it->second;
  MultiLaurent v = eval_core(pd, memo);
  memo[k] = v;
  return v;
}

}  // namespace

namespace {
// over02 of the forced crossing in an interleaved node smoothing: the
// cusped loop arc lies in front; a (2,2) vertex gives the plain front
// crossing with the descending strand on top
bool kv_node_over(int east) { return east == 0 || east >= 3; }
}  // namespace

MultiLaurent kauffman_delta() {
  // 1 + (a - a^{-1}) z^{-1}
  MultiLaurent d = MultiLaurent::one();
  d += MultiLaurent::monomial(1, -2, 0, 0);
  d += MultiLaurent::monomial(-1, -2, 0, 0, -1);
  return d;
}

MultiLaurent kauffman_unnormalized(const PDDiagram& pd) {
  if (!pd.nodes.empty()) {
    const PDNode nd = pd.nodes.back();
    if (nd.legs.size() != 4)
      throw std::invalid_argument("kauffman: only 4-valent nodes can be expanded");
    PDDiagram base = pd;
    base.nodes.pop_back();
    int east = nd.east;
    // half-edge labels: east 1..east top-down, west east+1..4 top-down;
    // slots run clockwise from NE, so west labels reverse
    auto slot = [&](int label) { return label <= east ? label - 1 : east + 4 - label; };
    // child for one perfect matching of the labels: joining two west legs
    // closes a right cusp (kink a^{-1}); interleaved slot pairs force the
    // single crossing of the front smoothing
    auto child = [&](int a1, int b1, int a2, int b2) {
      int i = slot(a1), j = slot(b1), k = slot(a2), l = slot(b2);
      int kink = 0;
      if (i >= east && j >= east) --kink;
      if (k >= east && l >= east) --kink;
      MultiLaurent f = MultiLaurent::a(kink);
      if (((i ^ j) & 1) == 0) {
        PDDiagram x = base;
        x.crossings.push_back(
            {{nd.legs[0], nd.legs[1], nd.legs[2], nd.legs[3]}, kv_node_over(east)});
        return f * kauffman_unnormalized(x);
      }
      PDDiagram s = base;
      join_pairs(s, {nd.legs[0], nd.legs[1], nd.legs[2], nd.legs[3]}, i, j, k, l);
      return f * kauffman_unnormalized(s);
    };
    // [node] = [{1,3},{2,4}] - B[{1,4},{2,3}] - A[{1,2},{3,4}]
    return child(1, 3, 2, 4) - MultiLaurent::B() * child(1, 4, 2, 3) -
           MultiLaurent::A() * child(1, 2, 3, 4);
  }
  std::map<std::string, MultiLaurent> memo;
  return eval_pd(pd, memo);
}

int total_tb(const FrontDiagram& d) {
  NgResolution r = ng_resolution(d);
  for (const auto& n : r.pd.nodes)
    if (n.legs.size() != 4 && n.legs.size() != 2)
      throw std::invalid_argument("total_tb: vertex valence must be 2 or 4");
  Trace t = trace_diagram(r.pd);
  int w = 0;
  for (size_t c = 0; c < r.pd.crossings.size(); ++c) {
    const auto& ps = t.passes[(int)c];
    if (ps.size() == 2)
      w += crossing_sign(r.pd.crossings[c], ps[0].enter, ps[1].enter);
  }
  // the virtual resolution turns each (2,2) node into a transverse
  // crossing with the descending strand on top; count it like the rest
  // (other 4-valent splits are not transverse double points of the front)
  for (size_t n = 0; n < r.pd.nodes.size(); ++n) {
    const PDNode& nd = r.pd.nodes[n];
    if (nd.legs.size() != 4 || nd.east != 2) continue;
    const auto& ps = t.passes[(int)(r.pd.crossings.size() + n)];
    if (ps.size() == 2) {
      PDCrossing virt{{nd.legs[0], nd.legs[1], nd.legs[2], nd.legs[3]}, false};
      w += crossing_sign(virt, ps[0].enter, ps[1].enter);
    }
  }
  return w;
}

MultiLaurent kauffman_normalized(const FrontDiagram& d) {
  NgResolution r = ng_resolution(d);
  return MultiLaurent::a(-total_tb(d)) * kauffman_unnormalized(r.pd);
}

KvReport check_ruling_coefficient(const FrontDiagram& d) {
  KvReport rep;
  rep.lhs = ruling_polynomial(d, 1);
  MultiLaurent f = kauffman_normalized(d) * MultiLaurent::z_half(-2);
  rep.rhs = ml_coefficient_of_a(ml_substitute_AB(f), -total_tb(d) - 1);
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

}  // namespace rulinglab
