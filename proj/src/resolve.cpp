#include "rulinglab/resolve.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rulinglab {

namespace {

void enumerate_rec(std::vector<int>& free_labels, Matching& cur,
                   std::vector<Matching>& out) {
  if (free_labels.empty()) {
    out.push_back(cur);
    return;
  }
  int a = free_labels.front();
  for (size_t k = 1; k < free_labels.size(); ++k) {
    int b = free_labels[k];
    std::vector<int> rest;
    for (size_t t = 1; t < free_labels.size(); ++t)
      if (t != k) rest.push_back(free_labels[t]);
    cur.push_back({a, b});
    enumerate_rec(rest, cur, out);
    cur.pop_back();
  }
}

int reduce_mod(long long v, int rho) {
  if (rho == 0) return (int)v;
  long long r = v % rho;
  return (int)(r < 0 ? r + rho : r);
}

}  // namespace

std::vector<Matching> enumerate_matchings(int n2) {
  if (n2 < 0 || n2 % 2 != 0)
    throw std::invalid_argument("enumerate_matchings: label count must be even");
  std::vector<int> labels;
  for (int i = 1; i <= n2; ++i) labels.push_back(i);
  std::vector<Matching> out;
  Matching cur;
  enumerate_rec(labels, cur, out);
  return out;
}

std::string matching_str(const Matching& m) {
  Matching s = m;
  for (auto& [a, b] : s)
    if (a > b) std::swap(a, b);
  std::sort(s.begin(), s.end());
  std::ostringstream os;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) os << ",";
    os << s[i].first << "-" << s[i].second;
  }
  return os.str();
}

Matching parse_matching(const std::string& s) {
  Matching m;
  std::istringstream is(s);
  std::string part;
  while (std::getline(is, part, ',')) {
    auto dash = part.find('-');
    if (dash == std::string::npos)
      throw std::invalid_argument("matching: expected 'a-b' in '" + part + "'");
    int a = std::stoi(part.substr(0, dash));
    int b = std::stoi(part.substr(dash + 1));
    if (a == b) throw std::invalid_argument("matching: fixed point");
    m.push_back({a, b});
  }
  // involution check: each label once
  std::vector<int> seen;
  for (auto [a, b] : m) {
    seen.push_back(a);
    seen.push_back(b);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw std::invalid_argument("matching: repeated label");
  return m;
}

std::vector<int> braid_permutation(int b, const BraidWord& w) {
  std::vector<int> at(b);  // at[pos] = strand
  for (int i = 0; i < b; ++i) at[i] = i;
  for (const BraidGen& g : w) {
    if (g.i < 1 || g.i >= b) throw std::invalid_argument("braid generator out of range");
    std::swap(at[g.i - 1], at[g.i]);
  }
  std::vector<int> p(b);
  for (int pos = 0; pos < b; ++pos) p[at[pos]] = pos;
  return p;
}

BraidWord permutation_braid(const std::vector<int>& pi) {
  int b = (int)pi.size();
  std::vector<int> target(b);  // target arrangement: strand at each position
  for (int s = 0; s < b; ++s) target[pi[s]] = s;
  std::vector<int> cur(b);
  for (int i = 0; i < b; ++i) cur[i] = i;
  BraidWord w;
  for (int t = b - 1; t >= 0; --t) {
    int j = (int)(std::find(cur.begin(), cur.end(), target[t]) - cur.begin());
    for (int s = j; s < t; ++s) {
      w.push_back({s + 1, false});
      std::swap(cur[s], cur[s + 1]);
    }
  }
  return w;
}

BraidWord half_twist(int b) {
  BraidWord w;
  for (int m = 2; m <= b; ++m)
    for (int i = m - 1; i >= 1; --i) w.push_back({i, false});
  return w;
}

BraidWord complement_braid(int b, const BraidWord& w) {
  std::vector<int> p = braid_permutation(b, w);
  std::vector<int> pinv(b);
  for (int i = 0; i < b; ++i) pinv[p[i]] = i;
  std::vector<int> c(b);
  for (int i = 0; i < b; ++i) c[i] = b - 1 - pinv[i];
  return permutation_braid(c);
}

BraidWord mirror(const BraidWord& w) {
  return BraidWord(w.rbegin(), w.rend());
}

BraidWord tau(int b, const BraidWord& w) {
  BraidWord out = w;
  for (BraidGen& g : out) g.i = b - g.i;
  return out;
}

Resolution resolve_vertex(const FrontDiagram& d, const std::vector<int>& arc_pot,
                          int rho, int vid, const Matching& phi) {
  int ei = -1;
  for (size_t i = 0; i < d.events.size(); ++i)
    if (d.events[i].kind == EventKind::V && d.events[i].vid == vid) ei = (int)i;
  if (ei < 0) throw std::invalid_argument("resolve_vertex: no such vertex");
  const VertexInfo& v = d.vertices[vid];
  int lv = v.lv, rv = v.rv, val = lv + rv;
  {
    std::vector<int> seen;
    for (auto [a, b] : phi) {
      seen.push_back(a);
      seen.push_back(b);
    }
    std::sort(seen.begin(), seen.end());
    std::vector<int> want;
    for (int i = 1; i <= val; ++i) want.push_back(i);
    if (seen != want) throw std::invalid_argument("resolve_vertex: matching not perfect");
  }
  ArcMap arcs = build_arcs(d);
  const std::vector<int>& label_arcs = arcs.event_arcs[ei].arcs;  // 1..val

  std::vector<std::pair<int, int>> Lp, Rp, Bp;  // (upper, lower) label pairs
  for (auto [a, b] : phi) {
    auto pr = std::minmax(a, b);
    if (pr.first > rv)
      Lp.push_back(pr);
    else if (pr.second <= rv)
      Rp.push_back(pr);
    else
      Bp.push_back(pr);
  }
  std::sort(Lp.begin(), Lp.end());
  std::sort(Rp.begin(), Rp.end());

  int p = d.events[ei].pos;  // local 0-based slot s <-> absolute position p + s
  std::vector<Event> word;
  std::vector<int> gadget_lc_upper_pot;  // per emitted LC, value of its upper arc
  std::vector<int> lab;                  // current labels in the window, top-down
  for (int i = 1; i <= lv; ++i) lab.push_back(rv + i);

  auto idx_of = [&](int label) {
    return (int)(std::find(lab.begin(), lab.end(), label) - lab.begin());
  };

  // right-cusp gadgets: walk the lower strand up with marked crossings
  for (auto [u, w] : Lp) {
    int ju = idx_of(u), jw = idx_of(w);
    for (int s = jw - 1; s >= ju + 1; --s) {
      word.push_back(Event::x(p + s, true));
      std::swap(lab[s], lab[s + 1]);
    }
    word.push_back(Event::rc(p + ju));
    lab.erase(lab.begin() + ju, lab.begin() + ju + 2);
  }

  // B-block: L_beta (unmarked) . L_beta^c (marked) . mirror (marked)
  std::vector<int> lefts = lab;  // ascending left B labels
  std::vector<int> rights;
  for (auto [a, b] : Bp) rights.push_back(a);
  std::sort(rights.begin(), rights.end());
  int bb = (int)lefts.size();
  std::vector<int> pi(bb);
  for (int i = 0; i < bb; ++i) {
    int partner = -1;
    for (auto [a, b] : Bp)
      if (b == lefts[i]) partner = a;
    pi[i] = (int)(std::find(rights.begin(), rights.end(), partner) - rights.begin());
  }
  BraidWord beta = permutation_braid(pi);
  BraidWord betac = complement_braid(bb, beta);
  auto emit_braid = [&](const BraidWord& bw, bool marked) {
    for (const BraidGen& g : bw) word.push_back(Event::x(p - 1 + g.i, marked));
  };
  emit_braid(beta, false);
  emit_braid(betac, true);
  emit_braid(mirror(betac), true);
  lab = rights;

  // left-cusp gadgets: insert at the sorted slot, walk the lower strand down
  for (auto [u, w] : Rp) {
    int ju = (int)(std::lower_bound(lab.begin(), lab.end(), u) - lab.begin());
    word.push_back(Event::lc(p + ju));
    gadget_lc_upper_pot.push_back(arc_pot[label_arcs[u - 1]]);
    lab.insert(lab.begin() + ju, {u, w});
    int s = ju + 1;
    while (s + 1 < (int)lab.size() && lab[s + 1] < w) {
      word.push_back(Event::x(p + s, true));
      std::swap(lab[s], lab[s + 1]);
      ++s;
    }
  }
  {
    std::vector<int> want;
    for (int i = 1; i <= rv; ++i) want.push_back(i);
    if (lab != want) throw std::logic_error("resolve_vertex: bad final arrangement");
  }

  Resolution res;
  res.diagram.left = d.left;
  res.diagram.right = d.right;
  for (int i = 0; i < ei; ++i) res.diagram.events.push_back(d.events[i]);
  for (const Event& e : word) res.diagram.events.push_back(e);
  for (size_t i = ei + 1; i < d.events.size(); ++i) res.diagram.events.push_back(d.events[i]);
  for (int i = 0; i < (int)d.vertices.size(); ++i)
    if (i != vid) res.diagram.vertices.push_back(d.vertices[i]);
  for (Event& e : res.diagram.events)
    if (e.kind == EventKind::V && e.vid > vid) e.vid--;
  auto errs = res.diagram.validate();
  if (!errs.empty())
    throw std::logic_error("resolve_vertex: invalid result: " + errs.front());

  // induced potential: arcs are born at the left border or at a left cusp
  ArcMap narcs = build_arcs(res.diagram);
  res.arc_pot.assign(narcs.num_arcs, 0);
  std::vector<char> have(narcs.num_arcs, 0);
  auto set_pot = [&](int arc, long long val) {
    res.arc_pot[arc] = reduce_mod(val, rho);
    have[arc] = 1;
  };
  for (size_t i = 0; i < narcs.left_border.size(); ++i)
    set_pot(narcs.left_border[i], arc_pot[arcs.left_border[i]]);
  size_t gadget_lc_seen = 0;
  for (size_t i = 0; i < res.diagram.events.size(); ++i) {
    if (res.diagram.events[i].kind != EventKind::LC) continue;
    long long up;
    if ((int)i < ei) {
      up = arc_pot[arcs.event_arcs[i].arcs[0]];
    } else if (i < ei + word.size()) {
      up = gadget_lc_upper_pot.at(gadget_lc_seen++);
    } else {
      up = arc_pot[arcs.event_arcs[i - word.size() + 1].arcs[0]];
    }
    set_pot(narcs.event_arcs[i].arcs[0], up);
    set_pot(narcs.event_arcs[i].arcs[1], up - 1);
  }
  // arcs born at a surviving vertex keep their original potential
  for (size_t i = 0; i < res.diagram.events.size(); ++i) {
    if (res.diagram.events[i].kind != EventKind::V) continue;
    size_t oi = (int)i < ei ? i : i - word.size() + 1;
    const auto& na = narcs.event_arcs[i].arcs;
    const auto& oa = arcs.event_arcs[oi].arcs;
    for (size_t k = 0; k < na.size(); ++k) set_pot(na[k], arc_pot[oa[k]]);
  }
  for (char h : have)
    if (!h) throw std::logic_error("resolve_vertex: unassigned arc potential");
  // right cusps must see mu(upper) = mu(lower) + 1, else phi was not rho-graded
  for (size_t i = 0; i < res.diagram.events.size(); ++i) {
    if (res.diagram.events[i].kind != EventKind::RC) continue;
    int u = narcs.event_arcs[i].arcs[0], l = narcs.event_arcs[i].arcs[1];
    if (res.arc_pot[u] != reduce_mod((long long)res.arc_pot[l] + 1, rho))
      throw std::invalid_argument("resolve_vertex: potential does not extend (phi not rho-graded?)");
  }
  res.phis.resize(d.vertices.size());
  res.phis[vid] = phi;
  return res;
}

std::vector<Resolution> full_resolutions(const FrontDiagram& d,
                                         const std::vector<int>& arc_pot, int rho) {
  std::vector<Resolution> out;
  if (d.vertices.empty()) {
    Resolution r;
    r.diagram = d;
    r.arc_pot = arc_pot;
    out.push_back(r);
    return out;
  }
  // resolve vertex 0 on the current diagram; recurse on the remainder
  int ei = -1;
  for (size_t i = 0; i < d.events.size(); ++i)
    if (d.events[i].kind == EventKind::V && d.events[i].vid == 0) ei = (int)i;
  ArcMap arcs = build_arcs(d);
  const VertexInfo& v = d.vertices[0];
  std::vector<int> mu_lab;
  for (int arc : arcs.event_arcs[ei].arcs) mu_lab.push_back(arc_pot[arc]);
  for (const Matching& phi : enumerate_matchings(v.lv + v.rv)) {
    if (!is_rho_graded_matching(mu_lab, v.rv, phi, rho)) continue;
    Resolution step = resolve_vertex(d, arc_pot, rho, 0, phi);
    for (Resolution& rest : full_resolutions(step.diagram, step.arc_pot, rho)) {
      Resolution full;
      full.diagram = std::move(rest.diagram);
      full.arc_pot = std::move(rest.arc_pot);
      full.phis.push_back(phi);
      for (const Matching& m : rest.phis) full.phis.push_back(m);
      out.push_back(std::move(full));
    }
  }
  return out;
}

std::vector<Resolution> full_resolutions(const FrontDiagram& d, int rho) {
  MaslovResult mr = solve_maslov(d, PotentialRing{rho});
  if (!mr.feasible) throw std::invalid_argument("full_resolutions: potential infeasible");
  return full_resolutions(d, mr.mu.values, rho);
}

}  // namespace rulinglab
