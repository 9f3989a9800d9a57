#include "rulinglab/ruling.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace rulinglab {

namespace {

struct SweepState {
  std::vector<int> partner;  // by 0-based position
  std::vector<int> comp;     // component id by position
  std::vector<char> birth;   // by component id: 0 = cusp, 1 = border
  RulingCensus census;
  std::vector<int> switches;
};

bool grading_ok(int g, int rho) {
  if (rho == 0) return g == 0;
  return ((g % rho) + rho) % rho == 0;
}

bool non_interlacing(int p, int a, int q, int b) {
  int l1 = std::min(p, a), h1 = std::max(p, a);
  int l2 = std::min(q, b), h2 = std::max(q, b);
  bool nested = (l1 <= l2 && h2 <= h1) || (l2 <= l1 && h1 <= h2);
  bool disjoint = h1 < l2 || h2 < l1;
  return nested || disjoint;
}

void insert_positions(SweepState& s, int at) {  // two new slots at `at`
  for (int& x : s.partner)
    if (x >= at) x += 2;
  s.partner.insert(s.partner.begin() + at, {at + 1, at});
  s.comp.insert(s.comp.begin() + at, {0, 0});
}

void erase_positions(SweepState& s, int at) {  // remove slots at, at+1
  s.partner.erase(s.partner.begin() + at, s.partner.begin() + at + 2);
  s.comp.erase(s.comp.begin() + at, s.comp.begin() + at + 2);
  for (int& x : s.partner)
    if (x > at) x -= 2;
}

void cross(SweepState& s, int p) {  // strands at p, p+1 cross (pass-through)
  int a = s.partner[p], b = s.partner[p + 1];
  s.partner[a] = p + 1;
  s.partner[b] = p;
  std::swap(s.partner[p], s.partner[p + 1]);
  std::swap(s.comp[p], s.comp[p + 1]);
}

}  // namespace

std::vector<NormalRuling> enumerate_rulings(const FrontDiagram& d,
                                            const std::vector<int>& gradings, int rho,
                                            const Matching& phi, const Matching& psi) {
  for (const Event& e : d.events)
    if (e.kind == EventKind::V)
      throw std::invalid_argument("enumerate_rulings: vertex present");
  auto to_partner = [](const Matching& m, int n) {
    std::vector<int> p(n, -1);
    for (auto [a, b] : m) {
      if (a < 1 || b < 1 || a > n || b > n || a == b)
        throw std::invalid_argument("enumerate_rulings: bad matching");
      p[a - 1] = b - 1;
      p[b - 1] = a - 1;
    }
    for (int x : p)
      if (x < 0) throw std::invalid_argument("enumerate_rulings: matching not perfect");
    return p;
  };

  SweepState init;
  init.partner = to_partner(phi, d.left);
  init.comp.resize(d.left);
  for (int i = 0; i < d.left; ++i) {
    if (init.partner[i] > i) {
      init.comp[i] = (int)init.birth.size();
      init.comp[init.partner[i]] = init.comp[i];
      init.birth.push_back(1);
    }
  }
  std::vector<int> goal = to_partner(psi, d.right);

  std::vector<NormalRuling> out;
  std::function<void(SweepState&, size_t)> go = [&](SweepState& s, size_t i) {
    if (i == d.events.size()) {
      if (s.partner != goal) return;
      RulingCensus c = s.census;
      for (size_t p = 0; p < s.partner.size(); ++p) {
        if (s.partner[p] > (int)p) {
          if (s.birth[s.comp[p]] == 0)
            c.lhe++;
          else
            c.par++;
        }
      }
      NormalRuling r;
      r.switches = s.switches;
      r.census = c;
      r.exponent_half = 2 * (int)s.switches.size() - 2 * c.eyes - c.lhe - c.rhe;
      out.push_back(r);
      return;
    }
    const Event& e = d.events[i];
    int p = e.pos - 1;
    switch (e.kind) {
      case EventKind::LC: {
        SweepState t = s;
        insert_positions(t, p);
        t.comp[p] = t.comp[p + 1] = (int)t.birth.size();
        t.birth.push_back(0);
        go(t, i + 1);
        break;
      }
      case EventKind::RC: {
        if (s.partner[p] != p + 1) return;
        SweepState t = s;
        if (t.birth[t.comp[p]] == 0)
          t.census.eyes++;
        else
          t.census.rhe++;
        erase_positions(t, p);
        go(t, i + 1);
        break;
      }
      case EventKind::X: {
        if (s.partner[p] == p + 1) return;  // paired strands may not cross
        {
          SweepState t = s;  // pass-through
          cross(t, p);
          go(t, i + 1);
        }
        if (!e.marked && grading_ok(gradings[i], rho) &&
            non_interlacing(p, s.partner[p], p + 1, s.partner[p + 1])) {
          SweepState t = s;  // switch: 0-resolved, state unchanged
          t.switches.push_back((int)i);
          go(t, i + 1);
        }
        break;
      }
      case EventKind::V:
        break;
    }
  };
  go(init, 0);
  return out;
}

HalfLaurent ruling_polynomial(const FrontDiagram& d, const std::vector<int>& arc_pot,
                              int rho, const Matching& phi, const Matching& psi) {
  ArcMap arcs = build_arcs(d);
  if (rho != 1) {
    auto border_pot = [&](const std::vector<int>& border) {
      std::vector<int> mu;
      for (int a : border) mu.push_back(arc_pot[a]);
      return mu;
    };
    if (!is_rho_graded_matching(border_pot(arcs.left_border), 0, phi, rho) ||
        !is_rho_graded_matching(border_pot(arcs.right_border), 0, psi, rho))
      return HalfLaurent::zero();
  }
  std::vector<Resolution> res = full_resolutions(d, arc_pot, rho);
  std::vector<HalfLaurent> parts(res.size());
#pragma omp parallel for schedule(dynamic)
  for (long long k = 0; k < (long long)res.size(); ++k) {
    ArcMap ra = build_arcs(res[k].diagram);
    MaslovPotential mu{PotentialRing{rho}, res[k].arc_pot};
    std::vector<int> g = crossing_gradings(res[k].diagram, ra, mu);
    HalfLaurent sum;
    for (const NormalRuling& r :
         enumerate_rulings(res[k].diagram, g, rho, phi, psi))
      sum.add_term(r.exponent_half, 1);
    parts[k] = sum;
  }
  HalfLaurent total;
  for (const HalfLaurent& h : parts) total += h;
  return total;
}

HalfLaurent ruling_polynomial(const FrontDiagram& d, int rho, const Matching& phi,
                              const Matching& psi) {
  MaslovResult mr = solve_maslov(d, PotentialRing{rho});
  if (!mr.feasible) throw std::invalid_argument("ruling_polynomial: potential infeasible");
  return ruling_polynomial(d, mr.mu.values, rho, phi, psi);
}

TransferMatrix transfer_matrix(const FrontDiagram& d, int rho) {
  MaslovResult mr = solve_maslov(d, PotentialRing{rho});
  if (!mr.feasible) throw std::invalid_argument("transfer_matrix: potential infeasible");
  TransferMatrix tm;
  tm.rows = enumerate_matchings(d.left);
  tm.cols = enumerate_matchings(d.right);
  tm.entry.assign(tm.rows.size(), std::vector<HalfLaurent>(tm.cols.size()));
  long long total = (long long)tm.rows.size() * (long long)tm.cols.size();
#pragma omp parallel for schedule(dynamic)
  for (long long k = 0; k < total; ++k) {
    size_t i = (size_t)(k / (long long)tm.cols.size());
    size_t j = (size_t)(k % (long long)tm.cols.size());
    tm.entry[i][j] = ruling_polynomial(d, mr.mu.values, rho, tm.rows[i], tm.cols[j]);
  }
  return tm;
}

TransferMatrix tm_product(const TransferMatrix& a, const TransferMatrix& b) {
  if (a.cols.size() != b.rows.size())
    throw std::invalid_argument("tm_product: shape mismatch");
  TransferMatrix c;
  c.rows = a.rows;
  c.cols = b.cols;
  c.entry.assign(c.rows.size(), std::vector<HalfLaurent>(c.cols.size()));
  for (size_t i = 0; i < c.rows.size(); ++i)
    for (size_t j = 0; j < c.cols.size(); ++j)
      for (size_t k = 0; k < a.cols.size(); ++k)
        c.entry[i][j] += a.entry[i][k] * b.entry[k][j];
  return c;
}

bool glue_check(const FrontDiagram& d1, const FrontDiagram& d2, int rho) {
  FrontDiagram whole = concatenate(d1, d2);
  TransferMatrix lhs = transfer_matrix(whole, rho);
  TransferMatrix rhs = tm_product(transfer_matrix(d1, rho), transfer_matrix(d2, rho));
  return lhs == rhs;
}

std::vector<Matching> block_matchings(const std::vector<int>& blocks) {
  std::vector<Matching> acc = {Matching{}};
  int offset = 0;
  for (int n : blocks) {
    if (n % 2 != 0) throw std::invalid_argument("block_matchings: odd block");
    std::vector<Matching> next;
    for (const Matching& head : acc)
      for (const Matching& m : enumerate_matchings(n)) {
        Matching combined = head;
        for (auto [a, b] : m) combined.push_back({a + offset, b + offset});
        next.push_back(combined);
      }
    acc = std::move(next);
    offset += n;
  }
  return acc;
}

HalfLaurent pair_ruling_polynomial(const FrontDiagram& d, int rho,
                                   const std::vector<int>& blocks) {
  int n = 0;
  for (int b : blocks) n += b;
  if (n != d.left || n != d.right)
    throw std::invalid_argument("pair_ruling_polynomial: block sum mismatch");
  MaslovResult mr = solve_maslov(d, PotentialRing{rho});
  if (!mr.feasible)
    throw std::invalid_argument("pair_ruling_polynomial: potential infeasible");
  std::vector<Matching> phis = block_matchings(blocks);
  std::vector<HalfLaurent> parts(phis.size());
#pragma omp parallel for schedule(dynamic)
  for (long long k = 0; k < (long long)phis.size(); ++k)
    parts[k] = ruling_polynomial(d, mr.mu.values, rho, phis[k], phis[k]);
  HalfLaurent total;
  for (const HalfLaurent& h : parts) total += h;
  return total;
}

// ---- doubling ---------------------------------------------------------

namespace {

struct Token {
  bool carrier = false;
  int vid = -1;
};

// left-right reflection: reverse the word, swap cusp kinds, swap vertex sides
FrontDiagram mirror_front(const FrontDiagram& d) {
  FrontDiagram m;
  m.left = d.right;
  m.right = d.left;
  for (const VertexInfo& v : d.vertices)
    m.vertices.push_back({v.rv, v.lv, v.name});
  for (auto it = d.events.rbegin(); it != d.events.rend(); ++it) {
    Event e = *it;
    if (e.kind == EventKind::LC)
      e.kind = EventKind::RC;
    else if (e.kind == EventKind::RC)
      e.kind = EventKind::LC;
    m.events.push_back(e);
  }
  return m;
}

// Pull every vertex of a closed diagram to the left border, producing a
// type (n, 0) diagram. Each vertex contributes one block of carrier
// strands that run from the border to the old vertex site: the rv
// out-carriers continue into the copy as the out-strands, while each of
// the lv in-carriers turns back at a right cusp joined to its in-strand.
// The out-carriers pass above the in-strands and each in-carrier crosses
// the deeper in-strands before its cusp.  Those crossings let the sweep
// re-pair strands, so border matchings that pair two same-side half-edges
// still contribute rulings; without them every such matching dies at the
// cusps and the construction degenerates to a stabilized front.
FrontDiagram pull_left(const FrontDiagram& d) {
  FrontDiagram o;
  int n = 0;
  for (const VertexInfo& v : d.vertices) n += v.lv + v.rv;
  o.left = n;
  std::vector<Token> tok;
  for (int v = 0; v < (int)d.vertices.size(); ++v) {
    int val = d.vertices[v].lv + d.vertices[v].rv;
    for (int l = 0; l < val; ++l) tok.push_back({true, v});
  }
  auto emit_x = [&](int slot) {  // 0-based slot, unmarked crossing
    o.events.push_back(Event::x(slot + 1));
    std::swap(tok[slot], tok[slot + 1]);
  };
  // invariant between original events: all pending carriers sit below all
  // copy strands, so original event positions need no translation
  auto restore = [&]() {
    int f = 0;
    while (f < (int)tok.size() && !tok[f].carrier) f++;
    for (int j = f + 1; j < (int)tok.size(); ++j)
      if (!tok[j].carrier) {
        for (int s = j - 1; s >= f; --s) emit_x(s);
        f++;
      }
  };
  for (const Event& e : d.events) {
    int p = e.pos - 1;
    switch (e.kind) {
      case EventKind::LC:
        o.events.push_back(e);
        tok.insert(tok.begin() + p, {Token{}, Token{}});
        break;
      case EventKind::RC:
        o.events.push_back(e);
        tok.erase(tok.begin() + p, tok.begin() + p + 2);
        break;
      case EventKind::X:
        o.events.push_back(e);
        std::swap(tok[p], tok[p + 1]);
        break;
      case EventKind::V: {
        const VertexInfo& v = d.vertices[e.vid];
        int lv = v.lv, rv = v.rv, val = lv + rv;
        int bs = -1;  // block start
        for (int t = 0; t < (int)tok.size(); ++t)
          if (tok[t].carrier && tok[t].vid == e.vid) {
            bs = t;
            break;
          }
        // raise the block as a unit until it sits just below the in-strands
        while (bs > p + lv) {
          for (int s = bs - 1; s <= bs + val - 2; ++s) emit_x(s);
          bs--;
        }
        // out-carriers slide above the in-strands
        for (int t = 0; t < rv; ++t)
          for (int s = p + lv + t - 1; s >= p + t; --s) emit_x(s);
        // each in-carrier crosses the deeper in-strands, then cusps with
        // its own in-strand
        for (int i = 0; i < lv; ++i) {
          int m = lv - i;  // in-strands remaining
          for (int s = p + rv + m - 1; s >= p + rv + 1; --s) emit_x(s);
          o.events.push_back(Event::rc(p + rv + 1));
          tok.erase(tok.begin() + p + rv, tok.begin() + p + rv + 2);
        }
        for (int t = 0; t < rv; ++t) tok[p + t] = Token{};  // outs join copy
        restore();
        break;
      }
    }
  }
  if (!tok.empty()) throw std::logic_error("double_diagram: pull leftovers");
  return o;
}

}  // namespace

DoubleResult double_diagram(const FrontDiagram& d) {
  if (d.left != 0 || d.right != 0)
    throw std::invalid_argument("double_diagram: diagram must be closed");
  DoubleResult res;
  for (const VertexInfo& v : d.vertices) res.blocks.push_back(v.lv + v.rv);
  res.l1 = pull_left(d);
  // copy 2 is copy 1 reflected across the border line, so height k on the
  // left border and height k on the right border carry the same half-edge
  // for every vertex shape and the diagonal matching sum glues correctly
  res.l2 = mirror_front(res.l1);
  res.pair = concatenate(res.l1, res.l2);
  auto errs = res.pair.validate();
  if (!errs.empty())
    throw std::logic_error("double_diagram: invalid pair: " + errs.front());
  return res;
}

}  // namespace rulinglab
