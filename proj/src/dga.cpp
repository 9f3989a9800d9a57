#include "rulinglab/dga.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "rulinglab/ruling.hpp"

namespace rulinglab {

namespace {

// turning bookkeeping in 45-degree units; a closed disk boundary with the
// disk on its left accumulates +8 (one full counterclockwise turn)
int exit_bend(int slot) { return (slot == 1 || slot == 3) ? 1 : -1; }
int enter_bend(int slot) { return -exit_bend(slot); }

// quadrant q lies between slots q and q+1; Reeb-positive quadrants are the
// pair swept rotating the overstrand counterclockwise onto the understrand
bool reeb_positive(const PDCrossing& c, int quadrant) {
  bool east_west = (quadrant % 2 == 0);
  return east_west != c.over02;
}

// Enumerates admissible disks as embedded subcomplexes: a disk is a set of
// bounded faces whose union is connected, simply connected, and shows a
// legal quadrant pattern at every crossing (one quadrant = convex corner,
// two adjacent = boundary passes straight through, all four = interior
// point; opposite pairs and triples pinch or dent the region and are
// rejected).  For fronts in plat position every admissible disk of the
// resolved diagram is embedded, so this enumeration is complete there.
struct DiskSearch {
  const PDDiagram& pd;
  const std::map<int, EdgeTurn>& turns;
  std::map<int, std::vector<std::pair<int, int>>> ends;  // edge -> (site, slot)

  // planar faces, traced face-on-left: arriving at slot s continues at s+1
  std::map<std::pair<int, int>, int> face_of;  // (tail site, out slot) -> face
  int num_faces = 0;
  std::vector<char> outer;  // face boundary turns -8: outer face

  // per generator: boundary words of disks whose positive corner sits there
  std::vector<std::map<Word, long long>> found;

  explicit DiskSearch(const NgResolution& r) : pd(r.pd), turns(r.turns) {
    for (int s = 0; s < (int)pd.crossings.size(); ++s)
      for (int k = 0; k < 4; ++k) ends[pd.crossings[s].legs[k]].push_back({s, k});
    trace_faces();
    enumerate();
  }

  std::pair<int, int> other_end(int e, int site, int slot) const {
    const auto& ee = ends.at(e);
    return (ee[0] == std::make_pair(site, slot)) ? ee[1] : ee[0];
  }

  int edge_turn(int e, int site, int out_slot) const {
    auto it = turns.find(e);
    if (it == turns.end()) return 0;
    return (it->second.site == site && it->second.slot == out_slot)
               ? it->second.interior
               : -it->second.interior;
  }

  void trace_faces() {
    for (int s0 = 0; s0 < (int)pd.crossings.size(); ++s0) {
      for (int k0 = 0; k0 < 4; ++k0) {
        if (face_of.count({s0, k0})) continue;
        int fid = num_faces++;
        int t = 0, s = s0, k = k0;
        do {
          face_of[{s, k}] = fid;
          int e = pd.crossings[s].legs[k];
          auto [s2, in2] = other_end(e, s, k);
          t += exit_bend(k) + enter_bend(in2) + edge_turn(e, s, k) + 2;
          s = s2;
          k = (in2 + 1) % 4;
        } while (!(s == s0 && k == k0));
        outer.push_back(t < 0);
      }
    }
  }

  // face occupying quadrant q of crossing c: the face left of the boundary
  // leaving through slot q+1
  int quad_face(int c, int q) const { return face_of.at({c, (q + 1) % 4}); }

  void enumerate() {
    int n = (int)pd.crossings.size();
    found.assign(n, {});
    std::vector<int> bounded;
    for (int f = 0; f < num_faces; ++f)
      if (!outer[f]) bounded.push_back(f);
    int nb = (int)bounded.size();
    if (nb > 24) throw std::runtime_error("disk search: too many faces");
    std::vector<int> slot_of(num_faces, -1);
    for (int i = 0; i < nb; ++i) slot_of[bounded[i]] = i;

    // face adjacency (shared edges) and edge/vertex incidence, for the
    // connectivity and Euler characteristic checks
    struct EdgeRec {
      int f1, f2;  // faces on the two sides
    };
    std::vector<EdgeRec> edges;
    {
      std::map<int, char> seen;
      for (int s = 0; s < n; ++s)
        for (int k = 0; k < 4; ++k) {
          int e = pd.crossings[s].legs[k];
          if (seen[e]++) continue;
          auto [s2, in2] = other_end(e, s, k);
          edges.push_back({face_of.at({s, k}), face_of.at({s2, in2})});
        }
    }

    for (unsigned long long m = 1; m < (1ull << nb); ++m) {
      auto in_set = [&](int face) {
        int sl = slot_of[face];
        return sl >= 0 && ((m >> sl) & 1ull);
      };
      // quadrant patterns: find corners, reject pinches and concavities
      int pos_site = -1, pos_quad = -1, npos = 0;
      bool bad = false;
      int nverts = 0;
      for (int c = 0; c < n && !bad; ++c) {
        int mask = 0;
        for (int q = 0; q < 4; ++q)
          if (in_set(quad_face(c, q))) mask |= 1 << q;
        if (mask == 0) continue;
        nverts++;
        int bits = __builtin_popcount((unsigned)mask);
        if (bits == 1) {
          int q = __builtin_ctz((unsigned)mask);
          if (reeb_positive(pd.crossings[c], q)) {
            npos++;
            pos_site = c;
            pos_quad = q;
            if (npos > 1) bad = true;
          }
        } else if (bits == 2) {
          if (mask == 0b0101 || mask == 0b1010) bad = true;  // opposite pair
        } else if (bits == 3) {
          bad = true;  // concave corner
        }
      }
      if (bad || npos != 1) continue;
      // Euler characteristic: disks have V - E + F = 1
      int nedges = 0;
      for (const EdgeRec& e : edges)
        if (in_set(e.f1) || in_set(e.f2)) nedges++;
      int nfaces = __builtin_popcountll(m);
      if (nverts - nedges + nfaces != 1) continue;
      // connectivity across shared edges
      {
        std::vector<char> vis(nb, 0);
        std::vector<int> stack = {(int)__builtin_ctzll(m)};
        vis[stack[0]] = 1;
        int count = 1;
        while (!stack.empty()) {
          int f = bounded[stack.back()];
          stack.pop_back();
          for (const EdgeRec& e : edges) {
            int g = -1;
            if (e.f1 == f && in_set(e.f2)) g = slot_of[e.f2];
            if (e.f2 == f && in_set(e.f1)) g = slot_of[e.f1];
            if (g >= 0 && !vis[g]) {
              vis[g] = 1;
              count++;
              stack.push_back(g);
            }
          }
        }
        if (count != nfaces) continue;
      }
      found[pos_site][boundary_word(pos_site, pos_quad,
                                    [&](int f) { return (bool)in_set(f); })]++;
    }
  }

  // trace the boundary counterclockwise (disk on the left) from the
  // positive corner and collect the negative corners
  template <class InSet>
  Word boundary_word(int site, int quadrant, InSet&& in_set) const {
    Word w;
    int s = site, out = (quadrant + 1) % 4;
    for (int guard = 0; guard < 16 * (int)pd.crossings.size(); ++guard) {
      int e = pd.crossings[s].legs[out];
      auto [s2, in2] = other_end(e, s, out);
      if (s2 == site && in2 == quadrant) return w;  // back at the corner
      // disk left of the inbound leg occupies quadrant in2; straight pass
      // needs quadrant in2+1 as well, otherwise this is a negative corner
      if (in_set(quad_face(s2, (in2 + 1) % 4))) {
        s = s2;
        out = (in2 + 2) % 4;
      } else {
        w.push_back(s2);
        s = s2;
        out = (in2 + 1) % 4;
      }
    }
    throw std::logic_error("disk search: unterminated boundary");
  }
};

bool grading_is_zero(int g, int rho) {
  if (rho == 0) return g == 0;
  return ((g % rho) + rho) % rho == 0;
}

}  // namespace

DgaPresentation ce_dga(const FrontDiagram& d, int rho) {
  auto errs = d.validate();
  if (!errs.empty()) throw std::invalid_argument("ce_dga: " + errs.front());
  if (d.left != 0 || d.right != 0)
    throw std::invalid_argument("ce_dga: diagram must be closed");
  if (!d.vertices.empty())
    throw std::invalid_argument("ce_dga: vertex-free fronts only");
  DgaPresentation p;
  p.rho = rho;
  p.res = ng_resolution(d);
  PotentialRing ring{rho};
  MaslovResult mr = solve_maslov(d, ring);
  if (!mr.feasible)
    throw std::invalid_argument(
        "ce_dga: Maslov potential infeasible over this ring; pick a rho "
        "dividing twice the rotation number");
  ArcMap arcs = build_arcs(d);
  std::vector<int> by_event = crossing_gradings(d, arcs, mr.mu);
  int n = (int)p.res.pd.crossings.size();
  for (int i = 0; i < n; ++i) {
    int ev = p.res.crossing_source[i];
    bool kink = d.events[ev].kind == EventKind::RC;
    p.gradings.push_back(kink ? ring.reduce(1) : by_event[ev]);
  }
  DiskSearch search(p.res);
  p.diff.resize(n);
  for (int g = 0; g < n; ++g)
    for (const auto& [w, c] : search.found[g])
      if (c % 2 != 0) p.diff[g].push_back(w);
  return p;
}

bool d_squared_zero(const DgaPresentation& p) {
  for (size_t g = 0; g < p.diff.size(); ++g) {
    std::map<Word, long long> cnt;
    for (const Word& w : p.diff[g]) {
      for (size_t i = 0; i < w.size(); ++i) {
        for (const Word& u : p.diff[w[i]]) {
          Word out(w.begin(), w.begin() + i);
          out.insert(out.end(), u.begin(), u.end());
          out.insert(out.end(), w.begin() + i + 1, w.end());
          cnt[out]++;
        }
      }
    }
    for (const auto& [w, c] : cnt)
      if (c % 2 != 0) return false;
  }
  return true;
}

bool grading_drop_one(const DgaPresentation& p) {
  for (size_t g = 0; g < p.diff.size(); ++g) {
    for (const Word& w : p.diff[g]) {
      long long s = 0;
      for (int x : w) s += p.gradings[x];
      long long want = (long long)p.gradings[g] - 1;
      if (p.rho == 0) {
        if (s != want) return false;
      } else if (((s - want) % p.rho + p.rho) % p.rho != 0) {
        return false;
      }
    }
  }
  return true;
}

std::optional<Augmentation> find_augmentation(const DgaPresentation& p, int rho,
                                              int cap_bits) {
  int n = (int)p.diff.size();
  std::vector<int> free_gens;
  for (int i = 0; i < n; ++i)
    if (grading_is_zero(p.gradings[i], rho)) free_gens.push_back(i);
  int k = (int)free_gens.size();
  if (k > cap_bits) throw std::runtime_error("find_augmentation: search cap exceeded");
  std::vector<char> eps(n, 0);
  auto admissible = [&]() {
    for (int g = 0; g < n; ++g) {
      long long s = 0;
      for (const Word& w : p.diff[g]) {
        char v = 1;
        for (int x : w) v = (char)(v & eps[x]);
        s += v;
      }
      if (s % 2 != 0) return false;
    }
    return true;
  };
  for (unsigned long long m = 0; m < (1ull << k); ++m) {
    for (int i = 0; i < k; ++i)
      eps[free_gens[i]] = (char)((m >> (k - 1 - i)) & 1u);
    if (admissible()) return Augmentation{eps};
  }
  return std::nullopt;
}

EquivReport check_equivalence(const FrontDiagram& d, int rho) {
  EquivReport r;
  r.ruling_exists = !ruling_polynomial(d, rho).is_zero();
  DgaPresentation p = ce_dga(d, rho);
  r.augmentation_exists = find_augmentation(p, rho).has_value();
  r.agree = (r.ruling_exists == r.augmentation_exists);
  return r;
}

}  // namespace rulinglab
