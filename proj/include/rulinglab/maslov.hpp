// Maslov potentials over Z or Z/m, crossing gradings, rho-graded matchings.

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rulinglab/front.hpp"

namespace rulinglab {

// mod = 0 means Z; mod = m >= 1 means Z/m (Z/1 is the trivial ring)
struct PotentialRing {
  int mod = 0;
  int reduce(long long v) const {
    if (mod == 0) return (int)v;
    long long r = v % mod;
    return (int)(r < 0 ? r + mod : r);
  }
};

struct MaslovPotential {
  PotentialRing ring;
  std::vector<int> values;  // indexed by arc id
};

struct MaslovResult {
  bool feasible = false;
  MaslovPotential mu;
  std::vector<int> violating_cycle;  // arc ids witnessing an inconsistency
};

// cusp constraints mu(upper) = mu(lower) + 1; deterministic normalization:
// lowest-id free arc of each constraint component gets 0
MaslovResult solve_maslov(const FrontDiagram& d, PotentialRing ring,
                          const std::map<int, int>& fixed = {});

// |c| = mu(upper-left in-strand) - mu(lower-left in-strand); event must be X
int crossing_grading(const FrontDiagram& d, const ArcMap& arcs,
                     const MaslovPotential& mu, int event_index);

// per-event grading vector (only X entries meaningful; others 0)
std::vector<int> crossing_gradings(const FrontDiagram& d, const ArcMap& arcs,
                                   const MaslovPotential& mu);

// fixed-point-free involution as unordered label pairs (labels 1-based)
using Matching = std::vector<std::pair<int, int>>;

// labels 1..rv are right-side (top-down), rv+1.. are left-side (top-down);
// a border is the all-same-side case (rv = 0).  mu_by_label is 0-indexed.
// same-side pair: mu(upper) - mu(lower) == 1 mod rho; through pair: == 0.
// rho = 0 means over Z (exact equality).
bool is_rho_graded_matching(const std::vector<int>& mu_by_label, int rv,
                            const Matching& phi, int rho);

}  // namespace rulinglab
