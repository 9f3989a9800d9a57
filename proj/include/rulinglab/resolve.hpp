// Perfect matchings, permutation braids, and the marked vertex resolution.

#pragma once

#include <string>
#include <vector>

#include "rulinglab/maslov.hpp"

namespace rulinglab {

std::vector<Matching> enumerate_matchings(int n2);  // all (n2-1)!! of them

std::string matching_str(const Matching& m);        // "1-6,2-4"
Matching parse_matching(const std::string& s);

struct BraidGen {
  int i;  // 1-based generator index: crossing of strands i, i+1
  bool marked = false;
  bool operator==(const BraidGen&) const = default;
};
using BraidWord = std::vector<BraidGen>;

// p[i] = final 0-based position of the strand starting at position i,
// with generators applied left to right
std::vector<int> braid_permutation(int b, const BraidWord& w);

// positive word with one crossing per inversion (bubble each strand into
// place from the right); pi is 0-based start->end positions
BraidWord permutation_braid(const std::vector<int>& pi);

BraidWord half_twist(int b);  // Delta_b, length b(b-1)/2

// right complement: beta * complement(beta) = Delta_b
BraidWord complement_braid(int b, const BraidWord& w);
BraidWord mirror(const BraidWord& w);  // reversed generator list
BraidWord tau(int b, const BraidWord& w);  // Delta conjugation: sigma_i -> sigma_{b-i}

// one fully resolved (or partially resolved) marked diagram
struct Resolution {
  FrontDiagram diagram;
  std::vector<int> arc_pot;      // induced potential per arc of `diagram`
  std::vector<Matching> phis;    // chosen matching per vertex id of the input
};

// replace vertex vid of d by the marked resolution at phi; arc_pot indexes
// build_arcs(d); potentials live in Z/rho (rho = 0 -> Z, requires exact fit)
Resolution resolve_vertex(const FrontDiagram& d, const std::vector<int>& arc_pot,
                          int rho, int vid, const Matching& phi);

// product over per-vertex rho-graded matching sets, deterministic order
std::vector<Resolution> full_resolutions(const FrontDiagram& d,
                                         const std::vector<int>& arc_pot, int rho);

// convenience: solve the potential over Z/rho first
std::vector<Resolution> full_resolutions(const FrontDiagram& d, int rho);

}  // namespace rulinglab
