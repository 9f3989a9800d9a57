// Normal-ruling enumeration by a left-to-right sweep, ruling polynomials,
// transfer matrices, gluing, pairs (L, n), and the doubling construction.

#pragma once

#include <vector>

#include "rulinglab/poly.hpp"
#include "rulinglab/resolve.hpp"

namespace rulinglab {

struct RulingCensus {
  int eyes = 0, lhe = 0, rhe = 0, par = 0;
  bool operator==(const RulingCensus&) const = default;
};

struct NormalRuling {
  std::vector<int> switches;  // event indices of switched crossings
  int exponent_half = 0;      // 2 * n(S)
  RulingCensus census;
};

// vertex-free marked diagram; gradings indexed by event (X entries used);
// rho = 0 tests gradings over Z, rho >= 1 mod rho
std::vector<NormalRuling> enumerate_rulings(const FrontDiagram& d,
                                            const std::vector<int>& gradings, int rho,
                                            const Matching& phi, const Matching& psi);

// graph-aware: sums z^{n(S)} over full resolutions; enforces border
// rho-gradedness of phi/psi when rho != 1
HalfLaurent ruling_polynomial(const FrontDiagram& d, const std::vector<int>& arc_pot,
                              int rho, const Matching& phi, const Matching& psi);
HalfLaurent ruling_polynomial(const FrontDiagram& d, int rho,
                              const Matching& phi = {}, const Matching& psi = {});

struct TransferMatrix {
  std::vector<Matching> rows, cols;
  std::vector<std::vector<HalfLaurent>> entry;
  bool operator==(const TransferMatrix&) const = default;
};

TransferMatrix transfer_matrix(const FrontDiagram& d, int rho);
TransferMatrix tm_product(const TransferMatrix& a, const TransferMatrix& b);

// transfer_matrix(d1 . d2) == transfer_matrix(d1) * transfer_matrix(d2)
bool glue_check(const FrontDiagram& d1, const FrontDiagram& d2, int rho);

// sum of diagonal entries R(phi, phi) over block-respecting matchings
HalfLaurent pair_ruling_polynomial(const FrontDiagram& d, int rho,
                                   const std::vector<int>& blocks);

// block-respecting matchings: product of perfect matchings per block
std::vector<Matching> block_matchings(const std::vector<int>& blocks);

struct DoubleResult {
  FrontDiagram l1;    // copy 1, type (n, 0): vertices pulled left
  FrontDiagram l2;    // copy 2, type (0, n): vertices pulled right
  FrontDiagram pair;  // l1 . l2, type (n, n)
  std::vector<int> blocks;  // vertex valences in vertex-id order
};

DoubleResult double_diagram(const FrontDiagram& d);

}  // namespace rulinglab
