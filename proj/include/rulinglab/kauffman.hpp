// Kauffman polynomial on PD diagrams, Kauffman-Vogel node expansion,
// total writhe / Thurston-Bennequin numbers, and the ruling-coefficient check.

#pragma once

#include "rulinglab/front.hpp"
#include "rulinglab/pd.hpp"
#include "rulinglab/poly.hpp"

namespace rulinglab {

// disjoint-circle factor, derived from the skein axioms (a unit test
// re-derives it by evaluating a two-crossing unlink diagram)
MultiLaurent kauffman_delta();

// regular-isotopy invariant [.]; nodes (4-valent only) are expanded first
// via [node] = [pass-child] - B[X-child] - A[cusp-child], z = A - B, where
// each right cusp closed by a smoothing contributes a kink factor a^{-1}
MultiLaurent kauffman_unnormalized(const PDDiagram& pd);

// sum over components of signed self-crossings of the traced Ng resolution,
// with 4-valent nodes counted as virtual transverse crossings
int total_tb(const FrontDiagram& d);

// F = a^{-w(L)} [L]
MultiLaurent kauffman_normalized(const FrontDiagram& d);

struct KvReport {
  HalfLaurent lhs;  // ruling polynomial at rho = 1
  HalfLaurent rhs;  // coefficient of a^{-tb-1} in z^{-1} F after A,B substitution
  bool equal = false;
};

KvReport check_ruling_coefficient(const FrontDiagram& d);

}  // namespace rulinglab
