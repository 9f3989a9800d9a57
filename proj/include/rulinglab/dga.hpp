// Chekanov-Eliashberg DGA over Z/2 for closed vertex-free fronts:
// generators are the crossings of the Ng resolution (kinks grade 1),
// differentials count immersed polygons with one positive Reeb corner.

#pragma once

#include <optional>
#include <vector>

#include "rulinglab/front.hpp"
#include "rulinglab/maslov.hpp"

namespace rulinglab {

// generator indices (= PD crossing ids), read ccw from the positive corner
using Word = std::vector<int>;

struct DgaPresentation {
  NgResolution res;
  int rho = 0;                          // 0 grades over Z, else Z/rho
  std::vector<int> gradings;            // per generator
  std::vector<std::vector<Word>> diff;  // per generator, odd-count words (Z/2)
};

// throws if the diagram has vertices, is bordered, or (rho = 0) the Maslov
// potential is infeasible over Z
DgaPresentation ce_dga(const FrontDiagram& d, int rho = 0);

bool d_squared_zero(const DgaPresentation& p);
// |g| - 1 == sum of word gradings for every word of every differential
bool grading_drop_one(const DgaPresentation& p);

struct Augmentation {
  std::vector<char> eps;  // 0/1 per generator
};

// first assignment in lexicographic order (earliest generator most
// significant); generators graded != 0 mod rho are forced to 0
std::optional<Augmentation> find_augmentation(const DgaPresentation& p, int rho,
                                              int cap_bits = 24);

struct EquivReport {
  bool ruling_exists = false;
  bool augmentation_exists = false;
  bool agree = false;
};

// rho-graded normal ruling existence vs Z/2 augmentation existence
EquivReport check_equivalence(const FrontDiagram& d, int rho);

}  // namespace rulinglab
