#pragma once

// Pointwise comparison of the Cauchy k-kernel with the Szego kernel of a
// punctured simply connected domain.

#include <string>
#include <vector>

#include "szego/domains.hpp"

namespace szego {

struct DefectReport {
  std::string domain;
  std::vector<cd> punctures;
  std::vector<int> orders;
  int boundary_nodes = 0;
  int interior_samples = 0;
  /// max over sampled (z, w) of |C_k(z,w) - s_k(z,w)|.
  double sup_defect = 0.0;
  /// max over distinct boundary pairs of |C_k(z,w) - conj(C_k(w,z))|.
  double antisymmetry_defect = 0.0;
};

/// Default interior sample: 32 spiral points of the unit disk (radius 0.9),
/// mapped into the image domain.
std::vector<cd> default_interior_samples(const ConformalMap& map, int count = 32, double r_max = 0.9);

/// Evaluates both kernels with z in sample_z and w on an N-node boundary grid.
DefectReport ks_defect(const std::vector<cd>& punctures, const std::vector<int>& orders, const ConformalMap& map, int n,
                       const std::vector<cd>& sample_z);

struct RigidityRow {
  cd q;
  double sup_defect = 0.0;
  double antisymmetry_defect = 0.0;
};

/// Unit disk with one puncture at each q in turn and order k.
std::vector<RigidityRow> rigidity_scan(const std::vector<cd>& q_values, int k, int n, int samples = 32);

}  // namespace szego
