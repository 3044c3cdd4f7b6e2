#pragma once

// Szego projections as Fourier multipliers, kernel quadrature, and the
// distance of a coefficient window from a Hardy subspace.

#include <variant>

#include "szego/domains.hpp"
#include "szego/kernels.hpp"
#include "szego/series.hpp"

namespace szego {

namespace multiplier_family {
struct PuncturedDisk {
  int k = 0;
};
struct DxDstar {
  int k = 0;
};
struct Hartogs {
  int m = 1;
  int n = 1;
  int k = 0;
};
}  // namespace multiplier_family

using MultiplierFamily = std::variant<multiplier_family::PuncturedDisk, multiplier_family::DxDstar, multiplier_family::Hartogs>;

/// How the frequency-support condition is read.
enum class MultiplierReading {
  /// Admit (j,l) iff j >= 0 and the second condition holds. Idempotent 0/1.
  indicator,
  /// The characterization as printed: drop (j,l) only if max{...} < 0.
  literal_max,
  /// The sign formula c(j,l) with sgn(0) = 0; takes the value 1/2 on the
  /// boundary frequencies j = -1 or nj + ml + mk = -1.
  sign_formula,
};

struct MultiplierSpec {
  MultiplierFamily family;
  MultiplierReading reading = MultiplierReading::indicator;
};

/// Multiplier value at (j, l); l is ignored for the punctured-disk family.
double multiplier(const MultiplierSpec& spec, int j, int l = 0);
inline double multiplier(const MultiplierFamily& family, int j, int l = 0) {
  return multiplier(MultiplierSpec{family}, j, l);
}

CircleCoefficientsd project(const CircleCoefficientsd& coeffs, const MultiplierSpec& spec);
TorusCoefficientsd project(const TorusCoefficientsd& coeffs, const MultiplierSpec& spec);

/// L2 norm of (I - project)(coeffs) under the natural boundary measure
/// (arc length on the circle, the product measure on the torus).
double membership_defect(const CircleCoefficientsd& coeffs, const MultiplierSpec& spec);
double membership_defect(const TorusCoefficientsd& coeffs, const MultiplierSpec& spec);

/// sum_t weight_t F(w_t) kernel(z, w_t) on boundary_grid(spec, N) where
/// N = boundary_values.nodes(). Pairwise summation keeps the reduction order fixed.
cd reproduce(const DomainSpec& spec, const GridSamplesd& boundary_values, const Point& z);

/// Same, over an explicit grid and kernel.
cd reproduce(const BoundaryGrid& grid, const Eigen::VectorXcd& values, const KernelEvaluator& kernel, const Point& z);

/// Coefficients of f o Theta_{m/n}, Theta(z1,z2) = (z1^n z2^n, z2^m): the
/// mode (j,l) moves to (nj, nj + ml).
TorusCoefficientsd pullback_theta(const TorusCoefficientsd& coeffs, int m, int n);

/// Deterministic pairwise sum.
cd pairwise_sum(const Eigen::VectorXcd& terms);

}  // namespace szego
