#pragma once

// Model domains, boundary measures and quadrature grids.

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "szego/errors.hpp"

namespace szego {

using cd = std::complex<double>;

/// A point in C or C^2. Fixed maximum size, so no heap allocation.
using Point = Eigen::Matrix<cd, Eigen::Dynamic, 1, Eigen::ColMajor, 2, 1>;

inline Point point(cd z) {
  Point p(1);
  p(0) = z;
  return p;
}
inline Point point(cd z1, cd z2) {
  Point p(2);
  p << z1, z2;
  return p;
}

/// Evaluations closer than this to a puncture are rejected.
inline constexpr double kPunctureClearance = 1e-6;

/// A biholomorphism of the unit disk onto a planar domain, with a fixed
/// continuous branch of sqrt(F').
class ConformalMap {
 public:
  using Fn = std::function<cd(cd)>;

  /// `inverse` may be empty; Newton iteration on `forward` is used then.
  ConformalMap(std::string name, Fn forward, Fn derivative, Fn inverse = {});

  static ConformalMap identity();
  /// z + eps z^2; univalent with non-vanishing derivative for |eps| < 1/2.
  static ConformalMap quadratic(cd eps);
  /// The disk automorphism z -> (z + a)/(1 + conj(a) z).
  static ConformalMap disk_automorphism(cd a);

  const std::string& name() const { return name_; }
  cd operator()(cd zeta) const { return forward_(zeta); }
  cd derivative(cd zeta) const { return derivative_(zeta); }
  /// sqrt(F'(zeta)), continued along the segment [0, zeta] from the
  /// principal root at 0.
  cd sqrt_derivative(cd zeta) const;
  /// Preimage of a point of the image domain (closure).
  cd inverse(cd z) const;

  /// Checks F' != 0 and zero winding of F' on an n-node boundary grid, and
  /// sqrt_derivative^2 == F'. Throws configuration_error on failure.
  void validate(int n = 1024) const;

 private:
  std::string name_;
  Fn forward_;
  Fn derivative_;
  Fn inverse_;
};

enum class NuWeight { one, gradient_squared };

struct SigmaCircle {};
struct SigmaTorus {};
struct EggSigma {};
struct EggOmegaP {};
struct EggNuTau {
  double tau = 1.0;
  NuWeight weight = NuWeight::one;
};
using MeasureTag = std::variant<SigmaCircle, SigmaTorus, EggSigma, EggOmegaP, EggNuTau>;

std::string measure_name(const MeasureTag& m);

struct Disk {};
struct PuncturedDisk {
  std::vector<cd> punctures{cd(0)};
  std::vector<int> orders{0};
};
struct ProductDxDstar {
  int k = 0;
};
struct Hartogs {
  int m = 1;
  int n = 1;
  int k = 0;
};
struct Egg {
  int p = 1;
  MeasureTag measure = EggOmegaP{};
};
/// A simply connected domain F(D) with punctures and pole orders. Punctures
/// are stored in the coordinates of the image domain.
struct SimplyConnectedPunctured {
  ConformalMap map = ConformalMap::identity();
  std::vector<cd> punctures;
  std::vector<int> orders;
};

using DomainSpec = std::variant<Disk, PuncturedDisk, ProductDxDstar, Hartogs, Egg, SimplyConnectedPunctured>;

/// Validates the invariants of a domain description (gcd(m,n)=1, distinct
/// interior punctures, non-negative orders, tau in [0,1]).
void validate(const DomainSpec& spec);

/// Punctured disk with a single puncture at the origin of order k.
inline DomainSpec punctured_disk(int k) { return PuncturedDisk{{cd(0)}, {k}}; }

std::string domain_name(const DomainSpec& spec);

/// Real dimension of the point tuples: 1 for planar domains, 2 otherwise.
int complex_dimension(const DomainSpec& spec);

/// Quadrature nodes on the (distinguished) boundary with the boundary
/// measure folded into the weights.
struct BoundaryGrid {
  Eigen::MatrixXd nodes;   // one parameter tuple per row: theta | (theta1, theta2) | (s, theta1, theta2)
  Eigen::VectorXd weights; // > 0
  Eigen::MatrixXcd points; // one embedded point per row
  MeasureTag measure;
  int angular_nodes = 0;

  Eigen::Index size() const { return weights.size(); }
  Point point_at(Eigen::Index i) const {
    Point p(points.cols());
    for (Eigen::Index c = 0; c < points.cols(); ++c) p(c) = points(i, c);
    return p;
  }
};

/// N nodes per angular circle; M nodes in s for eggs.
BoundaryGrid boundary_grid(const DomainSpec& spec, int n, int m = 0);

/// Density of the pulled-back egg measure with respect to ds dtheta1 dtheta2.
double egg_density(int p, const MeasureTag& measure, double s);
/// Same, with 1 - s supplied separately for accuracy near s = 1.
double egg_density(int p, const MeasureTag& measure, double s, double one_minus_s);

/// |L| for rho_p at parameter s (the Levi-type factor in nu_tau).
double egg_levi_factor(int p, double s, double one_minus_s);
/// |grad rho_p|^2 at parameter s.
double egg_gradient_squared(int p, double s, double one_minus_s);

/// Exponent e with density ~ s^e at s -> 0 (and (1-s)^e at s -> 1).
double egg_density_endpoint_exponent(int p, const MeasureTag& measure);

/// p(1 - tau) + tau, snapped to the nearest integer when within 1e-9.
double egg_critical_order(int p, double tau);

/// ceil(p(1 - tau) + tau) - 1: the order at which the nu_tau filtration stabilizes.
int stabilization_threshold(int p, double tau);

/// Effective tau for an egg measure (sigma = 1, omega_p = 0).
double egg_measure_tau(const MeasureTag& measure);

/// Points of the unit disk on a golden-angle spiral of radius r_max; stable
/// across runs.
std::vector<cd> spiral_points(int count, double r_max);

}  // namespace szego
