#include "szego/projections.hpp"

#include <algorithm>

namespace szego {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

int sgn(int x) { return (x > 0) - (x < 0); }

double apply_reading(MultiplierReading reading, int first, int second) {
  switch (reading) {
    case MultiplierReading::indicator:
      return (first >= 0 && second >= 0) ? 1.0 : 0.0;
    case MultiplierReading::literal_max:
      return std::max(first, second) < 0 ? 0.0 : 1.0;
    case MultiplierReading::sign_formula:
      return 0.25*(1 + sgn(first + 1))*(1 + sgn(second + 1));
  }
  return 0.0;
}

cd pairwise(const cd* begin, Eigen::Index n) {
  if (n <= 8) {
    cd s(0);
    for (Eigen::Index i = 0; i < n; ++i) s += begin[i];
    return s;
  }
  const Eigen::Index half = n / 2;
  return pairwise(begin, half) + pairwise(begin + half, n - half);
}

}  // namespace

double multiplier(const MultiplierSpec& spec, int j, int l) {
  return std::visit(overloaded{[&](const multiplier_family::PuncturedDisk& f) {
                                 // circle: only the shifted index matters; the first condition is vacuous
                                 const int shifted = j + f.k;
                                 switch (spec.reading) {
                                   case MultiplierReading::sign_formula:
                                     return 0.5*(1 + sgn(shifted + 1));
                                   default:
                                     return shifted >= 0 ? 1.0 : 0.0;
                                 }
                               },
                               [&](const multiplier_family::DxDstar& f) { return apply_reading(spec.reading, j, l + f.k); },
                               [&](const multiplier_family::Hartogs& f) {
                                 return apply_reading(spec.reading, j, f.n*j + f.m*l + f.m*f.k);
                               }},
                    spec.family);
}

CircleCoefficientsd project(const CircleCoefficientsd& coeffs, const MultiplierSpec& spec) {
  CircleCoefficientsd::Vector out = coeffs.coeffs();
  for (int j = coeffs.min_index(); j <= coeffs.max_index(); ++j) out(j - coeffs.min_index()) *= multiplier(spec, j);
  return CircleCoefficientsd(coeffs.min_index(), std::move(out));
}

TorusCoefficientsd project(const TorusCoefficientsd& coeffs, const MultiplierSpec& spec) {
  TorusCoefficientsd out = coeffs;
  for (int j = coeffs.j_min(); j <= coeffs.j_max(); ++j)
    for (int l = coeffs.l_min(); l <= coeffs.l_max(); ++l) out.at(j, l) *= multiplier(spec, j, l);
  return out;
}

double membership_defect(const CircleCoefficientsd& coeffs, const MultiplierSpec& spec) {
  const CircleCoefficientsd residual(coeffs.min_index(), coeffs.coeffs() - project(coeffs, spec).coeffs());
  return l2_norm(residual, circle_measure_scale<double>());
}

double membership_defect(const TorusCoefficientsd& coeffs, const MultiplierSpec& spec) {
  const TorusCoefficientsd residual(coeffs.j_min(), coeffs.l_min(), coeffs.coeffs() - project(coeffs, spec).coeffs());
  return l2_norm(residual, torus_measure_scale<double>());
}

cd pairwise_sum(const Eigen::VectorXcd& terms) { return pairwise(terms.data(), terms.size()); }

cd reproduce(const BoundaryGrid& grid, const Eigen::VectorXcd& values, const KernelEvaluator& kernel, const Point& z) {
  if (values.size() != grid.size()) throw invalid_input_error("reproduce: boundary values do not match the grid");
  Eigen::VectorXcd terms(grid.size());
  for (Eigen::Index i = 0; i < grid.size(); ++i) terms(i) = grid.weights(i)*values(i)*kernel(z, grid.point_at(i));
  return pairwise_sum(terms);
}

cd reproduce(const DomainSpec& spec, const GridSamplesd& boundary_values, const Point& z) {
  const int dim = complex_dimension(spec);
  if (boundary_values.dims != dim) throw invalid_input_error("reproduce: sample dimension does not match the domain");
  if (z.size() != dim) throw invalid_input_error("reproduce: point dimension does not match the domain");
  const int n = boundary_values.nodes();
  const BoundaryGrid grid = boundary_grid(spec, n);
  Eigen::VectorXcd values(grid.size());
  if (dim == 1) {
    values = boundary_values.values.col(0);
  } else {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) values(a*n + b) = boundary_values.values(a, b);
  }

  if (const auto* d = std::get_if<SimplyConnectedPunctured>(&spec)) {
    // Work in disk preimages: the grid nodes are the boundary angles.
    std::vector<cd> q;
    for (cd p : d->punctures) q.push_back(d->map.inverse(p));
    const cd zeta = d->map.inverse(z(0));
    Eigen::VectorXcd terms(grid.size());
    for (Eigen::Index i = 0; i < grid.size(); ++i)
      terms(i) = grid.weights(i)*values(i)*
                 szego_punctured_sc_preimage(d->map, q, d->orders, zeta, std::polar(1.0, grid.nodes(i, 0)));
    return pairwise_sum(terms);
  }
  return reproduce(grid, values, szego_evaluator(spec), z);
}

TorusCoefficientsd pullback_theta(const TorusCoefficientsd& coeffs, int m, int n) {
  if (m < 1 || n < 1) throw invalid_input_error("pullback_theta: m, n must be positive");
  int j0 = 0, j1 = 0, l0 = 0, l1 = 0;
  bool first = true;
  for (int j = coeffs.j_min(); j <= coeffs.j_max(); ++j)
    for (int l : {coeffs.l_min(), coeffs.l_max()}) {
      const int a = n*j, b = n*j + m*l;
      if (first) {
        j0 = j1 = a;
        l0 = l1 = b;
        first = false;
      }
      j0 = std::min(j0, a);
      j1 = std::max(j1, a);
      l0 = std::min(l0, b);
      l1 = std::max(l1, b);
    }
  TorusCoefficientsd out = TorusCoefficientsd::zeros(j0, j1, l0, l1);
  for (int j = coeffs.j_min(); j <= coeffs.j_max(); ++j)
    for (int l = coeffs.l_min(); l <= coeffs.l_max(); ++l) out.at(n*j, n*j + m*l) = coeffs(j, l);
  return out;
}

}  // namespace szego
