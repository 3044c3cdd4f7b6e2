#include "szego/rigidity.hpp"

#include <algorithm>
#include <cmath>

#include "szego/kernels.hpp"

namespace szego {

std::vector<cd> default_interior_samples(const ConformalMap& map, int count, double r_max) {
  std::vector<cd> out;
  for (cd zeta : spiral_points(count, r_max)) out.push_back(map(zeta));
  return out;
}

DefectReport ks_defect(const std::vector<cd>& punctures, const std::vector<int>& orders, const ConformalMap& map, int n,
                       const std::vector<cd>& sample_z) {
  if (punctures.size() != orders.size()) throw invalid_input_error("ks_defect: punctures and orders differ in length");
  if (n < 4) throw invalid_input_error("ks_defect: N must be at least 4");
  map.validate();

  std::vector<cd> q;
  for (cd p : punctures) {
    q.push_back(map.inverse(p));
    if (std::abs(q.back()) >= 1.0) throw invalid_input_error("ks_defect: punctures must be interior");
  }

  // Boundary nodes in preimage and image coordinates with unit tangents.
  std::vector<cd> eta(n), w(n), tangent(n);
  for (int t = 0; t < n; ++t) {
    eta[t] = std::polar(1.0, 2*double(EIGEN_PI)*t / n);
    w[t] = map(eta[t]);
    const cd d = map.derivative(eta[t]);
    tangent[t] = cd(0, 1)*eta[t]*d / std::abs(d);
  }

  DefectReport report;
  report.domain = map.name();
  report.punctures = punctures;
  report.orders = orders;
  report.boundary_nodes = n;
  report.interior_samples = static_cast<int>(sample_z.size());

  for (cd z : sample_z) {
    const cd zeta = map.inverse(z);
    for (int t = 0; t < n; ++t) {
      const cd c = cauchy_k(punctures, orders, z, w[t], tangent[t]);
      const cd s = szego_punctured_sc_preimage(map, q, orders, zeta, eta[t]);
      report.sup_defect = std::max(report.sup_defect, std::abs(c - s));
    }
  }

  const int stride = std::max(1, n / 128);
  for (int a = 0; a < n; a += stride)
    for (int b = 0; b < n; b += stride) {
      if (a == b) continue;
      const cd forward = cauchy_k(punctures, orders, w[a], w[b], tangent[b]);
      const cd backward = cauchy_k(punctures, orders, w[b], w[a], tangent[a]);
      report.antisymmetry_defect = std::max(report.antisymmetry_defect, std::abs(forward - std::conj(backward)));
    }
  return report;
}

std::vector<RigidityRow> rigidity_scan(const std::vector<cd>& q_values, int k, int n, int samples) {
  if (k < 0) throw invalid_input_error("rigidity_scan: k must be non-negative");
  const ConformalMap id = ConformalMap::identity();
  const auto sample_z = default_interior_samples(id, samples);
  std::vector<RigidityRow> rows;
  for (cd q : q_values) {
    if (std::abs(q) >= 1.0) throw invalid_input_error("rigidity_scan: |q| must be < 1");
    std::vector<cd> z;
    for (cd s : sample_z)
      if (std::abs(s - q) >= kPunctureClearance) z.push_back(s);
    const auto report = ks_defect({q}, {k}, id, n, z);
    rows.push_back({q, report.sup_defect, report.antisymmetry_defect});
  }
  return rows;
}

}  // namespace szego
