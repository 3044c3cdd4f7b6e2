#include "szego/kernels.hpp"

#include <cmath>
#include <string>

namespace szego {

namespace {

constexpr double kPi = EIGEN_PI;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_dimension(const Point& z, const Point& w, int dim, const char* who) {
  if (z.size() != dim || w.size() != dim)
    throw invalid_input_error(std::string(who) + ": expected points in C^" + std::to_string(dim));
}

void check_clearance(cd z, const std::vector<cd>& punctures, const char* who) {
  for (cd p : punctures)
    if (std::abs(z - p) < kPunctureClearance) throw domain_error(std::string(who) + ": z too close to a puncture");
}

cd guarded(cd denominator, const char* who) {
  if (std::abs(denominator) < kPoleGuard) throw domain_error(std::string(who) + ": evaluation on a pole locus");
  return denominator;
}

// Products of Mobius powers can reach 1e3 near the punctures; they are
// formed in extended precision so each kernel value is rounded once.
using cld = std::complex<long double>;

cld widen(cd z) { return {z.real(), z.imag()}; }
cd narrow(cld z) { return {double(z.real()), double(z.imag())}; }

/// prod_j M_{q_j}(zeta)^{-k_j}.
cld blaschke_inverse_power(const std::vector<cd>& q, const std::vector<int>& k, cd zeta) {
  cld r(1);
  for (std::size_t j = 0; j < q.size(); ++j) r *= ipow(mobius(widen(q[j]), widen(zeta)), -k[j]);
  return r;
}

cd punctured_disk_szego(const PuncturedDisk& d, cd z, cd w) {
  if (d.punctures.size() != d.orders.size()) throw invalid_input_error("szego: punctures and orders differ in length");
  if (std::abs(z) >= 1.0) throw domain_error("szego: z outside the disk");
  check_clearance(z, d.punctures, "szego");
  for (std::size_t j = 0; j < d.punctures.size(); ++j)
    if (d.orders[j] > 0) guarded(mobius(d.punctures[j], z), "szego");
  return narrow(blaschke_inverse_power(d.punctures, d.orders, z)*disk_szego(widen(z), widen(w))*
                std::conj(blaschke_inverse_power(d.punctures, d.orders, w)));
}

cd dxdstar_szego(int k, const Point& z, const Point& w) {
  if (std::abs(z(0)) >= 1.0 || std::abs(z(1)) >= 1.0) throw domain_error("szego: z outside the bidisk");
  if (std::abs(z(1)) < kPunctureClearance) throw domain_error("szego: z on the deleted set z2 = 0");
  const cd a = z(0)*std::conj(w(0));
  const cd b = z(1)*std::conj(w(1));
  return 1.0 / (4*kPi*kPi*ipow(b, k)*guarded(1.0 - b, "szego")*guarded(1.0 - a, "szego"));
}

cd hartogs_szego(const Hartogs& h, const Point& z, const Point& w) {
  const double r1 = std::pow(std::abs(z(0)), h.m), r2 = std::pow(std::abs(z(1)), h.n);
  if (!(r1 < r2 && std::abs(z(1)) < 1.0)) throw domain_error("szego: z outside the Hartogs triangle");
  if (std::abs(z(1)) < kPunctureClearance) throw domain_error("szego: z too close to the origin");
  const cd a = z(0)*std::conj(w(0));
  const cd b = z(1)*std::conj(w(1));
  const cd den = guarded(ipow(b, h.n) - ipow(a, h.m), "szego")*guarded(1.0 - b, "szego");
  return ipow(b, -h.k)*pmn_poly(h.m, h.n, a, b) / (4*kPi*kPi*den);
}

}  // namespace

cd szego_punctured_sc_preimage(const ConformalMap& map, const std::vector<cd>& q, const std::vector<int>& orders,
                               cd zeta, cd eta, PuncturedForm form) {
  if (q.size() != orders.size()) throw invalid_input_error("szego_punctured_sc: punctures and orders differ in length");
  if (std::abs(zeta) >= 1.0) throw domain_error("szego_punctured_sc: z outside the domain");
  check_clearance(zeta, q, "szego_punctured_sc");
  const cld base =
      disk_szego(widen(zeta), widen(eta)) / (widen(map.sqrt_derivative(zeta))*std::conj(widen(map.sqrt_derivative(eta))));
  cld factor(1);
  if (form == PuncturedForm::conjugate) {
    factor = blaschke_inverse_power(q, orders, zeta)*std::conj(blaschke_inverse_power(q, orders, eta));
  } else {
    for (std::size_t j = 0; j < q.size(); ++j) {
      guarded(mobius(q[j], zeta), "szego_punctured_sc");
      factor *= ipow(mobius(widen(q[j]), widen(eta)), orders[j]) / ipow(mobius(widen(q[j]), widen(zeta)), orders[j]);
    }
  }
  return narrow(factor*base);
}

cd szego_punctured_sc(const ConformalMap& map, const std::vector<cd>& punctures, const std::vector<int>& orders, cd z,
                      cd w, PuncturedForm form) {
  check_clearance(z, punctures, "szego_punctured_sc");
  std::vector<cd> q;
  q.reserve(punctures.size());
  for (cd p : punctures) q.push_back(map.inverse(p));
  return szego_punctured_sc_preimage(map, q, orders, map.inverse(z), map.inverse(w), form);
}

cd szego(const DomainSpec& spec, const Point& z, const Point& w) {
  return std::visit(
      overloaded{[&](const Disk&) {
                   require_dimension(z, w, 1, "szego");
                   if (std::abs(z(0)) >= 1.0) throw domain_error("szego: z outside the disk");
                   return disk_szego(z(0), w(0));
                 },
                 [&](const PuncturedDisk& d) {
                   require_dimension(z, w, 1, "szego");
                   return punctured_disk_szego(d, z(0), w(0));
                 },
                 [&](const ProductDxDstar& d) {
                   require_dimension(z, w, 2, "szego");
                   return dxdstar_szego(d.k, z, w);
                 },
                 [&](const Hartogs& h) {
                   require_dimension(z, w, 2, "szego");
                   return hartogs_szego(h, z, w);
                 },
                 [&](const SimplyConnectedPunctured& d) {
                   require_dimension(z, w, 1, "szego");
                   return szego_punctured_sc(d.map, d.punctures, d.orders, z(0), w(0));
                 },
                 [](const Egg&) -> cd { throw invalid_input_error("szego: no closed-form kernel for egg domains"); }},
      spec);
}

KernelEvaluator szego_evaluator(const DomainSpec& spec) {
  return KernelEvaluator{spec, [spec](const Point& z, const Point& w) { return szego(spec, z, w); }};
}

cd cauchy_k(const std::vector<cd>& punctures, const std::vector<int>& orders, cd z, cd w, cd tangent) {
  if (punctures.size() != orders.size()) throw invalid_input_error("cauchy_k: punctures and orders differ in length");
  check_clearance(z, punctures, "cauchy_k");
  guarded(w - z, "cauchy_k");
  cld factor(1);
  for (std::size_t j = 0; j < punctures.size(); ++j)
    factor *= ipow((widen(w) - widen(punctures[j])) / (widen(z) - widen(punctures[j])), orders[j]);
  return narrow(factor*widen(tangent) / (cld(0, 2*EIGEN_PI)*(widen(w) - widen(z))));
}

cd generic_ck_phi(const KernelEvaluator& parent, const std::function<cd(const Point&)>& phi, int k, const Point& z,
                  const Point& w) {
  if (k < 0) throw invalid_input_error("generic_ck_phi: k must be non-negative");
  if (k == 0) return parent(z, w);
  const cd pz = phi(z);
  if (std::abs(pz) < kPoleGuard) throw domain_error("generic_ck_phi: phi vanishes at z");
  return ipow(phi(w) / pz, k)*parent(z, w);
}

cd partial_fraction_oracle(int m, int n, cd b, cd x, cd y) {
  if (m < 1 || n < 1) throw invalid_input_error("partial_fraction_oracle: m, n must be positive");
  if (std::abs(b) == 0.0) throw invalid_input_error("partial_fraction_oracle: b must be nonzero");
  const double r = std::pow(std::abs(b), 1.0 / m);
  const double phase = std::arg(b) / m;
  cd sum(0);
  for (int l = 0; l < m; ++l) {
    const cd root = std::polar(r, phase + 2*kPi*l / m);
    const cd rn = ipow(root, n);
    sum += rn / (guarded(x - rn, "partial_fraction_oracle")*guarded(y - root, "partial_fraction_oracle"));
  }
  return sum;
}

cd partial_fraction_closed_form(int m, int n, cd b, cd x, cd y) {
  if (m < 1 || n < 1) throw invalid_input_error("partial_fraction_closed_form: m, n must be positive");
  if (std::abs(b) == 0.0) throw invalid_input_error("partial_fraction_closed_form: b must be nonzero");
  cd numerator(0);
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) {
      const int e = n*p + 1 + q;
      if (e % m == 0) numerator += ipow(b, -e / m)*ipow(x, p)*ipow(y, q);
    }
  const cd den = guarded(ipow(x, m) - ipow(b, n), "partial_fraction_closed_form")*
                 guarded(ipow(y, m) - b, "partial_fraction_closed_form");
  return double(m)*ipow(b, n + 1)*numerator / den;
}

std::pair<cd, cd> roots_substitution_oracle(int n, cd a, const std::function<cd(cd)>& f, int quadrature_nodes) {
  if (n < 1) throw invalid_input_error("roots_substitution_oracle: n must be positive");
  if (quadrature_nodes < 1) throw invalid_input_error("roots_substitution_oracle: N must be positive");
  if (std::abs(std::abs(a) - 1.0) < kPoleGuard) throw domain_error("roots_substitution_oracle: |a| must differ from 1");
  const int nodes = quadrature_nodes;
  const double h = 2*kPi / nodes;
  const double r = std::pow(std::abs(a), 1.0 / n);
  const double phase = std::arg(a) / n;
  cd left(0), right(0);
  for (int t = 0; t < nodes; ++t) {
    const cd zeta = std::polar(1.0, h*t);
    const cd dzeta = cd(0, 1)*zeta*h;
    const cd fz = f(ipow(zeta, n));
    for (int j = 0; j < n; ++j) left += fz / (zeta - std::polar(r, phase + 2*kPi*j / n))*dzeta;
    right += f(zeta) / (zeta - a)*dzeta;
  }
  return {left, double(n)*right};
}

}  // namespace szego
