#pragma once

// Closed-form reproducing kernels. Nothing here sums a series: every kernel
// is a rational expression in z and conj(w) with integer exponents.

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "szego/domains.hpp"
#include "szego/series.hpp"

namespace szego {

/// Distance below which a denominator counts as sitting on a pole locus.
inline constexpr double kPoleGuard = 1e-9;

template <typename T>
std::complex<T> ipow(std::complex<T> z, int e) {
  return CircleCoefficients<T>::integer_power(z, e);
}

/// 1 / (2 pi (1 - z conj(w))): the Szego kernel of the unit disk.
template <typename T>
std::complex<T> disk_szego(std::complex<T> z, std::complex<T> w) {
  const std::complex<T> d = T(1) - z*std::conj(w);
  if (std::abs(d) < T(kPoleGuard)) throw domain_error("disk_szego: z conj(w) = 1");
  return T(1) / (T(2)*T(EIGEN_PI)*d);
}

/// P_{m,n}(a,b) = sum_{r<m} a^r b^{n - floor(nr/m)}.
template <typename T>
std::complex<T> pmn_poly(int m, int n, std::complex<T> a, std::complex<T> b) {
  if (m < 1 || n < 1) throw invalid_input_error("pmn_poly: m, n must be positive");
  std::complex<T> sum(0);
  std::complex<T> ar(1);
  for (int r = 0; r < m; ++r) {
    sum += ar*ipow(b, n - (n*r) / m);
    ar *= a;
  }
  return sum;
}

/// M_q(zeta) = (zeta - q) / (1 - conj(q) zeta).
template <typename T>
std::complex<T> mobius(std::complex<T> q, std::complex<T> zeta) {
  if (std::abs(q) >= T(1)) throw invalid_input_error("mobius: |q| must be < 1");
  const std::complex<T> d = T(1) - std::conj(q)*zeta;
  if (std::abs(d) < T(kPoleGuard)) throw domain_error("mobius: zeta at the pole 1/conj(q)");
  return (zeta - q) / d;
}

/// A pointwise-evaluable kernel tagged with the domain it belongs to.
struct KernelEvaluator {
  DomainSpec domain;
  std::function<cd(const Point&, const Point&)> eval;

  cd operator()(const Point& z, const Point& w) const { return eval(z, w); }
};

/// Szego kernel of a model domain; z interior, w on the distinguished
/// boundary. The formulas are those of the extension S(z, w), so they also
/// accept interior w.
cd szego(const DomainSpec& spec, const Point& z, const Point& w);

/// Kernel evaluator wrapping szego() for a fixed domain.
KernelEvaluator szego_evaluator(const DomainSpec& spec);

/// Cauchy k-kernel against arc length, with the unit tangent gamma'(w) given.
cd cauchy_k(const std::vector<cd>& punctures, const std::vector<int>& orders, cd z, cd w, cd tangent);

/// Which algebraic form of the punctured Szego kernel to evaluate.
enum class PuncturedForm {
  /// phi^{-k}(z) s(z,w) conj(phi^{-k}(w)); Hermitian, valid off the boundary.
  conjugate,
  /// phi^k(w) / phi^k(z) s(z,w); agrees with `conjugate` only on the boundary.
  ratio,
};

/// Szego kernel of F(D) minus punctures (image coordinates throughout).
cd szego_punctured_sc(const ConformalMap& map, const std::vector<cd>& punctures, const std::vector<int>& orders,
                      cd z, cd w, PuncturedForm form = PuncturedForm::conjugate);

/// Same, with z and w given by their disk preimages zeta, eta, and the
/// punctures by their preimages. Avoids inverting the map in quadrature loops.
cd szego_punctured_sc_preimage(const ConformalMap& map, const std::vector<cd>& puncture_preimages,
                               const std::vector<int>& orders, cd zeta, cd eta,
                               PuncturedForm form = PuncturedForm::conjugate);

/// phi(w)^k / phi(z)^k * parent(z, w).
cd generic_ck_phi(const KernelEvaluator& parent, const std::function<cd(const Point&)>& phi, int k, const Point& z,
                  const Point& w);

/// sum_l b_l^n / ((x - b_l^n)(y - b_l)) over the m-th roots b_l of b,
/// enumerated explicitly.
cd partial_fraction_oracle(int m, int n, cd b, cd x, cd y);

/// m b^{n+1} sum c_{p,q} x^p y^q / ((x^m - b^n)(y^m - b)), c_{p,q} = b^{-(np+1+q)/m}
/// when np+1+q = 0 mod m and zero otherwise.
cd partial_fraction_closed_form(int m, int n, cd b, cd x, cd y);

/// Both sides of the n-th root substitution identity by N-node trapezoid
/// quadrature: sum_j int f(zeta^n)/(zeta - a_j) dzeta and n int f(w)/(w - a) dw.
std::pair<cd, cd> roots_substitution_oracle(int n, cd a, const std::function<cd(cd)>& f, int quadrature_nodes);

}  // namespace szego
