#pragma once

// Finite Laurent/Fourier coefficient windows on the circle and the 2-torus,
// with FFT analysis/synthesis on equispaced grids.

#include <Eigen/Dense>
#include <unsupported/Eigen/FFT>

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "szego/errors.hpp"

namespace szego {

/// Lowest frequency representable on an N-point grid.
inline int alias_low(int n) { return -(n / 2); }
/// Highest frequency representable on an N-point grid.
inline int alias_high(int n) { return (n + 1) / 2 - 1; }

/// Smallest N whose alias window contains [lo, hi].
inline int required_grid_size(int lo, int hi) {
  int n = 1;
  while (alias_low(n) > lo || alias_high(n) < hi) ++n;
  return n;
}

/// Coefficients a_j for j in [min_index, min_index + size).
template <typename Scalar>
class CircleCoefficients {
 public:
  using Complex = std::complex<Scalar>;
  using Vector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

  CircleCoefficients(int min_index, Vector coeffs)
      : min_index_(min_index), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 1) throw invalid_input_error("CircleCoefficients: empty coefficient window");
    if (!coeffs_.allFinite()) throw invalid_input_error("CircleCoefficients: non-finite coefficient");
  }

  /// Single mode: coefficient `value` at index j.
  static CircleCoefficients mode(int j, Complex value = Complex(1)) {
    Vector v(1);
    v(0) = value;
    return CircleCoefficients(j, std::move(v));
  }

  int min_index() const { return min_index_; }
  int max_index() const { return min_index_ + static_cast<int>(coeffs_.size()) - 1; }
  Eigen::Index size() const { return coeffs_.size(); }
  const Vector& coeffs() const { return coeffs_; }

  bool contains(int j) const { return j >= min_index() && j <= max_index(); }

  /// a_j, or zero outside the window.
  Complex operator()(int j) const { return contains(j) ? coeffs_(j - min_index_) : Complex(0); }

  /// Evaluates sum a_j z^j by direct summation (Laurent series at z != 0).
  Complex evaluate(Complex z) const {
    Complex sum(0);
    for (int j = min_index(); j <= max_index(); ++j) sum += (*this)(j)*integer_power(z, j);
    return sum;
  }

  static Complex integer_power(Complex z, int e) {
    Complex base = e < 0 ? Complex(1) / z : z;
    unsigned k = static_cast<unsigned>(e < 0 ? -e : e);
    Complex r(1);
    while (k) {
      if (k & 1u) r *= base;
      base *= base;
      k >>= 1u;
    }
    return r;
  }

 private:
  int min_index_;
  Vector coeffs_;
};

/// Coefficients f_{j,l} on the window [j0,j1] x [l0,l1]; row = j - j0, col = l - l0.
template <typename Scalar>
class TorusCoefficients {
 public:
  using Complex = std::complex<Scalar>;
  using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

  TorusCoefficients(int j0, int l0, Matrix coeffs) : j0_(j0), l0_(l0), coeffs_(std::move(coeffs)) {
    if (coeffs_.rows() < 1 || coeffs_.cols() < 1)
      throw invalid_input_error("TorusCoefficients: empty coefficient window");
    if (!coeffs_.allFinite()) throw invalid_input_error("TorusCoefficients: non-finite coefficient");
  }

  static TorusCoefficients zeros(int j0, int j1, int l0, int l1) {
    if (j1 < j0 || l1 < l0) throw invalid_input_error("TorusCoefficients: empty window");
    return TorusCoefficients(j0, l0, Matrix::Zero(j1 - j0 + 1, l1 - l0 + 1));
  }

  static TorusCoefficients mode(int j, int l, Complex value = Complex(1)) {
    Matrix m(1, 1);
    m(0, 0) = value;
    return TorusCoefficients(j, l, std::move(m));
  }

  int j_min() const { return j0_; }
  int j_max() const { return j0_ + static_cast<int>(coeffs_.rows()) - 1; }
  int l_min() const { return l0_; }
  int l_max() const { return l0_ + static_cast<int>(coeffs_.cols()) - 1; }
  const Matrix& coeffs() const { return coeffs_; }
  Matrix& coeffs() { return coeffs_; }

  bool contains(int j, int l) const { return j >= j_min() && j <= j_max() && l >= l_min() && l <= l_max(); }

  Complex operator()(int j, int l) const { return contains(j, l) ? coeffs_(j - j0_, l - l0_) : Complex(0); }
  Complex& at(int j, int l) {
    if (!contains(j, l)) throw invalid_input_error("TorusCoefficients: index outside window");
    return coeffs_(j - j0_, l - l0_);
  }

  /// sum f_{j,l} z1^j z2^l by direct summation.
  Complex evaluate(Complex z1, Complex z2) const {
    using C1 = CircleCoefficients<Scalar>;
    Complex sum(0);
    for (int j = j_min(); j <= j_max(); ++j) {
      Complex row(0);
      for (int l = l_min(); l <= l_max(); ++l) row += (*this)(j, l)*C1::integer_power(z2, l);
      sum += row*C1::integer_power(z1, j);
    }
    return sum;
  }

 private:
  int j0_;
  int l0_;
  Matrix coeffs_;
};

/// Samples at theta_t = 2 pi t / N; an N x 1 column on the circle, N x N on the
/// torus with values(t1, t2) at (theta_{t1}, theta_{t2}).
template <typename Scalar>
struct GridSamples {
  using Complex = std::complex<Scalar>;
  using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

  int dims = 1;
  Matrix values;

  int nodes() const { return static_cast<int>(values.rows()); }

  static GridSamples circle(Matrix v) {
    if (v.cols() != 1) throw invalid_input_error("GridSamples: circle samples must be a column");
    return GridSamples{1, std::move(v)};
  }
  static GridSamples torus(Matrix v) {
    if (v.rows() != v.cols()) throw invalid_input_error("GridSamples: torus samples must be N x N");
    return GridSamples{2, std::move(v)};
  }

  template <typename F>
  static GridSamples sample_circle(int n, F&& f) {
    Matrix v(n, 1);
    for (int t = 0; t < n; ++t) v(t, 0) = f(node(t, n));
    return circle(std::move(v));
  }
  template <typename F>
  static GridSamples sample_torus(int n, F&& f) {
    Matrix v(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) v(a, b) = f(node(a, n), node(b, n));
    return torus(std::move(v));
  }

  static Scalar node(int t, int n) { return Scalar(2)*Scalar(EIGEN_PI)*Scalar(t) / Scalar(n); }
};

using CircleCoefficientsd = CircleCoefficients<double>;
using TorusCoefficientsd = TorusCoefficients<double>;
using GridSamplesd = GridSamples<double>;

namespace detail {

template <typename Scalar>
Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1> fft_forward(
    const Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>& x) {
  Eigen::FFT<Scalar> fft;
  Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1> out;
  fft.fwd(out, x);
  return out;
}

template <typename Scalar>
Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1> fft_inverse_unscaled(
    const Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>& x) {
  Eigen::FFT<Scalar> fft;
  fft.SetFlag(Eigen::FFT<Scalar>::Unscaled);
  Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1> out;
  fft.inv(out, x);
  return out;
}

inline int wrap(int j, int n) { return ((j % n) + n) % n; }

inline void check_alias(int lo, int hi, int n, const char* axis) {
  if (lo < alias_low(n) || hi > alias_high(n))
    throw precondition_error(std::string("synthesize: frequencies [") + std::to_string(lo) + ", " +
                             std::to_string(hi) + "] on " + axis + " alias on N=" + std::to_string(n) +
                             "; need N >= " + std::to_string(required_grid_size(lo, hi)));
}

}  // namespace detail

/// Coefficients of circle samples on the alias window of N.
template <typename Scalar>
CircleCoefficients<Scalar> analyze_circle(const GridSamples<Scalar>& samples) {
  using Vec = typename CircleCoefficients<Scalar>::Vector;
  const int n = samples.nodes();
  if (samples.dims != 1 || samples.values.size() == 0) throw invalid_input_error("analyze: empty circle sample array");
  Vec x = samples.values.col(0);
  Vec spectrum = detail::fft_forward<Scalar>(x) / Scalar(n);
  Vec out(n);
  for (int j = alias_low(n); j <= alias_high(n); ++j) out(j - alias_low(n)) = spectrum(detail::wrap(j, n));
  return CircleCoefficients<Scalar>(alias_low(n), std::move(out));
}

/// Coefficients of torus samples on the alias window of N in each variable.
template <typename Scalar>
TorusCoefficients<Scalar> analyze_torus(const GridSamples<Scalar>& samples) {
  using Complex = std::complex<Scalar>;
  using Vec = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
  using Mat = typename TorusCoefficients<Scalar>::Matrix;
  const int n = samples.nodes();
  if (samples.dims != 2 || samples.values.size() == 0) throw invalid_input_error("analyze: empty torus sample array");
  Mat work = samples.values;
  for (int a = 0; a < n; ++a) work.row(a) = detail::fft_forward<Scalar>(Vec(work.row(a).transpose())).transpose();
  for (int b = 0; b < n; ++b) work.col(b) = detail::fft_forward<Scalar>(Vec(work.col(b)));
  work /= Scalar(n)*Scalar(n);
  const int lo = alias_low(n);
  Mat out(n, n);
  for (int j = lo; j <= alias_high(n); ++j)
    for (int l = lo; l <= alias_high(n); ++l) out(j - lo, l - lo) = work(detail::wrap(j, n), detail::wrap(l, n));
  return TorusCoefficients<Scalar>(lo, lo, std::move(out));
}

template <typename Scalar>
GridSamples<Scalar> synthesize(const CircleCoefficients<Scalar>& c, int n) {
  using Vec = typename CircleCoefficients<Scalar>::Vector;
  if (n < 1) throw invalid_input_error("synthesize: grid size must be positive");
  detail::check_alias(c.min_index(), c.max_index(), n, "the circle");
  Vec spectrum = Vec::Zero(n);
  for (int j = c.min_index(); j <= c.max_index(); ++j) spectrum(detail::wrap(j, n)) = c(j);
  return GridSamples<Scalar>::circle(detail::fft_inverse_unscaled<Scalar>(spectrum));
}

template <typename Scalar>
GridSamples<Scalar> synthesize(const TorusCoefficients<Scalar>& c, int n) {
  using Complex = std::complex<Scalar>;
  using Vec = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
  using Mat = typename TorusCoefficients<Scalar>::Matrix;
  if (n < 1) throw invalid_input_error("synthesize: grid size must be positive");
  detail::check_alias(c.j_min(), c.j_max(), n, "the first circle");
  detail::check_alias(c.l_min(), c.l_max(), n, "the second circle");
  Mat work = Mat::Zero(n, n);
  for (int j = c.j_min(); j <= c.j_max(); ++j)
    for (int l = c.l_min(); l <= c.l_max(); ++l) work(detail::wrap(j, n), detail::wrap(l, n)) = c(j, l);
  for (int a = 0; a < n; ++a)
    work.row(a) = detail::fft_inverse_unscaled<Scalar>(Vec(work.row(a).transpose())).transpose();
  for (int b = 0; b < n; ++b) work.col(b) = detail::fft_inverse_unscaled<Scalar>(Vec(work.col(b)));
  return GridSamples<Scalar>::torus(std::move(work));
}

/// measure_scale * sqrt(sum |a|^2). Scale sqrt(2 pi) for arc length on the unit
/// circle, 2 pi for the product measure on the torus.
template <typename Scalar>
Scalar l2_norm(const CircleCoefficients<Scalar>& c, Scalar measure_scale) {
  return measure_scale*c.coeffs().norm();
}

template <typename Scalar>
Scalar l2_norm(const TorusCoefficients<Scalar>& c, Scalar measure_scale) {
  return measure_scale*c.coeffs().norm();
}

template <typename Scalar>
Scalar circle_measure_scale() { return std::sqrt(Scalar(2)*Scalar(EIGEN_PI)); }
template <typename Scalar>
Scalar torus_measure_scale() { return Scalar(2)*Scalar(EIGEN_PI); }

}  // namespace szego
