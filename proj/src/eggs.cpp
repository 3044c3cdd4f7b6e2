#include "szego/eggs.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "szego/quadrature.hpp"

namespace szego {

namespace {

constexpr double kPi = EIGEN_PI;
constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_egg_measure(const MeasureTag& measure) {
  if (std::holds_alternative<SigmaCircle>(measure) || std::holds_alternative<SigmaTorus>(measure))
    throw invalid_input_error("egg: measure must be sigma, omega_p or nu_tau");
  if (auto nu = std::get_if<EggNuTau>(&measure); nu && (nu->tau < 0.0 || nu->tau > 1.0))
    throw invalid_input_error("egg: tau must lie in [0, 1]");
}

/// Endpoint exponents of s^{j/p}(1-s)^{l/p} times the density.
std::pair<double, double> endpoint_exponents(int p, const MeasureTag& measure, MonomialIndex idx) {
  const double e = egg_density_endpoint_exponent(p, measure);
  return {double(idx.j) / p + e, double(idx.l) / p + e};
}

}  // namespace

double beta(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) throw domain_error("beta: arguments must be positive");
  return std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
}

MonomialNorm monomial_norm_quadrature(int p, const MeasureTag& measure, MonomialIndex idx) {
  if (p < 1) throw invalid_input_error("monomial_norm: p must be positive");
  if (idx.j < 0) throw invalid_input_error("monomial_norm: j must be non-negative");
  require_egg_measure(measure);
  const auto [e0, e1] = endpoint_exponents(p, measure, idx);
  if (e0 <= -1.0) return {kInf, Endpoint::s_zero};
  if (e1 <= -1.0) return {kInf, Endpoint::s_one};
  const double a = double(idx.j) / p, b = double(idx.l) / p;
  auto integrand = [&](double s, double oms) { return std::pow(s, a)*std::pow(oms, b)*egg_density(p, measure, s, oms); };
  const auto r = integrate_unit_interval(integrand, 1e-16, 1e-13, 14);
  return {4*kPi*kPi*r.value, Endpoint::none};
}

MonomialNorm monomial_norm(int p, const MeasureTag& measure, MonomialIndex idx) {
  if (std::holds_alternative<EggOmegaP>(measure)) {
    if (p < 1) throw invalid_input_error("monomial_norm: p must be positive");
    if (idx.j < 0) throw invalid_input_error("monomial_norm: j must be non-negative");
    const double x = double(idx.j) / p + 1.0, y = double(idx.l) / p + 1.0;
    if (y <= 0.0) return {kInf, Endpoint::s_one};
    return {4*kPi*kPi*beta(x, y), Endpoint::none};
  }
  return monomial_norm_quadrature(p, measure, idx);
}

double sigma_beta_weight(int p, MonomialIndex idx) {
  return 4*kPi*kPi*beta(double(idx.j + 1) / p, double(idx.l + 1) / p);
}

MembershipResult membership_test(int p, const MeasureTag& measure, int k) {
  if (p < 1) throw invalid_input_error("membership_test: p must be positive");
  if (k < 0) throw invalid_input_error("membership_test: k must be non-negative");
  require_egg_measure(measure);
  MembershipResult result;
  result.exponent = -double(k) / p + egg_density_endpoint_exponent(p, measure);
  result.member = k < egg_critical_order(p, egg_measure_tau(measure));

  // Probe: integrals over dyadic slabs 1 - s in [2^{-(i+1)}, 2^{-i}] decay
  // geometrically iff the full integral converges.
  auto slab = [&](int i) {
    const double hi = std::ldexp(1.0, -i), lo = std::ldexp(1.0, -(i + 1));
    auto g = [&](double u) { return std::pow(u, -double(k) / p)*egg_density(p, measure, 1.0 - u, u); };
    return integrate_interval(g, lo, hi, 0.0, 1e-12).value;
  };
  double ratio_sum = 0.0;
  int count = 0;
  double prev = slab(20);
  for (int i = 21; i <= 40; ++i) {
    const double cur = slab(i);
    ratio_sum += cur / prev;
    prev = cur;
    ++count;
  }
  const bool probe_member = ratio_sum / count < 0.99;
  result.probe_agrees = probe_member == result.member;
  return result;
}

std::string preset_name(const SeriesPreset& preset) {
  std::ostringstream os;
  std::visit(overloaded{[&](const preset::StrictContainment& s) { os << "strict-containment(p=" << s.p << ")"; },
                        [&](const preset::StabilizationF& f) { os << "stabilization-f(p=" << f.p << ",k=" << f.k << ")"; },
                        [&](const preset::StabilizationH& h) {
                          os << "stabilization-h(p=" << h.p << ",k=" << h.k << ")";
                          if (h.extra_pole) os << "/z2^" << h.extra_pole;
                        }},
             preset);
  return os.str();
}

std::string to_string(SeriesClass c) {
  switch (c) {
    case SeriesClass::convergent:
      return "convergent";
    case SeriesClass::divergent:
      return "divergent";
    case SeriesClass::harmonic:
      return "harmonic-divergent";
    case SeriesClass::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

SeriesClass classify_tail(double slope, double increment_ratio) {
  if (!std::isfinite(slope)) return SeriesClass::inconclusive;
  if (slope < -1.0 - kSlopeBand) return SeriesClass::convergent;
  if (slope > -1.0 + kSlopeBand) return SeriesClass::divergent;
  return std::abs(increment_ratio - 1.0) <= 0.1 ? SeriesClass::harmonic : SeriesClass::inconclusive;
}

ProbeTable divergence_probe(const SeriesPreset& preset, const MeasureTag& measure, const std::vector<int>& truncations) {
  require_egg_measure(measure);
  if (truncations.empty()) throw invalid_input_error("divergence_probe: no truncations");
  for (std::size_t i = 0; i < truncations.size(); ++i) {
    if (truncations[i] < 1) throw invalid_input_error("divergence_probe: truncations must be positive");
    if (i && truncations[i] <= truncations[i - 1]) throw invalid_input_error("divergence_probe: truncations must increase");
  }

  // term(t): squared norm contributed by block t = 1, 2, ... (the t-th term,
  // or the shell max(m,n) = t of the double series).
  std::function<double(int)> term;
  std::visit(overloaded{[&](const preset::StabilizationF& f) {
                          if (f.p < 1 || f.k < 0) throw invalid_input_error("divergence_probe: bad preset parameters");
                          term = [=](int t) {
                            const int m = t - 1;
                            return std::pow(m + 1.0, -double(f.k) / f.p)*monomial_norm(f.p, measure, {m*f.p, 0}).value;
                          };
                        },
                        [&](const preset::StabilizationH& h) {
                          if (h.p < 1 || h.k < 0 || h.k >= h.p || h.extra_pole < 0)
                            throw invalid_input_error("divergence_probe: bad preset parameters");
                          term = [=](int t) {
                            const int m = t - 1;
                            return std::pow(m + 1.0, -double(h.k) / h.p)*
                                   monomial_norm(h.p, measure, {m*h.p, -(h.k - 1) - h.extra_pole}).value;
                          };
                        },
                        [&](const preset::StrictContainment& s) {
                          if (s.p < 1) throw invalid_input_error("divergence_probe: bad preset parameters");
                          term = [=](int t) {
                            double shell = 0.0;
                            auto add = [&](int a, int b) {
                              const double coeff2 = 1.0 / (beta(a + 1.0, b + 1.0)*double(a)*a*double(b)*b);
                              shell += coeff2*monomial_norm(s.p, measure, {s.p*a, s.p*b}).value;
                            };
                            for (int b = 1; b <= t; ++b) add(t, b);
                            for (int a = 1; a < t; ++a) add(a, t);
                            return shell;
                          };
                        }},
             preset);

  ProbeTable table;
  double sum = 0.0;
  int done = 0;
  for (int T : truncations) {
    double last = 0.0;
    while (done < T) {
      ++done;
      last = term(done);
      sum += last;
    }
    table.rows.push_back({T, sum, last});
  }

  const bool finite = std::isfinite(sum);
  if (!finite) {
    table.tail_slope = std::numeric_limits<double>::quiet_NaN();
    table.classification = SeriesClass::divergent;
    return table;
  }

  if (table.rows.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (const auto& row : table.rows) {
      if (!(row.term > 0.0)) continue;
      const double x = std::log(double(row.truncation)), y = std::log(row.term);
      sx += x;
      sy += y;
      sxx += x*x;
      sxy += x*y;
      ++n;
    }
    table.tail_slope = n >= 2 ? (n*sxy - sx*sy) / (n*sxx - sx*sx) : std::numeric_limits<double>::quiet_NaN();
  }
  if (table.rows.size() >= 3) {
    double ratio_sum = 0.0;
    int count = 0;
    for (std::size_t i = 2; i < table.rows.size(); ++i) {
      const double inc1 = table.rows[i - 1].partial_sum - table.rows[i - 2].partial_sum;
      const double inc2 = table.rows[i].partial_sum - table.rows[i - 1].partial_sum;
      if (inc1 > 0.0) {
        ratio_sum += inc2 / inc1;
        ++count;
      }
    }
    table.increment_ratio = count ? ratio_sum / count : 0.0;
  }
  table.classification = classify_tail(table.tail_slope, table.increment_ratio);
  return table;
}

}  // namespace szego
