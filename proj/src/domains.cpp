#include "szego/domains.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "szego/quadrature.hpp"

namespace szego {

namespace {

constexpr double kPi = EIGEN_PI;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

ConformalMap::ConformalMap(std::string name, Fn forward, Fn derivative, Fn inverse)
    : name_(std::move(name)), forward_(std::move(forward)), derivative_(std::move(derivative)),
      inverse_(std::move(inverse)) {}

ConformalMap ConformalMap::identity() {
  return ConformalMap(
      "identity", [](cd z) { return z; }, [](cd) { return cd(1); }, [](cd z) { return z; });
}

ConformalMap ConformalMap::quadratic(cd eps) {
  if (std::abs(eps) >= 0.5) throw configuration_error("quadratic map z + eps z^2 needs |eps| < 1/2");
  std::ostringstream name;
  name << "z+(" << eps.real() << "," << eps.imag() << ")z^2";
  return ConformalMap(
      name.str(), [eps](cd z) { return z + eps*z*z; }, [eps](cd z) { return 1.0 + 2.0*eps*z; });
}

ConformalMap ConformalMap::disk_automorphism(cd a) {
  if (std::abs(a) >= 1.0) throw configuration_error("disk automorphism needs |a| < 1");
  std::ostringstream name;
  name << "mobius(" << a.real() << "," << a.imag() << ")";
  return ConformalMap(
      name.str(), [a](cd z) { return (z + a) / (1.0 + std::conj(a)*z); },
      [a](cd z) {
        const cd d = 1.0 + std::conj(a)*z;
        return (1.0 - std::norm(a)) / (d*d);
      },
      [a](cd w) { return (w - a) / (1.0 - std::conj(a)*w); });
}

cd ConformalMap::sqrt_derivative(cd zeta) const {
  constexpr int steps = 32;
  cd root = std::sqrt(derivative_(cd(0)));
  for (int i = 1; i <= steps; ++i) {
    const cd next = std::sqrt(derivative_(zeta*(double(i) / steps)));
    root = std::abs(next - root) <= std::abs(next + root) ? next : -next;
  }
  return root;
}

cd ConformalMap::inverse(cd z) const {
  if (inverse_) return inverse_(z);
  // Newton from the linearization at 0.
  const cd f0 = forward_(cd(0));
  cd zeta = (z - f0) / derivative_(cd(0));
  for (int it = 0; it < 100; ++it) {
    const cd step = (forward_(zeta) - z) / derivative_(zeta);
    zeta -= step;
    if (std::abs(step) <= 1e-16*(1.0 + std::abs(zeta))) break;
  }
  if (std::abs(forward_(zeta) - z) > 1e-12*(1.0 + std::abs(z)) || std::abs(zeta) > 1.0 + 1e-12)
    throw configuration_error("ConformalMap " + name_ + ": inverse failed to converge");
  return zeta;
}

void ConformalMap::validate(int n) const {
  double winding = 0.0;
  cd prev = derivative_(cd(1));
  for (int t = 1; t <= n; ++t) {
    const cd zeta = std::polar(1.0, 2*kPi*t / n);
    const cd d = derivative_(zeta);
    if (std::abs(d) < 1e-12) throw configuration_error("ConformalMap " + name_ + ": derivative vanishes on the boundary");
    winding += std::arg(d / prev);
    prev = d;
    if (t % 64 == 0) {
      const cd r = sqrt_derivative(zeta);
      if (std::abs(r*r - d) > 1e-12*std::max(1.0, std::abs(d)))
        throw configuration_error("ConformalMap " + name_ + ": sqrt_derivative branch inconsistent");
    }
  }
  if (std::abs(winding) > 1e-6)
    throw configuration_error("ConformalMap " + name_ + ": derivative winds around 0 on the boundary");
}

std::string measure_name(const MeasureTag& m) {
  return std::visit(overloaded{[](const SigmaCircle&) { return std::string("sigma_circle"); },
                               [](const SigmaTorus&) { return std::string("sigma_torus"); },
                               [](const EggSigma&) { return std::string("sigma"); },
                               [](const EggOmegaP&) { return std::string("omega_p"); },
                               [](const EggNuTau& nu) {
                                 std::ostringstream os;
                                 os << "nu_tau(" << nu.tau << (nu.weight == NuWeight::one ? ",f=1)" : ",f=|grad rho|^2/4pi^2)");
                                 return os.str();
                               }},
                    m);
}

std::string domain_name(const DomainSpec& spec) {
  return std::visit(overloaded{[](const Disk&) { return std::string("disk"); },
                               [](const PuncturedDisk&) { return std::string("punctured-disk"); },
                               [](const ProductDxDstar&) { return std::string("dxdstar"); },
                               [](const Hartogs&) { return std::string("hartogs"); },
                               [](const Egg&) { return std::string("egg"); },
                               [](const SimplyConnectedPunctured&) { return std::string("simply-connected"); }},
                    spec);
}

int complex_dimension(const DomainSpec& spec) {
  return std::visit(overloaded{[](const Disk&) { return 1; }, [](const PuncturedDisk&) { return 1; },
                               [](const SimplyConnectedPunctured&) { return 1; }, [](const auto&) { return 2; }},
                    spec);
}

namespace {

void check_punctures(const std::vector<cd>& punctures, const std::vector<int>& orders, bool in_unit_disk) {
  if (punctures.size() != orders.size()) throw invalid_input_error("punctures and orders differ in length");
  for (std::size_t i = 0; i < punctures.size(); ++i) {
    if (orders[i] < 0) throw invalid_input_error("puncture orders must be non-negative");
    if (in_unit_disk && std::abs(punctures[i]) >= 1.0) throw invalid_input_error("punctures must be interior");
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(punctures[i] - punctures[j]) < kPunctureClearance)
        throw invalid_input_error("punctures must be pairwise distinct");
  }
}

}  // namespace

void validate(const DomainSpec& spec) {
  std::visit(overloaded{[](const Disk&) {},
                        [](const PuncturedDisk& d) { check_punctures(d.punctures, d.orders, true); },
                        [](const ProductDxDstar& d) {
                          if (d.k < 0) throw invalid_input_error("dxdstar: k must be non-negative");
                        },
                        [](const Hartogs& h) {
                          if (h.m < 1 || h.n < 1) throw invalid_input_error("hartogs: m, n must be positive");
                          if (std::gcd(h.m, h.n) != 1) throw invalid_input_error("hartogs: gcd(m, n) must be 1");
                          if (h.k < 0) throw invalid_input_error("hartogs: k must be non-negative");
                        },
                        [](const Egg& e) {
                          if (e.p < 1) throw invalid_input_error("egg: p must be positive");
                          if (auto nu = std::get_if<EggNuTau>(&e.measure); nu && (nu->tau < 0.0 || nu->tau > 1.0))
                            throw invalid_input_error("egg: tau must lie in [0, 1]");
                          if (std::holds_alternative<SigmaCircle>(e.measure) || std::holds_alternative<SigmaTorus>(e.measure))
                            throw invalid_input_error("egg: measure must be sigma, omega_p or nu_tau");
                        },
                        [](const SimplyConnectedPunctured& d) {
                          check_punctures(d.punctures, d.orders, false);
                          d.map.validate();
                          for (cd p : d.punctures)
                            if (std::abs(d.map.inverse(p)) >= 1.0) throw invalid_input_error("punctures must be interior");
                        }},
             spec);
}

double egg_gradient_squared(int p, double s, double one_minus_s) {
  const double e = 2.0 - 1.0 / p;
  return 16.0*kPi*kPi*(std::pow(s, e) + std::pow(one_minus_s, e));
}

double egg_levi_factor(int p, double s, double one_minus_s) {
  const double e = 2.0 - 1.0 / p;
  const double a = std::pow(s, e) + std::pow(one_minus_s, e);
  const double c = 1.0 - 1.0 / p;
  return 0.5*p*std::pow(s, c)*std::pow(one_minus_s, c) / std::pow(a, 1.5);
}

namespace {

double sigma_density(int p, double s, double oms) {
  const double e = 2.0 - 1.0 / p;
  const double c = 1.0 - 1.0 / p;
  return std::sqrt(std::pow(s, e) + std::pow(oms, e)) / (2.0*p*std::pow(s, c)*std::pow(oms, c));
}

}  // namespace

double egg_density(int p, const MeasureTag& measure, double s, double one_minus_s) {
  if (!(s > 0.0 && one_minus_s > 0.0)) throw domain_error("egg_density: s must lie in (0, 1)");
  if (p < 1) throw invalid_input_error("egg_density: p must be positive");
  return std::visit(overloaded{[&](const EggSigma&) { return sigma_density(p, s, one_minus_s); },
                               [&](const EggOmegaP&) { return 1.0; },
                               [&](const EggNuTau& nu) {
                                 if (nu.tau < 0.0 || nu.tau > 1.0) throw invalid_input_error("egg_density: tau must lie in [0, 1]");
                                 const double f = nu.weight == NuWeight::one ? 1.0 : egg_gradient_squared(p, s, one_minus_s) / (4*kPi*kPi);
                                 return f*std::pow(egg_levi_factor(p, s, one_minus_s), 1.0 - nu.tau)*sigma_density(p, s, one_minus_s);
                               },
                               [](const auto&) -> double { throw invalid_input_error("egg_density: not an egg measure"); }},
                    measure);
}

double egg_density(int p, const MeasureTag& measure, double s) {
  if (!(s > 0.0 && s < 1.0)) throw domain_error("egg_density: s must lie in (0, 1)");
  return egg_density(p, measure, s, 1.0 - s);
}

double egg_measure_tau(const MeasureTag& measure) {
  return std::visit(overloaded{[](const EggSigma&) { return 1.0; }, [](const EggOmegaP&) { return 0.0; },
                               [](const EggNuTau& nu) { return nu.tau; },
                               [](const auto&) -> double { throw invalid_input_error("not an egg measure"); }},
                    measure);
}

double egg_density_endpoint_exponent(int p, const MeasureTag& measure) {
  // |L|^{1-tau} sigma ~ S^{(1-tau)-1}, S = s^{1-1/p}(1-s)^{1-1/p}; both f choices are bounded above and below.
  return -egg_measure_tau(measure)*(1.0 - 1.0 / p);
}

double egg_critical_order(int p, double tau) {
  const double x = p*(1.0 - tau) + tau;
  const double r = std::round(x);
  return std::abs(x - r) < 1e-9 ? r : x;
}

int stabilization_threshold(int p, double tau) {
  if (p < 1) throw invalid_input_error("stabilization_threshold: p must be positive");
  if (tau < 0.0 || tau > 1.0) throw invalid_input_error("stabilization_threshold: tau must lie in [0, 1]");
  return static_cast<int>(std::ceil(egg_critical_order(p, tau))) - 1;
}

BoundaryGrid boundary_grid(const DomainSpec& spec, int n, int m) {
  if (n < 4) throw invalid_input_error("boundary_grid: N must be at least 4");
  BoundaryGrid grid;
  grid.angular_nodes = n;
  const double dtheta = 2*kPi / n;

  auto circle = [&](const ConformalMap* map) {
    grid.nodes.resize(n, 1);
    grid.weights.resize(n);
    grid.points.resize(n, 1);
    grid.measure = SigmaCircle{};
    for (int t = 0; t < n; ++t) {
      const double theta = dtheta*t;
      const cd zeta = std::polar(1.0, theta);
      grid.nodes(t, 0) = theta;
      grid.points(t, 0) = map ? (*map)(zeta) : zeta;
      grid.weights(t) = map ? std::abs(map->derivative(zeta))*dtheta : dtheta;
    }
  };
  auto torus = [&] {
    grid.nodes.resize(n*n, 2);
    grid.weights.setConstant(n*n, dtheta*dtheta);
    grid.points.resize(n*n, 2);
    grid.measure = SigmaTorus{};
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const int row = a*n + b;
        grid.nodes(row, 0) = dtheta*a;
        grid.nodes(row, 1) = dtheta*b;
        grid.points(row, 0) = std::polar(1.0, dtheta*a);
        grid.points(row, 1) = std::polar(1.0, dtheta*b);
      }
  };

  std::visit(overloaded{[&](const Disk&) { circle(nullptr); }, [&](const PuncturedDisk&) { circle(nullptr); },
                        [&](const SimplyConnectedPunctured& d) { circle(&d.map); },
                        [&](const ProductDxDstar&) { torus(); }, [&](const Hartogs&) { torus(); },
                        [&](const Egg& e) {
                          if (m < 4) throw invalid_input_error("boundary_grid: M must be at least 4 for eggs");
                          if (std::holds_alternative<SigmaCircle>(e.measure) || std::holds_alternative<SigmaTorus>(e.measure))
                            throw invalid_input_error("boundary_grid: egg domains need an egg measure");
                          const auto rule = double_exponential_rule(m);
                          const Eigen::Index total = Eigen::Index(m)*n*n;
                          grid.nodes.resize(total, 3);
                          grid.weights.resize(total);
                          grid.points.resize(total, 2);
                          grid.measure = e.measure;
                          Eigen::Index row = 0;
                          for (int i = 0; i < m; ++i) {
                            const double s = rule.s(i), oms = rule.one_minus_s(i);
                            const double w = rule.weights(i)*egg_density(e.p, e.measure, s, oms)*dtheta*dtheta;
                            const double r1 = std::pow(s, 0.5 / e.p), r2 = std::pow(oms, 0.5 / e.p);
                            for (int a = 0; a < n; ++a)
                              for (int b = 0; b < n; ++b, ++row) {
                                grid.nodes.row(row) << s, dtheta*a, dtheta*b;
                                grid.weights(row) = w;
                                grid.points(row, 0) = std::polar(r1, dtheta*a);
                                grid.points(row, 1) = std::polar(r2, dtheta*b);
                              }
                          }
                        }},
             spec);
  return grid;
}

std::vector<cd> spiral_points(int count, double r_max) {
  const double golden = kPi*(3.0 - std::sqrt(5.0));
  std::vector<cd> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(std::polar(r_max*std::sqrt((i + 0.5) / count), golden*i));
  return out;
}

}  // namespace szego
