#include "szego/experiment.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "szego/eggs.hpp"
#include "szego/kernels.hpp"
#include "szego/projections.hpp"
#include "szego/rigidity.hpp"
#include "szego/series.hpp"

namespace szego {

using nlohmann::json;

namespace {

constexpr double kPi = EIGEN_PI;

const std::vector<std::pair<std::string, ExperimentKind>>& experiment_names() {
  static const std::vector<std::pair<std::string, ExperimentKind>> names = {
      {"reproduce", ExperimentKind::reproduce},         {"project-compare", ExperimentKind::project_compare},
      {"egg-norms", ExperimentKind::egg_norms},         {"egg-stabilize", ExperimentKind::egg_stabilize},
      {"rigidity-scan", ExperimentKind::rigidity_scan}, {"oracle-suite", ExperimentKind::oracle_suite}};
  return names;
}

template <typename T>
T get_field(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw config_error(key, std::string("wrong type (") + e.what() + ")");
  }
}

cd parse_complex(const json& v, const char* key) {
  if (v.is_number()) return cd(v.get<double>(), 0.0);
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return cd(v[0].get<double>(), v[1].get<double>());
  throw config_error(key, "expected a number or a [re, im] pair");
}

std::vector<cd> get_complex_list(const json& j, const char* key, std::vector<cd> fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_array()) return {parse_complex(v, key)};
  std::vector<cd> out;
  for (const auto& e : v) out.push_back(parse_complex(e, key));
  return out;
}

json complex_list_json(const std::vector<cd>& v) {
  json out = json::array();
  for (cd z : v) out.push_back({z.real(), z.imag()});
  return out;
}

void require(bool ok, const char* field, const std::string& message) {
  if (!ok) throw config_error(field, message);
}

MeasureTag make_measure(const ExperimentConfig& c) {
  if (c.measure == "sigma") return EggSigma{};
  if (c.measure == "omega_p") return EggOmegaP{};
  return EggNuTau{c.tau, c.weight == "one" ? NuWeight::one : NuWeight::gradient_squared};
}

std::vector<int> dyadic(int lo, int hi) {
  std::vector<int> out;
  for (int e = lo; e <= hi; ++e) out.push_back(1 << e);
  return out;
}

double rel_error(cd approx, cd exact) {
  const double scale = std::abs(exact);
  return scale > 0 ? std::abs(approx - exact) / scale : std::abs(approx - exact);
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string cell_text(const Cell& c) {
  return std::visit([](const auto& v) -> std::string {
    using V = std::decay_t<decltype(v)>;
    if constexpr (std::is_same_v<V, std::string>) return v;
    else if constexpr (std::is_same_v<V, double>) return format_double(v);
    else return std::to_string(v);
  }, c);
}

// ---------------------------------------------------------------- reproduce

struct TestFunction {
  int a = 0;
  int b = 0;
  std::function<cd(const Point&)> f;
};

ResultTable run_reproduce(const ExperimentConfig& c) {
  DomainSpec spec;
  std::vector<TestFunction> tests;
  std::vector<Point> points;
  auto planar_points = [&](const ConformalMap& map, const std::vector<cd>& punctures) {
    // An annulus keeps relative errors meaningful for monomials of high degree.
    for (cd zeta : spiral_points(8*c.points, 0.8)) {
      if (std::abs(zeta) < 0.3) continue;
      const cd z = map(zeta);
      bool clear = true;
      for (cd p : punctures) clear = clear && std::abs(z - p) > 1e-3;
      if (clear && static_cast<int>(points.size()) < c.points) points.push_back(point(z));
    }
  };

  if (c.domain == "disk" || c.domain == "punctured-disk") {
    const int k = c.domain == "disk" ? 0 : c.k;
    spec = c.domain == "disk" ? DomainSpec{Disk{}} : punctured_disk(k);
    for (int a = -k; a <= 5; ++a) tests.push_back({a, 0, [a](const Point& z) { return ipow(z(0), a); }});
    planar_points(ConformalMap::identity(), {cd(0)});
  } else if (c.domain == "dxdstar") {
    spec = ProductDxDstar{c.k};
    for (int a = 0; a <= 2; ++a)
      for (int b = -c.k; b <= 2; ++b)
        tests.push_back({a, b, [a, b](const Point& z) { return ipow(z(0), a)*ipow(z(1), b); }});
    for (const Point& z : hartogs_interior_points(1, 1, c.points)) points.push_back(point(z(1)*0.9, z(1)));
  } else if (c.domain == "hartogs") {
    spec = Hartogs{c.m, c.n, c.k};
    for (auto [a, b] : admissible_hartogs_monomials(c.m, c.n, c.k, 10))
      tests.push_back({a, b, [a = a, b = b](const Point& z) { return ipow(z(0), a)*ipow(z(1), b); }});
    points = hartogs_interior_points(c.m, c.n, c.points);
  } else if (c.domain == "simply-connected") {
    const ConformalMap map = ConformalMap::quadratic(cd(c.map_eps));
    std::vector<cd> punctures = c.punctures.empty() ? std::vector<cd>{map(cd(0.1))} : c.punctures;
    std::vector<int> orders = c.k_vector.empty() ? std::vector<int>(punctures.size(), 1) : c.k_vector;
    require(orders.size() == punctures.size(), "k_vector", "needs one order per puncture");
    spec = SimplyConnectedPunctured{map, punctures, orders};
    auto pole_part = [punctures, orders](cd z) {
      cd r(1);
      for (std::size_t j = 0; j < punctures.size(); ++j) r *= ipow(z - punctures[j], -orders[j]);
      return r;
    };
    tests.push_back({0, 0, [](const Point&) { return cd(1); }});
    tests.push_back({1, 0, [](const Point& z) { return z(0)*z(0); }});
    tests.push_back({2, 0, [pole_part](const Point& z) { return pole_part(z(0)); }});
    tests.push_back({3, 0, [pole_part](const Point& z) { return z(0)*pole_part(z(0)) + 2.0; }});
    planar_points(map, punctures);
  } else {
    throw config_error("domain", "unknown domain '" + c.domain + "'");
  }
  validate(spec);

  ResultTable table;
  table.columns = {"point", "a", "b", "z1_re", "z1_im", "z2_re", "z2_im", "exact_re", "exact_im", "reproduced_re",
                   "reproduced_im", "rel_error"};
  const BoundaryGrid grid = boundary_grid(spec, c.N);
  const int dim = complex_dimension(spec);
  double worst = 0.0;
  for (const TestFunction& t : tests) {
    GridSamplesd samples;
    if (dim == 1) {
      Eigen::MatrixXcd v(c.N, 1);
      for (int i = 0; i < c.N; ++i) v(i, 0) = t.f(point(grid.points(i, 0)));
      samples = GridSamplesd::circle(std::move(v));
    } else {
      samples = GridSamplesd::sample_torus(c.N, [&](double t1, double t2) {
        return t.f(point(std::polar(1.0, t1), std::polar(1.0, t2)));
      });
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
      const Point& z = points[i];
      const cd exact = t.f(z);
      const cd got = reproduce(spec, samples, z);
      const double err = rel_error(got, exact);
      worst = std::max(worst, err);
      const cd z2 = dim == 2 ? z(1) : cd(0);
      table.add_row({std::int64_t(i), std::int64_t(t.a), std::int64_t(t.b), number(z(0).real()), number(z(0).imag()),
                     number(z2.real()), number(z2.imag()), number(exact.real()), number(exact.imag()),
                     number(got.real()), number(got.imag()), number(err)});
    }
  }
  table.metadata["max_rel_error"] = worst;
  table.metadata["pass"] = worst <= c.tolerance;
  return table;
}

// ---------------------------------------------------------- project-compare

ResultTable run_project_compare(const ExperimentConfig& c) {
  const Hartogs h{c.m, c.n, c.k};
  validate(DomainSpec{h});
  MultiplierReading reading = MultiplierReading::indicator;
  if (c.mode == "literal_max") reading = MultiplierReading::literal_max;
  else if (c.mode == "sign_formula") reading = MultiplierReading::sign_formula;
  const MultiplierSpec mspec{multiplier_family::Hartogs{c.m, c.n, c.k}, reading};

  std::mt19937_64 rng(c.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const int B = c.bandwidth;
  TorusCoefficientsd data = TorusCoefficientsd::zeros(-B, B, -B, B);
  for (int j = -B; j <= B; ++j)
    for (int l = -B; l <= B; ++l) data.at(j, l) = cd(unit(rng), unit(rng));

  const TorusCoefficientsd projected = project(data, mspec);
  const TorusCoefficientsd twice = project(projected, mspec);
  const bool idempotent = (twice.coeffs().array() == projected.coeffs().array()).all();

  const GridSamplesd samples = synthesize(data, c.N);
  ResultTable table;
  table.columns = {"point", "z1_re", "z1_im", "z2_re", "z2_im", "series_re", "series_im", "kernel_re", "kernel_im",
                   "abs_diff"};
  double worst = 0.0;
  const auto points = hartogs_interior_points(c.m, c.n, c.points);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Point& z = points[i];
    const cd series = projected.evaluate(z(0), z(1));
    const cd kernel = reproduce(DomainSpec{h}, samples, z);
    const double diff = std::abs(series - kernel);
    worst = std::max(worst, diff);
    table.add_row({std::int64_t(i), number(z(0).real()), number(z(0).imag()), number(z(1).real()), number(z(1).imag()),
                   number(series.real()), number(series.imag()), number(kernel.real()), number(kernel.imag()),
                   number(diff)});
  }
  table.metadata["max_abs_diff"] = worst;
  table.metadata["idempotent_exact"] = idempotent;
  table.metadata["pass"] = idempotent && worst <= c.tolerance;
  return table;
}

// ---------------------------------------------------------------- egg-norms

ResultTable run_egg_norms(const ExperimentConfig& c) {
  const MeasureTag other = make_measure(c);
  ResultTable table;
  table.columns = {"j", "l", "omega_closed", "omega_quadrature", "rel_error", "measure_norm", "sigma_beta_weight",
                   "beta_ordering"};
  double worst = 0.0;
  bool ordering = true;
  for (int j = 0; j <= c.j_max; ++j)
    for (int l = 0; l <= c.l_max; ++l) {
      const MonomialIndex idx{j, l};
      const double closed = monomial_norm(c.p, EggOmegaP{}, idx).value;
      const double quad = monomial_norm_quadrature(c.p, EggOmegaP{}, idx).value;
      const double err = std::abs(quad - closed) / closed;
      const auto mn = monomial_norm(c.p, other, idx);
      const bool ok = beta(double(j) / c.p + 1, double(l) / c.p + 1) <= beta(double(j + 1) / c.p, double(l + 1) / c.p);
      worst = std::max(worst, err);
      ordering = ordering && ok;
      table.add_row({std::int64_t(j), std::int64_t(l), number(closed), number(quad), number(err),
                     mn.finite() ? number(mn.value) : Cell(std::string("inf")), number(sigma_beta_weight(c.p, idx)),
                     std::int64_t(ok)});
    }
  table.metadata["measure"] = measure_name(other);
  table.metadata["max_rel_error"] = worst;
  table.metadata["beta_ordering_holds"] = ordering;
  table.metadata["pass"] = ordering && worst <= c.tolerance;
  return table;
}

// ------------------------------------------------------------ egg-stabilize

ResultTable run_egg_stabilize(const ExperimentConfig& c) {
  const MeasureTag measure = make_measure(c);
  ResultTable table;
  if (c.mode == "membership") {
    const int threshold = stabilization_threshold(c.p, egg_measure_tau(measure));
    table.columns = {"k", "member", "exponent", "probe_agrees", "threshold"};
    bool consistent = true;
    for (int k = 0; k <= c.k_max; ++k) {
      const auto r = membership_test(c.p, measure, k);
      consistent = consistent && r.probe_agrees && (r.member == (k <= threshold));
      table.add_row({std::int64_t(k), std::int64_t(r.member), number(r.exponent), std::int64_t(r.probe_agrees),
                     std::int64_t(threshold)});
    }
    table.metadata["measure"] = measure_name(measure);
    table.metadata["threshold"] = threshold;
    table.metadata["pass"] = consistent;
    return table;
  }

  SeriesPreset preset;
  std::vector<int> truncations = c.truncations;
  if (c.preset == "stabilization-f") {
    preset = preset::StabilizationF{c.p, c.k};
  } else if (c.preset == "stabilization-h") {
    preset = preset::StabilizationH{c.p, c.k, c.extra_pole};
  } else {
    preset = preset::StrictContainment{c.p};
    if (truncations.empty()) truncations = dyadic(2, 7);
  }
  if (truncations.empty()) truncations = dyadic(4, 14);
  const ProbeTable probe = divergence_probe(preset, measure, truncations);
  table.columns = {"truncation", "partial_sum", "term"};
  for (const auto& row : probe.rows)
    table.add_row({std::int64_t(row.truncation), number(row.partial_sum), number(row.term)});
  table.metadata["measure"] = measure_name(measure);
  table.metadata["preset"] = preset_name(preset);
  table.metadata["tail_slope"] = std::isfinite(probe.tail_slope) ? json(probe.tail_slope) : json("nan");
  table.metadata["increment_ratio"] = probe.increment_ratio;
  table.metadata["classification"] = to_string(probe.classification);
  return table;
}

// ------------------------------------------------------------ rigidity-scan

ResultTable run_rigidity_scan(const ExperimentConfig& c) {
  const std::vector<cd> qs = c.q_values.empty() ? std::vector<cd>{0.0, 0.1, 0.2, 0.3} : c.q_values;
  const auto rows = rigidity_scan(qs, c.k, c.N, c.points);
  ResultTable table;
  table.columns = {"q_re", "q_im", "abs_q", "sup_defect", "antisymmetry_defect"};
  for (const auto& r : rows)
    table.add_row({number(r.q.real()), number(r.q.imag()), number(std::abs(r.q)), number(r.sup_defect),
                   number(r.antisymmetry_defect)});
  return table;
}

// ------------------------------------------------------------- oracle-suite

constexpr double kMaxOracleCondition = 1e4;

ResultTable run_oracle_suite(const ExperimentConfig& c) {
  std::mt19937_64 rng(c.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ResultTable table;
  table.columns = {"m", "n", "samples", "rejected", "max_rel_error", "pass"};
  bool all = true;
  for (int m = 1; m <= c.m_max; ++m)
    for (int n = 1; n <= c.n_max; ++n) {
      double worst = 0.0;
      int done = 0, rejected = 0;
      while (done < c.samples) {
        const cd b = std::polar(0.5 + unit(rng), 2*kPi*unit(rng));
        const cd x = std::polar(2.0*unit(rng), 2*kPi*unit(rng));
        const cd y = std::polar(2.0*unit(rng), 2*kPi*unit(rng));
        // Keep x off every m-th root of b^n (the zeros of x^m - b^n, a superset
        // of the poles b_l^n when gcd(m, n) > 1) and y off the roots b_l.
        const double r = std::pow(std::abs(b), 1.0 / m), rn = std::pow(std::abs(b), double(n) / m);
        bool clear = true;
        for (int l = 0; l < m; ++l) {
          const cd root = std::polar(r, (std::arg(b) + 2*kPi*l) / m);
          const cd root_n = std::polar(rn, (n*std::arg(b) + 2*kPi*l) / m);
          clear = clear && std::abs(x - root_n) > 0.05 && std::abs(y - root) > 0.05;
        }
        if (!clear) {
          ++rejected;
          continue;
        }
        const cd brute = partial_fraction_oracle(m, n, b, x, y);
        // The root enumeration cancels when |y| is small; skip samples where it
        // cannot itself be trusted to ~12 digits.
        double magnitude = 0.0;
        for (int l = 0; l < m; ++l) {
          const cd root = std::polar(r, (std::arg(b) + 2*kPi*l) / m);
          magnitude += std::abs(ipow(root, n) / ((x - ipow(root, n))*(y - root)));
        }
        if (magnitude > kMaxOracleCondition*std::abs(brute)) {
          ++rejected;
          continue;
        }
        const cd closed = partial_fraction_closed_form(m, n, b, x, y);
        worst = std::max(worst, rel_error(closed, brute));
        ++done;
      }
      const bool pass = worst <= c.tolerance;
      all = all && pass;
      table.add_row({std::int64_t(m), std::int64_t(n), std::int64_t(c.samples), std::int64_t(rejected), number(worst),
                     std::int64_t(pass)});
    }
  table.metadata["pass"] = all;
  return table;
}

}  // namespace

std::string to_string(ExperimentKind kind) {
  for (const auto& [name, k] : experiment_names())
    if (k == kind) return name;
  return "unknown";
}

ExperimentConfig ExperimentConfig::from_json(const json& j) {
  if (!j.is_object()) throw config_error("config", "expected a JSON object");
  ExperimentConfig c;
  require(j.contains("experiment"), "experiment", "missing");
  const std::string name = get_field<std::string>(j, "experiment", "");
  const auto& names = experiment_names();
  auto it = std::find_if(names.begin(), names.end(), [&](const auto& e) { return e.first == name; });
  require(it != names.end(), "experiment", "unknown experiment '" + name + "'");
  c.experiment = it->second;

  c.domain = get_field<std::string>(j, "domain", c.domain);
  std::transform(c.domain.begin(), c.domain.end(), c.domain.begin(), [](unsigned char ch) { return std::tolower(ch); });
  c.p = get_field<int>(j, "p", c.p);
  c.m = get_field<int>(j, "m", c.m);
  c.n = get_field<int>(j, "n", c.n);
  c.k = get_field<int>(j, "k", c.k);
  c.k_vector = get_field<std::vector<int>>(j, "k_vector", c.k_vector);
  c.tau = get_field<double>(j, "tau", c.tau);
  c.measure = get_field<std::string>(j, "measure", j.contains("tau") ? "nu_tau" : c.measure);
  c.weight = get_field<std::string>(j, "weight", c.weight);
  c.q_values = get_complex_list(j, "q", c.q_values);
  c.punctures = get_complex_list(j, "punctures", c.punctures);
  c.map_eps = get_field<double>(j, "map_eps", c.experiment == ExperimentKind::reproduce ? 0.3 : c.map_eps);
  const int default_n = c.experiment == ExperimentKind::rigidity_scan ? 256 : c.experiment == ExperimentKind::reproduce && c.domain == "simply-connected" ? 512
                        : c.experiment == ExperimentKind::reproduce && (c.domain == "disk" || c.domain == "punctured-disk") ? 256
                                                                                                                         : 128;
  c.N = get_field<int>(j, "N", default_n);
  c.M = get_field<int>(j, "M", c.M);
  c.bandwidth = get_field<int>(j, "bandwidth", c.bandwidth);
  c.points = get_field<int>(j, "points", c.experiment == ExperimentKind::rigidity_scan ? 32 : c.experiment == ExperimentKind::reproduce && (c.domain == "hartogs" || c.domain == "simply-connected") ? (c.domain == "hartogs" ? 5 : 3) : 10);
  c.j_max = get_field<int>(j, "j_max", c.j_max);
  c.l_max = get_field<int>(j, "l_max", c.l_max);
  c.k_max = get_field<int>(j, "k_max", c.k_max);
  c.m_max = get_field<int>(j, "m_max", c.m_max);
  c.n_max = get_field<int>(j, "n_max", c.n_max);
  c.samples = get_field<int>(j, "samples", c.samples);
  c.mode = get_field<std::string>(j, "mode", c.experiment == ExperimentKind::project_compare ? "indicator" : c.mode);
  c.preset = get_field<std::string>(j, "preset", c.preset);
  c.extra_pole = get_field<int>(j, "extra_pole", c.extra_pole);
  c.truncations = get_field<std::vector<int>>(j, "truncations", c.truncations);
  const double default_tol = c.experiment == ExperimentKind::egg_norms ? 1e-8
                             : c.experiment == ExperimentKind::reproduce && c.domain == "simply-connected" ? 1e-8
                             : c.experiment == ExperimentKind::reproduce && (c.domain == "disk" || c.domain == "punctured-disk") ? 1e-12
                                                                                                                  : 1e-10;
  c.tolerance = get_field<double>(j, "tolerance", default_tol);
  if (j.contains("output_path") && !j.at("output_path").is_null()) c.output_path = get_field<std::string>(j, "output_path", "");
  if (j.contains("seed")) {
    require(j.at("seed").is_number_integer() && j.at("seed").get<long long>() >= 0, "seed", "expected a non-negative integer");
    c.seed = j.at("seed").get<std::uint64_t>();
  }

  // Preconditions of the target module.
  require(c.N >= 4, "N", "must be at least 4");
  require(c.M >= 4, "M", "must be at least 4");
  require(c.p >= 1, "p", "must be positive");
  require(c.m >= 1, "m", "must be positive");
  require(c.n >= 1, "n", "must be positive");
  require(c.k >= 0, "k", "must be non-negative");
  for (int kk : c.k_vector) require(kk >= 0, "k_vector", "orders must be non-negative");
  require(c.tau >= 0.0 && c.tau <= 1.0, "tau", "must lie in [0, 1]");
  require(c.measure == "sigma" || c.measure == "omega_p" || c.measure == "nu_tau", "measure",
          "expected sigma, omega_p or nu_tau");
  require(c.weight == "one" || c.weight == "gradient_squared", "weight", "expected one or gradient_squared");
  require(c.points >= 1, "points", "must be positive");
  require(c.bandwidth >= 0, "bandwidth", "must be non-negative");
  require(c.samples >= 1, "samples", "must be positive");
  require(c.tolerance > 0.0, "tolerance", "must be positive");
  require(c.j_max >= 0 && c.l_max >= 0, c.j_max < 0 ? "j_max" : "l_max", "must be non-negative");
  require(c.k_max >= 0, "k_max", "must be non-negative");
  require(c.m_max >= 1 && c.n_max >= 1, c.m_max < 1 ? "m_max" : "n_max", "must be positive");
  for (cd q : c.q_values) require(std::abs(q) < 1.0, "q", "every |q| must be < 1");

  switch (c.experiment) {
    case ExperimentKind::reproduce:
      require(c.domain == "disk" || c.domain == "punctured-disk" || c.domain == "dxdstar" || c.domain == "hartogs" ||
                  c.domain == "simply-connected",
              "domain", "expected disk, punctured-disk, dxdstar, hartogs or simply-connected");
      if (c.domain == "hartogs") require(std::gcd(c.m, c.n) == 1, "m", "gcd(m, n) must be 1");
      require(std::abs(c.map_eps) < 0.5, "map_eps", "must satisfy |eps| < 1/2");
      break;
    case ExperimentKind::project_compare:
      require(std::gcd(c.m, c.n) == 1, "m", "gcd(m, n) must be 1");
      require(c.mode == "indicator" || c.mode == "literal_max" || c.mode == "sign_formula", "mode",
              "expected indicator, literal_max or sign_formula");
      require(c.N >= 2*c.bandwidth + 1, "N", "must be at least 2*bandwidth+1");
      break;
    case ExperimentKind::egg_stabilize:
      require(c.mode == "membership" || c.mode == "probe", "mode", "expected membership or probe");
      require(c.preset == "stabilization-f" || c.preset == "stabilization-h" || c.preset == "strict-containment",
              "preset", "expected stabilization-f, stabilization-h or strict-containment");
      if (c.mode == "probe" && c.preset == "stabilization-h") require(c.k < c.p, "k", "stabilization-h needs k < p");
      for (std::size_t i = 0; i < c.truncations.size(); ++i)
        require(c.truncations[i] >= 1 && (i == 0 || c.truncations[i] > c.truncations[i - 1]), "truncations",
                "must be positive and increasing");
      break;
    default:
      break;
  }
  return c;
}

json ExperimentConfig::to_json() const {
  json j;
  j["experiment"] = szego::to_string(experiment);
  j["domain"] = domain;
  j["p"] = p;
  j["m"] = m;
  j["n"] = n;
  j["k"] = k;
  j["k_vector"] = k_vector;
  j["tau"] = tau;
  j["measure"] = measure;
  j["weight"] = weight;
  j["q"] = complex_list_json(q_values);
  j["punctures"] = complex_list_json(punctures);
  j["map_eps"] = map_eps;
  j["N"] = N;
  j["M"] = M;
  j["bandwidth"] = bandwidth;
  j["points"] = points;
  j["j_max"] = j_max;
  j["l_max"] = l_max;
  j["k_max"] = k_max;
  j["m_max"] = m_max;
  j["n_max"] = n_max;
  j["samples"] = samples;
  j["mode"] = mode;
  j["preset"] = preset;
  j["extra_pole"] = extra_pole;
  j["truncations"] = truncations;
  j["tolerance"] = tolerance;
  j["output_path"] = output_path ? json(*output_path) : json(nullptr);
  j["seed"] = seed;
  return j;
}

Cell number(double x) {
  if (std::isnan(x)) return std::string("nan");
  if (std::isinf(x)) return std::string(x > 0 ? "inf" : "-inf");
  return x;
}

void ResultTable::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::logic_error("ResultTable: row width does not match the header");
  rows.push_back(std::move(row));
}

ResultTable run(const ExperimentConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  ResultTable table;
  switch (config.experiment) {
    case ExperimentKind::reproduce: table = run_reproduce(config); break;
    case ExperimentKind::project_compare: table = run_project_compare(config); break;
    case ExperimentKind::egg_norms: table = run_egg_norms(config); break;
    case ExperimentKind::egg_stabilize: table = run_egg_stabilize(config); break;
    case ExperimentKind::rigidity_scan: table = run_rigidity_scan(config); break;
    case ExperimentKind::oracle_suite: table = run_oracle_suite(config); break;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  table.metadata["config"] = config.to_json();
  table.metadata["library_version"] = kLibraryVersion;
  table.metadata["wall_time_seconds"] = seconds;
  return table;
}

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  if (name == "gnuplot") return OutputFormat::gnuplot;
  throw config_error("format", "expected csv, json or gnuplot");
}

void write_csv(const ResultTable& table, std::ostream& out) {
  auto field = [](const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  };
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << field(table.columns[i]);
  out << "\r\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << field(cell_text(row[i]));
    out << "\r\n";
  }
}

void write_json(const ResultTable& table, std::ostream& out) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    json r = json::array();
    for (const Cell& c : row) std::visit([&](const auto& v) { r.push_back(v); }, c);
    rows.push_back(std::move(r));
  }
  json doc = {{"metadata", table.metadata}, {"columns", table.columns}, {"rows", rows}};
  out << doc.dump(2) << "\n";
}

void write_gnuplot(const ResultTable& table, std::ostream& out) {
  out << "#";
  for (const auto& c : table.columns) out << " " << c;
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      const std::string text = cell_text(row[i]);
      const bool quote = std::holds_alternative<std::string>(row[i]) && text != "inf" && text != "-inf" && text != "nan";
      out << (i ? " " : "") << (quote ? "\"" + text + "\"" : text);
    }
    out << "\n";
  }
}

void emit(const ResultTable& table, OutputFormat format, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open '" + path + "' for writing");
  switch (format) {
    case OutputFormat::csv: write_csv(table, out); break;
    case OutputFormat::json: write_json(table, out); break;
    case OutputFormat::gnuplot: write_gnuplot(table, out); break;
  }
  out.flush();
  if (!out) throw io_error("failed writing '" + path + "'");
  if (format != OutputFormat::json) {
    std::ofstream meta(path + ".meta.json", std::ios::binary);
    if (!meta) throw io_error("cannot open '" + path + ".meta.json' for writing");
    meta << table.metadata.dump(2) << "\n";
    if (!meta) throw io_error("failed writing '" + path + ".meta.json'");
  }
}

ResultTable read_json_table(std::istream& in) {
  const json doc = json::parse(in);
  ResultTable table;
  table.metadata = doc.at("metadata");
  table.columns = doc.at("columns").get<std::vector<std::string>>();
  for (const auto& r : doc.at("rows")) {
    std::vector<Cell> row;
    for (const auto& v : r) {
      if (v.is_string()) row.emplace_back(v.get<std::string>());
      else if (v.is_number_integer()) row.emplace_back(v.get<std::int64_t>());
      else row.emplace_back(v.get<double>());
    }
    table.add_row(std::move(row));
  }
  return table;
}

std::vector<std::pair<int, int>> admissible_hartogs_monomials(int m, int n, int k, int count) {
  auto lowest_b = [&](int a) {
    // smallest b with n a + m b + m k >= 0
    const int num = -(n*a) - m*k;
    return num >= 0 ? (num + m - 1) / m : -((-num) / m);
  };
  std::vector<std::pair<int, int>> out;
  for (int d = 0; static_cast<int>(out.size()) < count; ++d)
    for (int a = 0; a <= d && static_cast<int>(out.size()) < count; ++a) out.emplace_back(a, lowest_b(a) + (d - a));
  return out;
}

std::vector<Point> hartogs_interior_points(int m, int n, int count) {
  std::vector<Point> out;
  const double golden = 0.6180339887498949;
  for (int i = 0; i < count; ++i) {
    const double u = std::fmod((i + 1)*golden, 1.0);
    const double v = std::fmod((i + 1)*golden*golden, 1.0);
    const double r2 = 0.5 + 0.2*u;
    const cd z2 = std::polar(r2, 2*kPi*v);
    const cd z1 = std::polar(0.3*std::pow(r2, double(n) / m), 2*kPi*u + 0.7);
    out.push_back(point(z1, z2));
  }
  return out;
}

}  // namespace szego
