// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>

#include "szego/domains.hpp"
#include "szego/eggs.hpp"
#include "szego/experiment.hpp"
#include "szego/kernels.hpp"
#include "szego/projections.hpp"
#include "szego/rigidity.hpp"

using namespace szego;
namespace mf = szego::multiplier_family;

namespace {

constexpr double kPi = EIGEN_PI;
constexpr double kOffCenterDefect = 0.25464790894703304;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

double rel(cd a, cd b) { return std::abs(a - b) / std::abs(b); }

Outcome punctured_disk_reproduction() {
  auto F = [](cd z) { return ipow(z, -2) + 3.0*z + ipow(z, 5); };
  auto s = GridSamplesd::sample_circle(256, [&](double t) { return F(std::polar(1.0, t)); });
  const cd z = std::polar(0.6, kPi / 5);
  const double err = rel(reproduce(punctured_disk(2), s, point(z)), F(z));
  return {err <= 1e-12, fmt("rel error %.2e", err)};
}

Outcome hartogs_reproduction() {
  double worst = 0;
  for (auto [m, n] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{3, 2}, std::pair{5, 3}})
    for (int k = 0; k <= 2; ++k) {
      nlohmann::json cfg = {{"experiment", "reproduce"}, {"domain", "hartogs"}, {"m", m}, {"n", n}, {"k", k},
                            {"N", 128}, {"points", 5}};
      worst = std::max(worst, run(ExperimentConfig::from_json(cfg)).metadata["max_rel_error"].get<double>());
    }
  return {worst <= 1e-10, fmt("max rel error %.2e over 12 cases x 10 monomials x 5 points", worst)};
}

Outcome partial_fraction_oracle_suite() {
  const auto t = run(ExperimentConfig::from_json(
      {{"experiment", "oracle-suite"}, {"m_max", 6}, {"n_max", 6}, {"samples", 100}, {"seed", 0}}));
  double worst = 0;
  for (const auto& row : t.rows) worst = std::max(worst, std::get<double>(row[4]));
  return {t.metadata["pass"].get<bool>() && worst <= 1e-10, fmt("max rel error %.2e over 3600 samples", worst)};
}

Outcome kernel_consistency() {
  std::mt19937_64 rng(0);
  std::uniform_real_distribution<double> u(0, 1);
  auto on_circle = [&] { return std::polar(1.0, 2*kPi*u(rng)); };
  double worst_h = 0, worst_p = 0;
  for (int i = 0; i < 1000; ++i) {
    const int k = i % 4;
    const cd z2 = std::polar(0.1 + 0.85*u(rng), 2*kPi*u(rng));
    const cd z1 = z2*std::polar(0.95*u(rng), 2*kPi*u(rng));
    const cd w1 = on_circle(), w2 = on_circle();
    const cd a = z1*std::conj(w1), b = z2*std::conj(w2);
    const cd direct = ipow(b, -(k - 1)) / (4*kPi*kPi*(b - a)*(1.0 - b));
    worst_h = std::max(worst_h, rel(szego::szego(Hartogs{1, 1, k}, point(z1, z2), point(w1, w2)), direct));
  }
  const KernelEvaluator disk = szego_evaluator(Disk{});
  auto phi = [](const Point& x) { return x(0); };
  for (int i = 0; i < 1000; ++i) {
    const int k = i % 5;
    const cd z = std::polar(0.05 + 0.9*u(rng), 2*kPi*u(rng)), w = on_circle();
    worst_p = std::max(worst_p, rel(generic_ck_phi(disk, phi, k, point(z), point(w)),
                                    szego::szego(punctured_disk(k), point(z), point(w))));
  }
  return {worst_h <= 1e-13 && worst_p <= 1e-13, fmt("Hartogs %.2e, punctured disk %.2e", worst_h, worst_p)};
}

Outcome multiplier_vs_kernel() {
  double worst = 0;
  bool idempotent = true;
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      if (std::gcd(m, n) != 1) continue;
      for (int k = 0; k <= 2; ++k) {
        const auto t = run(ExperimentConfig::from_json({{"experiment", "project-compare"}, {"m", m}, {"n", n},
                                                        {"k", k}, {"bandwidth", 16}, {"seed", 0}, {"points", 10}}));
        worst = std::max(worst, t.metadata["max_abs_diff"].get<double>());
        idempotent = idempotent && t.metadata["idempotent_exact"].get<bool>();
      }
    }
  return {idempotent && worst <= 1e-10,
          fmt("max abs diff %.2e, idempotence ", worst) + (idempotent ? "exact" : "violated")};
}

Outcome egg_norms() {
  double worst = 0;
  bool ordering = true;
  for (int p = 1; p <= 3; ++p) {
    const auto t = run(ExperimentConfig::from_json({{"experiment", "egg-norms"}, {"p", p}, {"j_max", 6}, {"l_max", 6}}));
    worst = std::max(worst, t.metadata["max_rel_error"].get<double>());
    ordering = ordering && t.metadata["beta_ordering_holds"].get<bool>();
  }
  return {ordering && worst <= 1e-8, fmt("max rel error %.2e, beta ordering ", worst) + (ordering ? "holds" : "fails")};
}

Outcome stabilization() {
  int correct = 0, total = 0;
  for (int p = 1; p <= 4; ++p)
    for (int k = 0; k <= 5; ++k) {
      const auto w = membership_test(p, EggOmegaP{}, k);
      const auto s = membership_test(p, EggSigma{}, k);
      correct += (w.member == (k < p) && w.probe_agrees) + (s.member == (k < 1) && s.probe_agrees);
      total += 2;
    }
  int thresholds_ok = 0, thresholds = 0;
  for (int p = 1; p <= 4; ++p)
    for (int i = 0; i <= 3; ++i) {
      const int expected = int(std::ceil((p*(3 - i) + i) / 3.0 - 1e-12)) - 1;  // exact in thirds
      thresholds_ok += stabilization_threshold(p, i / 3.0) == expected;
      ++thresholds;
    }
  char buf[160];
  std::snprintf(buf, sizeof buf, "membership %d/%d, thresholds %d/%d", correct, total, thresholds_ok, thresholds);
  return {correct == total && thresholds_ok == thresholds, buf};
}

Outcome divergence_diagnostics() {
  std::vector<int> dyadic;
  for (int e = 4; e <= 14; ++e) dyadic.push_back(1 << e);
  const auto harmonic = divergence_probe(preset::StabilizationH{2, 1, 1}, EggOmegaP{}, dyadic);
  const auto h = divergence_probe(preset::StabilizationH{2, 1}, EggOmegaP{}, dyadic);
  const auto f = divergence_probe(preset::StabilizationF{2, 1}, EggOmegaP{}, dyadic);
  const bool ok = std::abs(harmonic.tail_slope + 1.0) <= kSlopeBand && harmonic.classification == SeriesClass::harmonic &&
                  h.classification == SeriesClass::convergent && f.classification == SeriesClass::convergent;
  return {ok, fmt("z2^-1 h slope %.4f; h slope %.4f", harmonic.tail_slope, h.tail_slope) +
                  fmt("; f slope %.4f", f.tail_slope)};
}

Outcome rigidity() {
  const ConformalMap id = ConformalMap::identity();
  const auto z = default_interior_samples(id);
  double centered = 0;
  for (int k = 1; k <= 4; ++k) centered = std::max(centered, ks_defect({cd(0)}, {k}, id, 256, z).sup_defect);
  const double off = ks_defect({cd(0.3)}, {1}, id, 256, z).sup_defect;
  const bool ok = centered <= 1e-12 && off > 0 && std::abs(off - kOffCenterDefect) <= 0.1*kOffCenterDefect;
  return {ok, fmt("centered %.2e, off-center %.6f", centered, off) + fmt(" (fixture %.6f)", kOffCenterDefect)};
}

Outcome transformation_law() {
  const auto t = run(ExperimentConfig::from_json({{"experiment", "reproduce"}, {"domain", "simply-connected"},
                                                  {"map_eps", 0.3}, {"N", 512}, {"points", 3}}));
  const double err = t.metadata["max_rel_error"].get<double>();
  return {err <= 1e-8, fmt("max rel error %.2e over 4 functions x 3 points", err)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> check;
    double time_limit;  // seconds, 0 for none
  };
  const std::vector<Criterion> criteria = {
      {"punctured-disk reproducing identity", punctured_disk_reproduction, 1.0},
      {"power-generalized Hartogs reproducing identity", hartogs_reproduction, 10.0},
      {"partial-fraction oracle", partial_fraction_oracle_suite, 5.0},
      {"kernel consistency", kernel_consistency, 0.0},
      {"multiplier vs kernel projection", multiplier_vs_kernel, 0.0},
      {"egg norms", egg_norms, 0.0},
      {"stabilization", stabilization, 0.0},
      {"divergence diagnostics", divergence_diagnostics, 5.0},
      {"rigidity", rigidity, 0.0},
      {"transformation law", transformation_law, 0.0},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criteria[i].time_limit > 0 && secs >= criteria[i].time_limit) {
      o.pass = false;
      o.detail += " [over time limit]";
    }
    failures += !o.pass;
    std::printf("%s criterion %zu: %s: %s (%.3f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                o.detail.c_str(), secs);
  }
  std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
  return failures ? 1 : 0;
}
