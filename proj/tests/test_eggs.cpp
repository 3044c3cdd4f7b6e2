#include <doctest.h>

#include "szego/domains.hpp"
#include "szego/eggs.hpp"
#include "szego/errors.hpp"
#include "szego/quadrature.hpp"

using namespace szego;

namespace {
constexpr double kPi = EIGEN_PI;
}

TEST_CASE("beta function") {
  CHECK(beta(1, 1) == doctest::Approx(1).epsilon(1e-14));
  CHECK(beta(2, 1) == doctest::Approx(0.5).epsilon(1e-14));
  for (int m = 0; m < 40; ++m) CHECK(beta(m + 1, 1) == doctest::Approx(1.0 / (m + 1)).epsilon(1e-12));
  CHECK(beta(0.5, 0.5) == doctest::Approx(kPi).epsilon(1e-13));
  CHECK(beta(100, 100) == doctest::Approx(std::exp(2*std::lgamma(100.0) - std::lgamma(200.0))).epsilon(1e-12));
  CHECK_THROWS_AS(beta(0, 1), szego::domain_error);
  CHECK_THROWS_AS(beta(1, -2), szego::domain_error);
}

TEST_CASE("monomial norm examples") {
  CHECK(monomial_norm(1, EggOmegaP{}, {0, 0}).value == doctest::Approx(4*kPi*kPi).epsilon(1e-14));
  CHECK(monomial_norm(2, EggOmegaP{}, {0, -1}).value == doctest::Approx(8*kPi*kPi).epsilon(1e-14));
  const auto d = monomial_norm(1, EggSigma{}, {0, -1});
  CHECK_FALSE(d.finite());
  CHECK(std::isinf(d.value));
  CHECK(d.divergent_at == Endpoint::s_one);
  CHECK(monomial_norm(2, EggOmegaP{}, {0, -2}).divergent_at == Endpoint::s_one);
  CHECK_THROWS_AS(monomial_norm(2, EggOmegaP{}, {-1, 0}), invalid_input_error);
}

TEST_CASE("omega_p quadrature matches the beta closed form") {
  for (int p = 1; p <= 3; ++p)
    for (int j = 0; j <= 6; ++j)
      for (int l = 0; l <= 6; ++l) {
        const double closed = monomial_norm(p, EggOmegaP{}, {j, l}).value;
        const double quad = monomial_norm_quadrature(p, EggOmegaP{}, {j, l}).value;
        CHECK(std::abs(quad - closed) <= 1e-8*closed);
        CHECK(beta(double(j) / p + 1, double(l) / p + 1) <= beta(double(j + 1) / p, double(l + 1) / p));
      }
}

TEST_CASE("sigma norms on the sphere") {
  // p = 1: sigma density is 1/2, so the sigma norm is half the omega norm.
  for (int j = 0; j <= 3; ++j)
    for (int l = 0; l <= 3; ++l)
      CHECK(monomial_norm(1, EggSigma{}, {j, l}).value ==
            doctest::Approx(0.5*monomial_norm(1, EggOmegaP{}, {j, l}).value).epsilon(1e-10));
}

TEST_CASE("sigma norms are comparable to the beta weight") {
  for (int p = 2; p <= 3; ++p)
    for (int j = 0; j <= 6; ++j)
      for (int l = 0; l <= 6; ++l) {
        const double ratio = monomial_norm(p, EggSigma{}, {j, l}).value / sigma_beta_weight(p, {j, l});
        CHECK(ratio > 0.0);
        CHECK(ratio < 1.0);
      }
}

TEST_CASE("membership") {
  CHECK(membership_test(3, EggOmegaP{}, 2).member);
  CHECK_FALSE(membership_test(3, EggOmegaP{}, 3).member);
  CHECK_FALSE(membership_test(2, EggSigma{}, 1).member);
  CHECK(membership_test(2, EggSigma{}, 0).member);
  for (int p = 1; p <= 4; ++p)
    for (int k = 0; k <= 5; ++k) {
      const auto w = membership_test(p, EggOmegaP{}, k);
      CHECK(w.member == (k < p));
      CHECK(w.probe_agrees);
      const auto s = membership_test(p, EggSigma{}, k);
      CHECK(s.member == (k < 1));
      CHECK(s.probe_agrees);
    }
  CHECK_THROWS_AS(membership_test(2, EggOmegaP{}, -1), invalid_input_error);
}

TEST_CASE("membership agrees with the stabilization threshold") {
  for (int p = 1; p <= 4; ++p)
    for (double tau : {0.0, 1.0 / 3, 2.0 / 3, 1.0})
      for (int k = 0; k <= 5; ++k) {
        const auto r = membership_test(p, EggNuTau{tau, NuWeight::one}, k);
        CHECK(r.member == (k <= stabilization_threshold(p, tau)));
        CHECK(r.probe_agrees);
      }
}

TEST_CASE("divergence probe") {
  std::vector<int> dyadic;
  for (int e = 4; e <= 14; ++e) dyadic.push_back(1 << e);

  SUBCASE("f converges with terms like m^{-3/2}") {
    const auto t = divergence_probe(preset::StabilizationF{2, 1}, EggOmegaP{}, dyadic);
    CHECK(t.classification == SeriesClass::convergent);
    CHECK(t.tail_slope == doctest::Approx(-1.5).epsilon(1e-3));
    // closed form: sum (m+1)^{-1/2} * 4 pi^2 beta(m+1, 1)
    double s = 0;
    for (int m = 0; m < 16; ++m) s += std::pow(m + 1.0, -0.5)*4*kPi*kPi / (m + 1);
    CHECK(t.rows.front().partial_sum == doctest::Approx(s).epsilon(1e-12));
  }
  SUBCASE("h converges, z2^{-1} h is harmonic") {
    CHECK(divergence_probe(preset::StabilizationH{2, 1}, EggOmegaP{}, dyadic).classification == SeriesClass::convergent);
    const auto t = divergence_probe(preset::StabilizationH{2, 1, 1}, EggOmegaP{}, dyadic);
    CHECK(t.classification == SeriesClass::harmonic);
    CHECK(std::abs(t.tail_slope + 1.0) <= kSlopeBand);
    CHECK(t.rows.back().partial_sum > t.rows.front().partial_sum);
  }
  SUBCASE("strict containment series at p = 1") {
    const std::vector<int> small{4, 8, 16, 32, 64};
    CHECK(divergence_probe(preset::StrictContainment{1}, EggOmegaP{}, small).classification == SeriesClass::convergent);
    CHECK(divergence_probe(preset::StrictContainment{1}, EggSigma{}, small).classification == SeriesClass::convergent);
  }
  SUBCASE("infinite terms are reported, not thrown") {
    const auto t = divergence_probe(preset::StabilizationH{2, 1, 1}, EggSigma{}, {4, 8});
    CHECK(t.classification == SeriesClass::divergent);
    CHECK(std::isinf(t.rows.back().partial_sum));
  }
  CHECK_THROWS_AS(divergence_probe(preset::StabilizationH{2, 2}, EggOmegaP{}, dyadic), invalid_input_error);
  CHECK_THROWS_AS(divergence_probe(preset::StabilizationF{2, 1}, EggOmegaP{}, {8, 4}), invalid_input_error);
}

TEST_CASE("tail classification bands") {
  CHECK(classify_tail(-1.2, 0.5) == SeriesClass::convergent);
  CHECK(classify_tail(-0.5, 1.5) == SeriesClass::divergent);
  CHECK(classify_tail(-1.0, 1.0) == SeriesClass::harmonic);
  CHECK(classify_tail(-1.02, 0.7) == SeriesClass::inconclusive);
  CHECK(classify_tail(std::nan(""), 1.0) == SeriesClass::inconclusive);
}

TEST_CASE("double exponential quadrature") {
  const auto r = integrate_unit_interval([](double s, double oms) { return 1.0 / std::sqrt(s*oms); });
  CHECK(r.value == doctest::Approx(kPi).epsilon(1e-12));
  const auto q = integrate_interval([](double x) { return std::exp(x); }, 0.0, 2.0, 0.0, 1e-13);
  CHECK(q.value == doctest::Approx(std::exp(2.0) - 1).epsilon(1e-12));
}
