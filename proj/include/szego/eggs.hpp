#pragma once

// Hardy-space norms and filtration diagnostics on egg domains
// |z1|^{2p} + |z2|^{2p} < 1 with the hyperplane z2 = 0 deleted.

#include <string>
#include <variant>
#include <vector>

#include "szego/domains.hpp"

namespace szego {

/// Euler beta via log-gamma. Throws domain_error for non-positive arguments.
double beta(double x, double y);

/// Exponents of z1^j z2^l; l may be negative.
struct MonomialIndex {
  int j = 0;
  int l = 0;
};

enum class Endpoint { none, s_zero, s_one };

/// Squared L2 norm of a boundary monomial, or +inf with the endpoint at which
/// the integral diverges.
struct MonomialNorm {
  double value = 0.0;
  Endpoint divergent_at = Endpoint::none;

  bool finite() const { return divergent_at == Endpoint::none; }
};

/// Closed form 4 pi^2 beta(j/p + 1, l/p + 1) under omega_p; quadrature of
/// s^{j/p} (1-s)^{l/p} times the density (times 4 pi^2) for sigma and nu_tau.
MonomialNorm monomial_norm(int p, const MeasureTag& measure, MonomialIndex idx);

/// Always by quadrature, for any egg measure (omega_p included).
MonomialNorm monomial_norm_quadrature(int p, const MeasureTag& measure, MonomialIndex idx);

/// 4 pi^2 beta((j+1)/p, (l+1)/p): the weight in the series characterization of
/// the sigma Hardy space, equivalent to the exact sigma norm up to constants.
double sigma_beta_weight(int p, MonomialIndex idx);

struct MembershipResult {
  bool member = false;
  /// Exponent e of (1-s)^e in |z2^{-k}|^2 times the density; finite iff e > -1.
  double exponent = 0.0;
  /// Whether the truncated-integral probe reached the same verdict.
  bool probe_agrees = false;
};

/// Whether z2^{-k} restricted to the boundary lies in L2 of the measure.
MembershipResult membership_test(int p, const MeasureTag& measure, int k);

namespace preset {
/// a_{j,l} = beta(m+1, n+1)^{-1/2} / (mn) for j = pm, l = pn with m, n >= 1.
struct StrictContainment {
  int p = 1;
};
/// f = sum_m (m+1)^{-k/2p} (z1)^{mp}.
struct StabilizationF {
  int p = 1;
  int k = 1;
};
/// h = z2^{-(k-1)} f, further divided by z2^{extra_pole}.
struct StabilizationH {
  int p = 1;
  int k = 1;
  int extra_pole = 0;
};
}  // namespace preset

using SeriesPreset = std::variant<preset::StrictContainment, preset::StabilizationF, preset::StabilizationH>;

std::string preset_name(const SeriesPreset& preset);

enum class SeriesClass { convergent, divergent, harmonic, inconclusive };

std::string to_string(SeriesClass c);

struct ProbeRow {
  int truncation = 0;
  double partial_sum = 0.0;
  /// Squared norm of the last block of terms (shell sum for double series).
  double term = 0.0;
};

struct ProbeTable {
  std::vector<ProbeRow> rows;
  /// Least-squares slope of log(term) against log(truncation).
  double tail_slope = 0.0;
  /// Mean ratio of successive partial-sum increments over the dyadic rows.
  double increment_ratio = 0.0;
  SeriesClass classification = SeriesClass::inconclusive;
};

/// Half-width of the slope band around -1 treated as harmonic-type.
inline constexpr double kSlopeBand = 0.05;

/// Partial squared norms of a preset series under an egg measure at each
/// truncation (number of terms, or max(m,n) for the double series).
ProbeTable divergence_probe(const SeriesPreset& preset, const MeasureTag& measure, const std::vector<int>& truncations);

/// Classification rule applied to a fitted slope and increment ratio.
SeriesClass classify_tail(double slope, double increment_ratio);

}  // namespace szego
