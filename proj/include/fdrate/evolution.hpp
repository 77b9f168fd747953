#pragma once

// Lowest-order evolution of the helicity-averaged diagonal density matrix,
// rho_diag(t) = exp(-2 gamma t / hbar), rho_diag(0) = 1.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "fdrate/constants.hpp"

namespace fdrate {

/// Bridge between natural units (hbar = c = 1, energies in MeV) and seconds.
struct UnitBridge {
  double hbar_ev_s = constants::hbar_ev_s;

  double hbar_mev_s() const { return hbar_ev_s / constants::ev_per_mev; }

  /// Decay constant of rho_diag in 1/s: 2 gamma / hbar.
  double rate_per_second(double gamma_mev) const { return 2.0 * gamma_mev / hbar_mev_s(); }

  /// gamma itself expressed in 1/s.
  double gamma_per_second(double gamma_mev) const { return gamma_mev / hbar_mev_s(); }

  /// Time at which rho_diag has fallen to 1/e.
  double e_folding_time_s(double gamma_mev) const { return hbar_mev_s() / (2.0 * gamma_mev); }
};

/// exp(-2 gamma t / hbar). Underflows to 0 once the exponent passes ~745.
inline double rho_diag(double gamma_mev, double t_s, const UnitBridge& units = {}) {
  if (!(t_s >= 0)) throw std::invalid_argument("rho_diag: time must be non-negative");
  if (!(gamma_mev >= 0)) throw std::invalid_argument("rho_diag: gamma must be non-negative");
  return std::exp(-units.rate_per_second(gamma_mev) * t_s);
}

/// Partial sum of the exponential series, sum_{n < n_terms} (-2 gamma t / hbar)^n / n!.
inline double truncated_series(double gamma_mev, double t_s, std::size_t n_terms, const UnitBridge& units = {}) {
  if (n_terms < 1) throw std::invalid_argument("truncated_series: need at least one term");
  const double x = -units.rate_per_second(gamma_mev) * t_s;
  double term = 1.0;
  double sum = 1.0;
  for (std::size_t n = 1; n < n_terms; ++n) {
    term *= x / static_cast<double>(n);
    sum += term;
  }
  return sum;
}

enum class TimeSpacing { linear, log };

struct DecayCurve {
  double gamma_mev = 0.0;
  std::vector<double> times_s;
  std::vector<double> rho_diag;
};

inline constexpr std::size_t default_curve_samples = 200;

/// Samples rho_diag on [0, t_max] (linear) or [1e-6 t_max, t_max] (log).
inline DecayCurve build_curve(double gamma_mev, double t_max_s, std::size_t samples = default_curve_samples,
                              TimeSpacing spacing = TimeSpacing::linear, const UnitBridge& units = {}) {
  if (samples < 2) throw std::invalid_argument("build_curve: need at least two samples");
  if (!(t_max_s > 0)) throw std::invalid_argument("build_curve: t_max must be positive");

  DecayCurve curve;
  curve.gamma_mev = gamma_mev;
  curve.times_s.resize(samples);
  curve.rho_diag.resize(samples);

  const double last = static_cast<double>(samples - 1);
  for (std::size_t i = 0; i < samples; ++i) {
    const double f = static_cast<double>(i) / last;
    double t = 0.0;
    if (spacing == TimeSpacing::linear) {
      t = t_max_s * f;
    } else {
      t = t_max_s * std::pow(10.0, -6.0 * (1.0 - f));
    }
    if (i + 1 == samples) t = t_max_s;
    curve.times_s[i] = t;
    curve.rho_diag[i] = rho_diag(gamma_mev, t, units);
  }
  return curve;
}

}  // namespace fdrate
