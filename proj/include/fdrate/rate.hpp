#pragma once

// Order-e^2 photon-emission decay rate gamma of a Dirac particle, computed
// two independent ways:
//
//  * decay_rate_closed: angular quadrature of the four closed-form
//    contributions I1..I4, gamma = alpha / (2 pi) * (I1 + I2 + I3 + I4).
//  * decay_rate_trace_oracle: the helicity-averaged rate assembled from
//    explicit gamma-matrix traces, Tr(e.g Lambda(p') e.g Lambda(p)), with the
//    photon phase-space weight omega^2 E' / D restored.
//
// Both default to quad precision: I3 and I4 cancel to one part in
// ~m^2 / omega^2, and so do the matrix traces.

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "fdrate/constants.hpp"
#include "fdrate/dirac_algebra.hpp"
#include "fdrate/kinematics.hpp"
#include "fdrate/precision.hpp"
#include "fdrate/quadrature.hpp"

namespace fdrate {

enum class RadicalMode { exact, approx };

inline const char* to_string(RadicalMode mode) { return mode == RadicalMode::exact ? "exact" : "approx"; }

inline constexpr std::size_t default_quadrature_order = 64;
inline constexpr std::size_t min_quadrature_order = 8;
/// Maximum relative change of gamma between an n- and a 2n-point rule.
inline constexpr double convergence_tolerance = 1e-8;

template <class Real = quad>
Real fine_structure_alpha() {
  return Real(1) / Real(constants::inverse_alpha);
}

/// Linearised recoil energy (|p|^2 + w^2 + m^2 - |p| w cos) / sqrt(|p|^2 + w^2 + m^2).
template <class Real = quad>
Real radical_approx(const EmissionConfig& cfg) {
  using std::sqrt;
  cfg.validate();
  const Real p(cfg.momentum_mev), m(cfg.mass_mev), c(cfg.cos_theta);
  const Real w = photon_energy_mev<Real>(cfg);
  const Real s = p * p + w * w + m * m;
  return (s - p * w * c) / sqrt(s);
}

template <class Real = quad>
Real recoil_radical(const EmissionConfig& cfg, RadicalMode mode) {
  return mode == RadicalMode::exact ? recoil_energy<Real>(cfg) : radical_approx<Real>(cfg);
}

/// Integrand of I_which (which = 1..4) per unit solid angle at cfg.cos_theta,
/// prefactor included. All four share the denominator E' + w - |p| cos.
template <class Real = quad>
Real integrand_I(int which, const EmissionConfig& cfg, RadicalMode mode = RadicalMode::exact) {
  if (which < 1 || which > 4) throw std::invalid_argument("integrand_I: which must be 1..4");
  cfg.validate();
  const Real p(cfg.momentum_mev), m(cfg.mass_mev), c(cfg.cos_theta);
  const Real w = photon_energy_mev<Real>(cfg);
  const Real e_p = on_shell_energy<Real>(p, m);
  const Real e_rec = recoil_radical<Real>(cfg, mode);
  const Real denom = e_rec + w - p * c;
  if (!(denom > 0)) throw std::logic_error("integrand_I: non-positive denominator");

  switch (which) {
    case 1:
      return -(w * p * p / (2 * e_p)) * c * c / denom;
    case 2:
      return (w * w * p / (2 * e_p)) * c / denom;
    case 3:
      return (w / 2) * e_rec / denom;
    default:
      return -(w * m * m / (2 * e_p)) / denom;
  }
}

template <class Real = quad>
struct RateBreakdown {
  Real gamma_mev{0};
  Real i1{0}, i2{0}, i3{0}, i4{0};
  std::size_t quadrature_order = 0;
  RadicalMode mode = RadicalMode::exact;
  /// |gamma(2n) - gamma(n)| / gamma(n).
  Real convergence_rel_change{0};
  bool converged = false;

  double gamma() const { return to_double(gamma_mev); }
};

template <class Real = quad>
struct OracleRate {
  Real gamma_mev{0};
  std::size_t quadrature_order = 0;
  Real convergence_rel_change{0};
  bool converged = false;

  double gamma() const { return to_double(gamma_mev); }
};

namespace detail {

inline void check_order(std::size_t order) {
  if (order < min_quadrature_order)
    throw std::invalid_argument("quadrature order must be at least " + std::to_string(min_quadrature_order));
}

template <class Real>
std::array<Real, 4> closed_contributions(const EmissionPoint& point, RadicalMode mode,
                                         const QuadratureRule<Real>& rule) {
  const Real two_pi = 2 * constants::pi<Real>();
  std::array<Real, 4> sums{};
  for (std::size_t k = 0; k < rule.order(); ++k) {
    const EmissionConfig cfg(point, to_double(rule.nodes[k]));
    for (int j = 0; j < 4; ++j) sums[j] += rule.weights[k] * integrand_I<Real>(j + 1, cfg, mode);
  }
  for (auto& s : sums) s *= two_pi;
  return sums;
}

template <class Real>
Real assemble(const std::array<Real, 4>& contributions) {
  return fine_structure_alpha<Real>() / (2 * constants::pi<Real>()) *
         (contributions[0] + contributions[1] + contributions[2] + contributions[3]);
}

template <class Real>
Real relative_change(const Real& coarse, const Real& fine) {
  using std::abs;
  return abs(fine - coarse) / abs(coarse);
}

}  // namespace detail

/// Closed-form rate. The rule is additionally checked against a rule of
/// twice the order; disagreement beyond convergence_tolerance clears
/// `converged` but still returns the n-point value.
template <class Real = quad>
RateBreakdown<Real> decay_rate_closed(const EmissionPoint& point, RadicalMode mode, const QuadratureRule<Real>& rule) {
  point.validate();
  detail::check_order(rule.order());

  const auto parts = detail::closed_contributions(point, mode, rule);
  RateBreakdown<Real> out;
  out.i1 = parts[0];
  out.i2 = parts[1];
  out.i3 = parts[2];
  out.i4 = parts[3];
  out.gamma_mev = detail::assemble(parts);
  out.quadrature_order = rule.order();
  out.mode = mode;

  const auto fine = detail::assemble(
      detail::closed_contributions(point, mode, gauss_legendre<Real>(2 * rule.order())));
  out.convergence_rel_change = detail::relative_change(out.gamma_mev, fine);
  out.converged = out.convergence_rel_change <= Real(convergence_tolerance);
  return out;
}

template <class Real = quad>
RateBreakdown<Real> decay_rate_closed(const EmissionPoint& point, RadicalMode mode = RadicalMode::exact,
                                      std::size_t order = default_quadrature_order) {
  return decay_rate_closed<Real>(point, mode, gauss_legendre<Real>(order));
}

/// (1/2) sum over transverse polarizations of Tr(e.g Lambda(p') e.g Lambda(p)).
/// The trace is real; the imaginary part is rounding noise and is dropped.
template <class Real = quad>
Real polarization_summed_half_trace(const EmissionConfig& cfg,
                                    const GammaBasis<Real>& basis = GammaBasis<Real>::dirac()) {
  using std::real;
  cfg.validate();
  const Real m(cfg.mass_mev);
  const auto lambda_p = energy_projector(particle_momentum<Real>(cfg), m, basis);
  const auto lambda_rec = energy_projector(recoil_momentum<Real>(cfg), m, basis);
  const auto [e1, e2] = polarization_basis<Real>(photon_momentum<Real>(cfg).spatial);

  Real sum(0);
  for (const auto& e : {e1, e2}) {
    const auto e_slash = slash(FourVector<Real>{e, Real(0)}, basis);
    sum += real(trace_product<Real>({e_slash, lambda_rec, e_slash, lambda_p}));
  }
  return sum / 2;
}

namespace detail {

template <class Real>
Real oracle_sum(const EmissionPoint& point, const QuadratureRule<Real>& rule, const GammaBasis<Real>& basis) {
  const Real m(point.mass_mev), p(point.momentum_mev);
  const Real w = constants::ev_to_mev(Real(point.omega_ev));
  const Real e_p = on_shell_energy<Real>(p, m);

  Real sum(0);
  for (std::size_t k = 0; k < rule.order(); ++k) {
    const EmissionConfig cfg(point, to_double(rule.nodes[k]));
    const Real x(cfg.cos_theta);
    const Real e_rec = recoil_momentum<Real>(cfg).time_component;
    const Real denom = e_rec + w - p * x;
    if (!(denom > 0)) throw std::logic_error("decay_rate_trace_oracle: non-positive denominator");
    // Phase-space weight from integrating the energy delta over |k'|.
    const Real jacobian = w * w * e_rec / denom;
    const Real t = -polarization_summed_half_trace<Real>(cfg, basis);
    sum += rule.weights[k] * jacobian * t / (e_p * e_rec * 2 * w);
  }
  const Real pi = constants::pi<Real>();
  const Real e2 = 4 * pi * fine_structure_alpha<Real>();
  return e2 * m * m / (8 * pi * pi) * 2 * pi * sum;
}

}  // namespace detail

template <class Real = quad>
OracleRate<Real> decay_rate_trace_oracle(const EmissionPoint& point, const QuadratureRule<Real>& rule,
                                         const GammaBasis<Real>& basis = GammaBasis<Real>::dirac()) {
  point.validate();
  detail::check_order(rule.order());

  OracleRate<Real> out;
  out.gamma_mev = detail::oracle_sum(point, rule, basis);
  out.quadrature_order = rule.order();
  const auto fine = detail::oracle_sum(point, gauss_legendre<Real>(2 * rule.order()), basis);
  out.convergence_rel_change = detail::relative_change(out.gamma_mev, fine);
  out.converged = out.convergence_rel_change <= Real(convergence_tolerance);
  return out;
}

template <class Real = quad>
OracleRate<Real> decay_rate_trace_oracle(const EmissionPoint& point, std::size_t order = default_quadrature_order) {
  return decay_rate_trace_oracle<Real>(point, gauss_legendre<Real>(order));
}

}  // namespace fdrate
