#pragma once

// Emission kinematics for e -> e + photon with the particle moving along +z
// and the photon in the xz-plane at polar angle theta from +z. The recoil
// momentum is p' = p - k'. The photon energy is an external parameter.

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "fdrate/constants.hpp"
#include "fdrate/dirac_algebra.hpp"

namespace fdrate {

/// Parameter point of the rate calculation without the photon angle.
struct EmissionPoint {
  double mass_mev = 0.51;
  double momentum_mev = 0.0;
  double omega_ev = 12.8;

  void validate() const {
    if (!(mass_mev > 0)) throw std::invalid_argument("mass_mev must be positive");
    if (!(momentum_mev >= 0)) throw std::invalid_argument("momentum_mev must be non-negative");
    if (!(omega_ev > 0)) throw std::invalid_argument("omega_ev must be positive");
  }
};

struct EmissionConfig {
  double mass_mev = 0.51;
  double momentum_mev = 0.0;
  double omega_ev = 12.8;
  double cos_theta = 0.0;

  EmissionConfig() = default;
  EmissionConfig(double mass, double momentum, double omega, double cos_t)
      : mass_mev(mass), momentum_mev(momentum), omega_ev(omega), cos_theta(cos_t) {}
  EmissionConfig(const EmissionPoint& point, double cos_t)
      : mass_mev(point.mass_mev), momentum_mev(point.momentum_mev), omega_ev(point.omega_ev), cos_theta(cos_t) {}

  EmissionPoint point() const { return {mass_mev, momentum_mev, omega_ev}; }

  void validate() const {
    point().validate();
    if (!(std::abs(cos_theta) <= 1)) throw std::invalid_argument("cos_theta must lie in [-1, 1]");
  }
};

/// sqrt(|p|^2 + m^2).
template <class Real = double>
Real on_shell_energy(const Real& momentum_mev, const Real& mass_mev) {
  using std::sqrt;
  if (!(momentum_mev >= 0)) throw std::invalid_argument("on_shell_energy: negative momentum magnitude");
  if (!(mass_mev > 0)) throw std::invalid_argument("on_shell_energy: mass must be positive");
  return sqrt(momentum_mev * momentum_mev + mass_mev * mass_mev);
}

/// Photon energy in MeV.
template <class Real = double>
Real photon_energy_mev(const EmissionConfig& cfg) {
  return constants::ev_to_mev(Real(cfg.omega_ev));
}

template <class Real = double>
Real sin_theta(const EmissionConfig& cfg) {
  using std::sqrt;
  const Real c(cfg.cos_theta);
  return sqrt((Real(1) - c) * (Real(1) + c));
}

template <class Real = double>
FourVector<Real> particle_momentum(const EmissionConfig& cfg) {
  return on_shell<Real>({Real(0), Real(0), Real(cfg.momentum_mev)}, Real(cfg.mass_mev));
}

/// k' = omega (sin theta, 0, cos theta), lightlike.
template <class Real = double>
FourVector<Real> photon_momentum(const EmissionConfig& cfg) {
  const Real w = photon_energy_mev<Real>(cfg);
  return {{w * sin_theta<Real>(cfg), Real(0), w * Real(cfg.cos_theta)}, w};
}

/// On-shell p' = p - k'.
template <class Real = double>
FourVector<Real> recoil_momentum(const EmissionConfig& cfg) {
  const auto p = particle_momentum<Real>(cfg);
  const auto k = photon_momentum<Real>(cfg);
  const Vec3<Real> q{p.spatial[0] - k.spatial[0], p.spatial[1] - k.spatial[1], p.spatial[2] - k.spatial[2]};
  return on_shell<Real>(q, Real(cfg.mass_mev));
}

/// E_{p'} = sqrt(|p|^2 + omega^2 + m^2 - 2 |p| omega cos theta).
template <class Real = double>
Real recoil_energy(const EmissionConfig& cfg) {
  using std::sqrt;
  cfg.validate();
  const Real p(cfg.momentum_mev), m(cfg.mass_mev), c(cfg.cos_theta);
  const Real w = photon_energy_mev<Real>(cfg);
  return sqrt(p * p + w * w + m * m - Real(2) * p * w * c);
}

/// Transverse polarization vectors (e1, e2) for photon direction k, with
/// (e1, e2, k) right-handed. For k = +z this is (x, y). Nonzero inputs of
/// any length are normalised first.
template <class Real = double>
std::pair<Vec3<Real>, Vec3<Real>> polarization_basis(const Vec3<Real>& k_direction) {
  using std::sqrt;
  const Real len = norm3(k_direction);
  if (!(len > 0)) throw std::invalid_argument("polarization_basis: zero direction");
  const Vec3<Real> k{k_direction[0] / len, k_direction[1] / len, k_direction[2] / len};

  // Spherical unit vectors theta-hat and phi-hat.
  const Real rho = sqrt(k[0] * k[0] + k[1] * k[1]);
  Real cos_phi(1), sin_phi(0);
  if (rho > 0) {
    cos_phi = k[0] / rho;
    sin_phi = k[1] / rho;
  }
  const Vec3<Real> e1{k[2] * cos_phi, k[2] * sin_phi, -rho};
  const Vec3<Real> e2{-sin_phi, cos_phi, Real(0)};
  return {e1, e2};
}

}  // namespace fdrate
