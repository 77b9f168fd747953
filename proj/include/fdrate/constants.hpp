#pragma once

#include <boost/math/constants/constants.hpp>

namespace fdrate::constants {

// CODATA 2018.
inline constexpr double inverse_alpha = 137.035999084;
inline constexpr double hbar_ev_s = 6.582119569e-16;
inline constexpr double hbar_mev_s = 6.582119569e-22;

inline constexpr double ev_per_mev = 1.0e6;

template <class Real>
Real pi() {
  return boost::math::constants::pi<Real>();
}

template <class Real>
Real ev_to_mev(const Real& ev) {
  return ev / Real(ev_per_mev);
}

}  // namespace fdrate::constants
