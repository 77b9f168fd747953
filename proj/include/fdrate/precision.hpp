#pragma once

#include <complex>

#include <boost/multiprecision/complex128.hpp>
#include <boost/multiprecision/float128.hpp>

namespace fdrate {

/// 113-bit-mantissa binary float. The rate integrands lose roughly
/// log10(m^2 / omega^2) digits to cancellation, which double cannot absorb.
using quad = boost::multiprecision::float128;

template <class Real>
struct real_traits {
  using complex = std::complex<Real>;
};

template <>
struct real_traits<quad> {
  using complex = boost::multiprecision::complex128;
};

template <class Real>
using complex_t = typename real_traits<Real>::complex;

template <class Real>
double to_double(const Real& x) {
  return static_cast<double>(x);
}

}  // namespace fdrate
