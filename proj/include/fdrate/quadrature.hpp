#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "fdrate/constants.hpp"

namespace fdrate {

/// Nodes and weights of an n-point rule on [-1, 1].
template <class Real = double>
struct QuadratureRule {
  std::vector<Real> nodes;
  std::vector<Real> weights;

  std::size_t order() const { return nodes.size(); }

  template <class F>
  auto integrate(F&& f) const {
    decltype(f(nodes[0]) * weights[0]) sum(0);
    for (std::size_t k = 0; k < nodes.size(); ++k) sum += weights[k] * f(nodes[k]);
    return sum;
  }
};

/// Gauss-Legendre rule of the given order, computed at the precision of
/// Real by Newton iteration on the three-term Legendre recurrence.
template <class Real = double>
QuadratureRule<Real> gauss_legendre(std::size_t n) {
  using std::abs;
  using std::cos;
  if (n == 0) throw std::invalid_argument("gauss_legendre: order must be positive");

  QuadratureRule<Real> rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);

  const Real eps = std::numeric_limits<Real>::epsilon();
  const Real pi = constants::pi<Real>();
  const std::size_t half = (n + 1) / 2;

  for (std::size_t i = 0; i < half; ++i) {
    Real z = cos(pi * (Real(i) + Real(0.75)) / (Real(n) + Real(0.5)));
    Real dp(0);
    for (int iter = 0; iter < 100; ++iter) {
      Real p1(1), p0(0);
      for (std::size_t j = 1; j <= n; ++j) {
        const Real pm = p0;
        p0 = p1;
        p1 = ((Real(2 * j) - 1) * z * p0 - (Real(j) - 1) * pm) / Real(j);
      }
      dp = Real(n) * (z * p1 - p0) / (z * z - 1);
      const Real step = p1 / dp;
      z -= step;
      if (abs(step) <= 4 * eps) break;
    }
    // Derivative at the converged node.
    {
      Real p1(1), p0(0);
      for (std::size_t j = 1; j <= n; ++j) {
        const Real pm = p0;
        p0 = p1;
        p1 = ((Real(2 * j) - 1) * z * p0 - (Real(j) - 1) * pm) / Real(j);
      }
      dp = Real(n) * (z * p1 - p0) / (z * z - 1);
    }
    const Real w = Real(2) / ((1 - z * z) * dp * dp);
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = Real(0);
  return rule;
}

}  // namespace fdrate
