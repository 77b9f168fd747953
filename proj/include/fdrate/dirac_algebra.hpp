#pragma once

// Four-vectors and Dirac matrices in the Pauli metric, A = (A, iA0).
//
// Contraction of two four-vectors is a.b = a.b(spatial) - a0 b0, so an
// on-shell particle has p.p = -m^2 and a photon k.k = 0. The gamma matrices
// are Hermitian and satisfy {g_mu, g_nu} = 2 delta_mu_nu.

#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>

#include "fdrate/precision.hpp"

namespace fdrate {

template <class Real>
using Vec3 = std::array<Real, 3>;

template <class Real>
Real dot3(const Vec3<Real>& a, const Vec3<Real>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <class Real>
Real norm3(const Vec3<Real>& a) {
  using std::sqrt;
  return sqrt(dot3(a, a));
}

template <class Real>
Vec3<Real> cross3(const Vec3<Real>& a, const Vec3<Real>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

/// Four-vector stored as (spatial part, time component A0). The imaginary
/// fourth component A4 = i*A0 is never stored explicitly.
template <class Real>
struct FourVector {
  Vec3<Real> spatial{};
  Real time_component{0};

  /// Pauli-metric contraction: spatial dot product minus A0*B0.
  Real dot(const FourVector& other) const {
    return dot3(spatial, other.spatial) - time_component * other.time_component;
  }

  Real square() const { return dot(*this); }

  friend FourVector operator+(const FourVector& a, const FourVector& b) {
    return {{a.spatial[0] + b.spatial[0], a.spatial[1] + b.spatial[1], a.spatial[2] + b.spatial[2]},
            a.time_component + b.time_component};
  }
  friend FourVector operator-(const FourVector& a, const FourVector& b) {
    return {{a.spatial[0] - b.spatial[0], a.spatial[1] - b.spatial[1], a.spatial[2] - b.spatial[2]},
            a.time_component - b.time_component};
  }
  friend FourVector operator*(const Real& s, const FourVector& a) {
    return {{s * a.spatial[0], s * a.spatial[1], s * a.spatial[2]}, s * a.time_component};
  }
};

/// Particle four-vector with energy fixed by the mass shell.
template <class Real>
FourVector<Real> on_shell(const Vec3<Real>& momentum, const Real& mass) {
  using std::sqrt;
  return {momentum, sqrt(dot3(momentum, momentum) + mass * mass)};
}

/// Row-major 4x4 complex matrix.
template <class Real>
class DiracMatrix {
 public:
  using complex = complex_t<Real>;

  DiracMatrix() { entries_.fill(complex(0)); }

  static DiracMatrix identity() {
    DiracMatrix m;
    for (std::size_t i = 0; i < 4; ++i) m(i, i) = complex(1);
    return m;
  }

  static DiracMatrix zero() { return DiracMatrix(); }

  complex& operator()(std::size_t row, std::size_t col) { return entries_[4 * row + col]; }
  const complex& operator()(std::size_t row, std::size_t col) const { return entries_[4 * row + col]; }

  DiracMatrix& operator+=(const DiracMatrix& o) {
    for (std::size_t i = 0; i < 16; ++i) entries_[i] += o.entries_[i];
    return *this;
  }
  DiracMatrix& operator-=(const DiracMatrix& o) {
    for (std::size_t i = 0; i < 16; ++i) entries_[i] -= o.entries_[i];
    return *this;
  }
  DiracMatrix& operator*=(const complex& s) {
    for (auto& e : entries_) e *= s;
    return *this;
  }

  friend DiracMatrix operator+(DiracMatrix a, const DiracMatrix& b) { return a += b; }
  friend DiracMatrix operator-(DiracMatrix a, const DiracMatrix& b) { return a -= b; }
  friend DiracMatrix operator*(const complex& s, DiracMatrix a) { return a *= s; }
  friend DiracMatrix operator*(DiracMatrix a, const complex& s) { return a *= s; }

  friend DiracMatrix operator*(const DiracMatrix& a, const DiracMatrix& b) {
    DiracMatrix r;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t k = 0; k < 4; ++k) {
        const complex aik = a(i, k);
        for (std::size_t j = 0; j < 4; ++j) r(i, j) += aik * b(k, j);
      }
    }
    return r;
  }

  complex trace() const { return entries_[0] + entries_[5] + entries_[10] + entries_[15]; }

  DiracMatrix adjoint() const {
    using std::conj;
    DiracMatrix r;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) r(i, j) = conj((*this)(j, i));
    return r;
  }

  /// Largest entry modulus; used for entrywise tolerance checks.
  Real max_abs() const {
    using std::abs;
    Real best(0);
    for (const auto& e : entries_) {
      const Real a = abs(e);
      if (a > best) best = a;
    }
    return best;
  }

 private:
  std::array<complex, 16> entries_;
};

/// A complete set of four gamma matrices. The default is the Dirac basis;
/// `conjugated` produces any unitarily equivalent basis.
template <class Real>
struct GammaBasis {
  using complex = complex_t<Real>;
  std::array<DiracMatrix<Real>, 4> gammas;

  /// gamma_4 = diag(1, 1, -1, -1), gamma_k = [[0, -i sigma_k], [i sigma_k, 0]].
  static const GammaBasis& dirac() {
    static const GammaBasis basis = make_dirac();
    return basis;
  }

  /// U gamma_mu U^dagger for every mu. U must be unitary.
  GammaBasis conjugated(const DiracMatrix<Real>& unitary) const {
    GammaBasis out;
    const auto u_dag = unitary.adjoint();
    for (std::size_t mu = 0; mu < 4; ++mu) out.gammas[mu] = unitary * gammas[mu] * u_dag;
    return out;
  }

 private:
  static GammaBasis make_dirac() {
    const complex one(1), i(Real(0), Real(1));
    // sigma_k entries as [row][col] of 2x2 blocks.
    const std::array<std::array<complex, 4>, 3> sigma = {{
        {complex(0), one, one, complex(0)},
        {complex(0), -i, i, complex(0)},
        {one, complex(0), complex(0), -one},
    }};
    GammaBasis b;
    for (std::size_t k = 0; k < 3; ++k) {
      auto& g = b.gammas[k];
      for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
          const complex s = sigma[k][2 * r + c];
          g(r, c + 2) = -i * s;
          g(r + 2, c) = i * s;
        }
      }
    }
    auto& g4 = b.gammas[3];
    g4(0, 0) = one;
    g4(1, 1) = one;
    g4(2, 2) = -one;
    g4(3, 3) = -one;
    return b;
  }
};

template <class Real>
std::array<DiracMatrix<Real>, 4> gamma_matrices() {
  return GammaBasis<Real>::dirac().gammas;
}

/// gamma_mu v_mu with v_4 = i v_0.
template <class Real>
DiracMatrix<Real> slash(const FourVector<Real>& v,
                        const GammaBasis<Real>& basis = GammaBasis<Real>::dirac()) {
  using complex = complex_t<Real>;
  DiracMatrix<Real> r;
  for (std::size_t k = 0; k < 3; ++k) r += complex(v.spatial[k]) * basis.gammas[k];
  r += complex(Real(0), v.time_component) * basis.gammas[3];
  return r;
}

/// Positive-energy projector (p-slash + i m) / (2 i m).
template <class Real>
DiracMatrix<Real> energy_projector(const FourVector<Real>& p, const Real& mass,
                                   const GammaBasis<Real>& basis = GammaBasis<Real>::dirac()) {
  using complex = complex_t<Real>;
  if (!(mass > 0)) throw std::invalid_argument("energy_projector: mass must be positive");
  const complex im(Real(0), mass);
  auto m = slash(p, basis) + im * DiracMatrix<Real>::identity();
  return m * (complex(1) / (complex(2) * im));
}

/// Trace of the ordered product ms[0] * ms[1] * ... .
template <class Real>
complex_t<Real> trace_product(std::span<const DiracMatrix<Real>> ms) {
  if (ms.empty()) throw std::invalid_argument("trace_product: empty product");
  if (ms.size() == 1) return ms[0].trace();
  DiracMatrix<Real> acc = ms[0];
  for (std::size_t i = 1; i + 1 < ms.size(); ++i) acc = acc * ms[i];
  // Only the diagonal of the final product is needed.
  const auto& last = ms.back();
  complex_t<Real> t(0);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k) t += acc(i, k) * last(k, i);
  return t;
}

template <class Real>
complex_t<Real> trace_product(std::initializer_list<DiracMatrix<Real>> ms) {
  return trace_product<Real>(std::span<const DiracMatrix<Real>>(ms.begin(), ms.size()));
}

/// Four-component Dirac spinor.
template <class Real>
struct Spinor {
  using complex = complex_t<Real>;
  std::array<complex, 4> components{};

  const complex& operator[](std::size_t i) const { return components[i]; }
};

/// u-bar v with u-bar = u^dagger gamma_4 (Dirac basis).
template <class Real>
complex_t<Real> bar_product(const Spinor<Real>& u, const Spinor<Real>& v) {
  using std::conj;
  return conj(u[0]) * v[0] + conj(u[1]) * v[1] - conj(u[2]) * v[2] - conj(u[3]) * v[3];
}

/// Dyad u u-bar (Dirac basis).
template <class Real>
DiracMatrix<Real> bar_dyad(const Spinor<Real>& u) {
  using std::conj;
  DiracMatrix<Real> m;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const auto ubar_j = (j < 2) ? conj(u[j]) : -conj(u[j]);
      m(i, j) = u[i] * ubar_j;
    }
  }
  return m;
}

enum class Helicity : int { minus = -1, plus = 1 };

/// Positive-energy helicity spinor in the Dirac basis, normalised to
/// u-bar u = 1. For |p| = 0 helicity is measured along +z.
///
/// u = sqrt((E + m) / 2m) * (chi, sigma.p / (E + m) chi), where chi is the
/// two-spinor eigenstate of sigma.n with eigenvalue r.
template <class Real>
Spinor<Real> helicity_spinor(const FourVector<Real>& p, Helicity r, const Real& mass) {
  using std::conj;
  using std::sqrt;
  using complex = complex_t<Real>;
  if (!(mass > 0)) throw std::invalid_argument("helicity_spinor: mass must be positive");

  const Real pmag = norm3(p.spatial);
  Vec3<Real> n{Real(0), Real(0), Real(1)};
  if (pmag > 0) n = {p.spatial[0] / pmag, p.spatial[1] / pmag, p.spatial[2] / pmag};

  const Real rho = sqrt(n[0] * n[0] + n[1] * n[1]);
  const complex phase = rho > 0 ? complex(n[0] / rho, n[1] / rho) : complex(1);
  const Real c = sqrt((Real(1) + n[2]) / Real(2));
  const Real s = sqrt((Real(1) - n[2]) / Real(2));

  std::array<complex, 2> chi;
  if (r == Helicity::plus) {
    chi = {complex(c), phase * s};
  } else {
    chi = {-conj(phase) * s, complex(c)};
  }

  const Real energy = p.time_component;
  const Real norm = sqrt((energy + mass) / (Real(2) * mass));
  // sigma.n chi = r chi, so sigma.p chi = r |p| chi.
  const Real lower = Real(static_cast<int>(r)) * pmag / (energy + mass);

  Spinor<Real> u;
  u.components = {complex(norm) * chi[0], complex(norm) * chi[1], complex(norm * lower) * chi[0],
                  complex(norm * lower) * chi[1]};
  return u;
}

}  // namespace fdrate
