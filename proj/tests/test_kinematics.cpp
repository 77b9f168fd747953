#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "fdrate/kinematics.hpp"
#include "support/oracles.hpp"

using namespace fdrate;
using Catch::Approx;

TEST_CASE("on_shell_energy", "[kinematics]") {
  REQUIRE(on_shell_energy(0.0, 0.51) == 0.51);
  REQUIRE(on_shell_energy(0.51 * std::sqrt(3.0), 0.51) == Approx(1.02).epsilon(1e-15));
  // m + p^2 / 2m - p^4 / 8m^3 agrees to ~1e-19 here.
  const double p = 0.001, m = 0.51;
  const double series = m + p * p / (2 * m) - p * p * p * p / (8 * m * m * m);
  REQUIRE(on_shell_energy(p, m) == Approx(series).epsilon(1e-15));
  REQUIRE(on_shell_energy(p, m) == Approx(0.51000098039121454222).epsilon(1e-15));
  REQUIRE_THROWS_AS(on_shell_energy(-0.1, 0.51), std::invalid_argument);
  REQUIRE_THROWS_AS(on_shell_energy(0.1, 0.0), std::invalid_argument);
}

TEST_CASE("recoil_energy", "[kinematics]") {
  const double m = 0.51, w = 12.8e-6;
  SECTION("|p| = 0 is angle independent") {
    for (double c : {-1.0, -0.3, 0.0, 0.7, 1.0})
      REQUIRE(recoil_energy(EmissionConfig(m, 0.0, 12.8, c)) == Approx(std::sqrt(w * w + m * m)).epsilon(1e-15));
  }
  SECTION("perpendicular photon") {
    REQUIRE(recoil_energy(EmissionConfig(m, 0.02, 12.8, 0.0)) ==
            Approx(std::sqrt(0.02 * 0.02 + w * w + m * m)).epsilon(1e-15));
  }
  SECTION("collinear photon") {
    const double p = 0.01;
    REQUIRE(recoil_energy(EmissionConfig(m, p, 12.8, 1.0)) ==
            Approx(std::sqrt((p - w) * (p - w) + m * m)).epsilon(1e-15));
  }
  SECTION("matches the on-shell energy of p - k' over random points") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 200; ++i) {
      const EmissionConfig cfg(0.1 + u(rng), 0.1 * u(rng), 1 + 99 * u(rng), 2 * u(rng) - 1);
      const double e = recoil_energy(cfg);
      const auto q = recoil_momentum(cfg);
      REQUIRE(e * e == Approx(dot3(q.spatial, q.spatial) + cfg.mass_mev * cfg.mass_mev).epsilon(1e-12));
      REQUIRE(e >= cfg.mass_mev);
    }
  }
  SECTION("monotone decreasing in cos theta") {
    double prev = recoil_energy(EmissionConfig(m, 0.01, 12.8, -1.0));
    for (int i = 1; i <= 100; ++i) {
      const double e = recoil_energy(EmissionConfig(m, 0.01, 12.8, -1.0 + 0.02 * i));
      REQUIRE(e < prev);
      prev = e;
    }
  }
  SECTION("invalid configs are rejected") {
    REQUIRE_THROWS(recoil_energy(EmissionConfig(0.0, 0.0, 12.8, 0.0)));
    REQUIRE_THROWS(recoil_energy(EmissionConfig(m, -1.0, 12.8, 0.0)));
    REQUIRE_THROWS(recoil_energy(EmissionConfig(m, 0.0, 0.0, 0.0)));
    REQUIRE_THROWS(recoil_energy(EmissionConfig(m, 0.0, 12.8, 1.5)));
  }
}

TEST_CASE("photon and particle four-vectors", "[kinematics]") {
  const EmissionConfig cfg(0.51, 0.05, 30.0, 0.4);
  REQUIRE(std::abs(photon_momentum(cfg).square()) < 1e-24);
  REQUIRE(particle_momentum(cfg).square() == Approx(-0.51 * 0.51).epsilon(1e-12));
  REQUIRE(recoil_momentum(cfg).square() == Approx(-0.51 * 0.51).epsilon(1e-12));
}

TEST_CASE("polarization_basis", "[kinematics]") {
  SECTION("+z gives x and y") {
    const auto [e1, e2] = polarization_basis<double>({0, 0, 1});
    REQUIRE(e1 == Vec3<double>{1, 0, 0});
    REQUIRE(e2 == Vec3<double>{0, 1, 0});
  }
  SECTION("-z is still right handed") {
    const auto [e1, e2] = polarization_basis<double>({0, 0, -1});
    const auto k = cross3(e1, e2);
    REQUIRE(k[2] == Approx(-1.0));
  }
  SECTION("transverse, orthonormal, right handed, complete") {
    std::mt19937_64 rng(29);
    for (int n = 0; n < 100; ++n) {
      const auto k = testing::random_direction(rng);
      const auto [e1, e2] = polarization_basis(k);
      REQUIRE(std::abs(dot3(e1, k)) < 1e-12);
      REQUIRE(std::abs(dot3(e2, k)) < 1e-12);
      REQUIRE(std::abs(dot3(e1, e2)) < 1e-12);
      REQUIRE(std::abs(dot3(e1, e1) - 1) < 1e-12);
      REQUIRE(std::abs(dot3(e2, e2) - 1) < 1e-12);
      const auto c = cross3(e1, e2);
      for (int i = 0; i < 3; ++i) REQUIRE(std::abs(c[i] - k[i]) < 1e-12);
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          const double sum = e1[i] * e1[j] + e2[i] * e2[j];
          const double expected = (i == j ? 1.0 : 0.0) - k[i] * k[j];
          REQUIRE(std::abs(sum - expected) < 1e-12);
        }
      }
    }
  }
  SECTION("zero vector is rejected") {
    REQUIRE_THROWS_AS(polarization_basis<double>({0, 0, 0}), std::invalid_argument);
  }
}
