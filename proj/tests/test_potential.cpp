#include <cmath>

#include "doctest.h"
#include "mowa/potential.hpp"
#include "oracles.hpp"

using mowa::Potential;
using mowa::Rng;
using mowa::Vec;

namespace {

Vec vec2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

}  // namespace

TEST_CASE("kernel values") {
  const Potential morse = Potential::morse(30.0);
  CHECK(morse.value(Vec::Zero(2)) == doctest::Approx(1.0));
  CHECK(morse.value_at_distance(0.1) == doctest::Approx(std::exp(-3.0)));

  const Potential riesz = Potential::riesz(1.0);
  CHECK(riesz.value_at_distance(2.0) == doctest::Approx(0.5));
  CHECK_THROWS_AS(riesz.value(Vec::Zero(2)), std::domain_error);

  CHECK_THROWS_AS(Potential::morse(0.0), std::invalid_argument);
  CHECK_THROWS_AS(Potential::riesz(-1.0), std::invalid_argument);
}

TEST_CASE("radial derivative with the zero convention") {
  const Potential morse = Potential::morse(30.0);
  CHECK(morse.radial_derivative(0.0) == 0.0);
  CHECK(morse.radial_derivative(0.1) == doctest::Approx(-30.0 * std::exp(-3.0)));

  const Potential riesz = Potential::riesz(2.0);
  CHECK(riesz.radial_derivative(0.0) == 0.0);
  CHECK(riesz.radial_derivative(1.0) == doctest::Approx(-2.0));
}

TEST_CASE("gradient direction and zero convention") {
  const Potential morse = Potential::morse(30.0);
  CHECK(morse.gradient(Vec::Zero(3)).isZero(0.0));
  const Vec g = morse.gradient(vec2(0.1, 0.0));
  CHECK(g(0) == doctest::Approx(-30.0 * std::exp(-3.0)));
  CHECK(g(1) == doctest::Approx(0.0));
}

TEST_CASE("gradient matches central finite differences") {
  Rng rng(505);
  std::uniform_real_distribution<double> radius(0.05, 2.0);
  std::normal_distribution<double> normal(0.0, 1.0);
  const Potential kernels[] = {Potential::morse(30.0), Potential::morse(3.0),
                               Potential::riesz(1.0), Potential::riesz(2.0)};
  for (const Potential& u : kernels) {
    for (int m : {2, 3}) {
      for (int trial = 0; trial < 100; ++trial) {
        Vec dir(m);
        for (int l = 0; l < m; ++l) dir(l) = normal(rng);
        if (dir.norm() < 1e-12) continue;
        const Vec z = radius(rng) * dir.normalized();
        const Vec expected = mowa::testing::finite_difference_gradient(u, z, 1e-6);
        CHECK((u.gradient(z) - expected).lpNorm<Eigen::Infinity>() <= 1e-5);
      }
    }
  }
}

TEST_CASE("ensemble energy examples") {
  const Potential morse = Potential::morse(30.0);

  CHECK(mowa::ensemble_energy(morse, {vec2(0.3, 0.7)}) == 0.0);

  const std::vector<Vec> coincident = {vec2(0.2, 0.2), vec2(0.2, 0.2)};
  CHECK(mowa::ensemble_energy(morse, coincident) == doctest::Approx(0.5));

  // Three equally spaced collinear points, spacing 0.1: brute-force pair
  // enumeration gives (4 e^-3 + 2 e^-6) / 9.
  const std::vector<Vec> collinear = {vec2(0.0, 0.0), vec2(0.1, 0.0), vec2(0.2, 0.0)};
  double brute = 0.0;
  for (std::size_t i = 0; i < collinear.size(); ++i) {
    for (std::size_t j = 0; j < collinear.size(); ++j) {
      if (i != j) brute += morse.value(collinear[i] - collinear[j]);
    }
  }
  brute /= 9.0;
  CHECK(brute == doctest::Approx((4.0 * std::exp(-3.0) + 2.0 * std::exp(-6.0)) / 9.0));
  CHECK(mowa::ensemble_energy(morse, collinear) == doctest::Approx(brute));
  CHECK(mowa::ensemble_energy(morse, collinear) ==
        doctest::Approx(0.022678419758309833));

  const Potential riesz = Potential::riesz(1.0);
  CHECK_THROWS_AS(mowa::ensemble_energy(riesz, coincident), std::domain_error);
  CHECK_THROWS_AS(mowa::ensemble_energy(morse, {}), std::invalid_argument);
}

TEST_CASE("energy invariances") {
  Rng rng(606);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  const Potential morse = Potential::morse(30.0);

  std::vector<Vec> points;
  for (int i = 0; i < 6; ++i) points.push_back(vec2(unif(rng), unif(rng)));
  const double energy = mowa::ensemble_energy(morse, points);

  // translation invariance
  std::vector<Vec> shifted = points;
  const Vec shift = vec2(0.37, -1.4);
  for (Vec& p : shifted) p += shift;
  CHECK(std::abs(mowa::ensemble_energy(morse, shifted) - energy) < 1e-12);

  // permutation invariance
  std::vector<Vec> permuted = {points[3], points[0], points[5],
                               points[1], points[4], points[2]};
  CHECK(mowa::ensemble_energy(morse, permuted) == doctest::Approx(energy).epsilon(1e-14));

  // monotone decrease with separation for a 2-point configuration
  double previous = std::numeric_limits<double>::infinity();
  for (double separation = 0.05; separation <= 1.0; separation += 0.05) {
    const double e =
        mowa::ensemble_energy(morse, {vec2(0.0, 0.0), vec2(separation, 0.0)});
    CHECK(e < previous);
    previous = e;
  }

  // value depends only on the difference of the endpoints
  const Vec y = vec2(0.4, 0.6), z = vec2(0.1, -0.2);
  CHECK(morse.value(y - z) ==
        doctest::Approx(morse.value((y + shift) - (z + shift))).epsilon(1e-14));
}
