// Copyright (c) 2026 the hankelkit authors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "hankel/fft.hpp"
#include "hankel/measures.hpp"
#include "hankel/operators.hpp"
#include "hankel/series.hpp"

using namespace hankel;

namespace {

// Independent reference for the fast Hankel apply: direct O(N^2) summation.
std::vector<Complex> naive_hankel_matvec(const std::vector<Complex>& moments,
                                         const std::vector<Complex>& x) {
  const std::size_t n = x.size();
  std::vector<Complex> y(n, Complex{0.0, 0.0});
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t k = 0; k < n; ++k) y[m] += moments[m + k] * x[k];
  }
  return y;
}

std::mt19937_64 seeded_rng(std::uint64_t salt) {
  return std::mt19937_64(0x243F6A8885A308D3ull ^ salt);
}

Complex random_unit_box(std::mt19937_64& rng) {
  const auto u = [&rng] {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
  };
  return {2.0 * u() - 1.0, 2.0 * u() - 1.0};
}

}  // namespace

TEST_CASE("series basics") {
  const TaylorSeries f({Complex{1, 0}, Complex{0, 0}, Complex{0.5, 0}});
  CHECK(f.degree() == 2);
  CHECK(f.at(5) == Complex{0, 0});
  CHECK(std::abs(f.evaluate(Complex{0, 1}) - Complex{0.5, 0}) <= 1e-15);
  CHECK(TaylorSeries::monomial(3).at(3) == Complex{1, 0});
  CHECK(TaylorSeries::constant(Complex{2, 1}).at(0) == Complex{2, 1});

  const TaylorSeries d = f.dilated(0.5);
  CHECK(d.at(2) == Complex{0.125, 0});
  const TaylorSeries fp = f.derivative();
  CHECK(fp.at(1) == Complex{1, 0});  // d/dz 0.5 z^2 = z
  CHECK(fp.size() == 2);
  CHECK(f.truncated(0).size() == 1);
  CHECK(TaylorSeries({Complex{1, 2}}).conjugated_coeffs().at(0) ==
        Complex{1, -2});
}

TEST_CASE("series arithmetic and Cauchy product") {
  const TaylorSeries one_plus_z({Complex{1, 0}, Complex{1, 0}});
  const TaylorSeries sq = multiply(one_plus_z, one_plus_z);
  REQUIRE(sq.size() == 3);
  CHECK(sq.at(0) == Complex{1, 0});
  CHECK(sq.at(1) == Complex{2, 0});
  CHECK(sq.at(2) == Complex{1, 0});
  CHECK(multiply(one_plus_z, one_plus_z, 1).size() == 2);

  const TaylorSeries sum = one_plus_z + TaylorSeries::monomial(2);
  CHECK(sum.at(2) == Complex{1, 0});
  const TaylorSeries diff = sum - TaylorSeries::monomial(2);
  CHECK(diff.at(2) == Complex{0, 0});
  CHECK((Complex{2, 0} * one_plus_z).at(1) == Complex{2, 0});
}

TEST_CASE("reproducing kernel coefficients and point values") {
  // constant weight: sigma_n = 1/(n+1), so coefficients are (n+1) a^n
  const TaylorSeries k = kernel(RadialWeight::constant(), Complex{0.5, 0}, 200);
  CHECK(std::abs(k.at(0) - Complex{1.0, 0}) <= 1e-14);
  CHECK(std::abs(k.at(1) - Complex{1.0, 0}) <= 1e-14);
  CHECK(std::abs(k.at(2) - Complex{0.75, 0}) <= 1e-14);
  CHECK(std::abs(k.at(3) - Complex{0.5, 0}) <= 1e-14);
  // B_a(a) = 1/(1-|a|^2)^2 for the constant weight
  CHECK(k.evaluate(Complex{0.5, 0}).real() ==
        doctest::Approx(16.0 / 9.0).epsilon(1e-12));

  // complex a: coefficients carry conj(a)^n
  const Complex a = std::polar(0.6, 0.5);
  const TaylorSeries kc = kernel(RadialWeight::constant(), a, 8);
  CHECK(std::abs(kc.at(1) - 2.0 * std::conj(a)) <= 1e-15);
}

TEST_CASE("standard-weight kernel matches the binomial expansion") {
  const Complex a = std::polar(0.6, 0.5);
  for (const double beta : {0.0, 0.5, 2.0}) {
    const TaylorSeries k = kernel(RadialWeight::standard(beta), a, 50);
    // (1 - conj(a) xi)^{-2-beta} = sum_n C(n+1+beta, n) conj(a)^n xi^n
    double binom = 1.0;
    for (std::size_t n = 0; n <= 50; ++n) {
      if (n > 0) binom *= (n + 1.0 + beta) / n;
      const Complex want = binom * std::pow(std::conj(a), n);
      CHECK(std::abs(k.at(n) - want) <=
            1e-12 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST_CASE("fft convolution equals the direct product") {
  std::mt19937_64 rng = seeded_rng(1);
  for (const std::size_t na : {1, 2, 7, 64}) {
    for (const std::size_t nb : {1, 5, 33}) {
      std::vector<Complex> a(na), b(nb);
      for (auto& v : a) v = random_unit_box(rng);
      for (auto& v : b) v = random_unit_box(rng);
      const std::vector<Complex> got = detail::convolve(a, b);
      REQUIRE(got.size() == na + nb - 1);
      for (std::size_t k = 0; k < got.size(); ++k) {
        Complex want{0, 0};
        for (std::size_t i = 0; i < na; ++i) {
          if (k >= i && k - i < nb) want += a[i] * b[k - i];
        }
        CHECK(std::abs(got[k] - want) <= 1e-12 * (1.0 + std::abs(want)));
      }
    }
  }
}

TEST_CASE("hankel_matvec: tiny frozen case") {
  const std::vector<Complex> m = {{1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}};
  const std::vector<Complex> y =
      hankel_matvec(m, {Complex{1, 0}, Complex{1, 0}});
  REQUIRE(y.size() == 2);
  CHECK(std::abs(y[0] - Complex{3.0, 0}) <= 1e-12);
  CHECK(std::abs(y[1] - Complex{5.0, 0}) <= 1e-12);
}

TEST_CASE("hankel_matvec matches the naive oracle on random instances") {
  std::mt19937_64 rng = seeded_rng(2);
  int instances = 0;
  for (const std::size_t n : {16, 128, 512}) {
    for (int rep = 0; rep < 34; ++rep) {
      std::vector<Complex> moments(2 * n - 1), x(n);
      for (auto& v : moments) v = random_unit_box(rng);
      for (auto& v : x) v = random_unit_box(rng);
      const std::vector<Complex> fast = hankel_matvec(moments, x);
      const std::vector<Complex> ref = naive_hankel_matvec(moments, x);
      REQUIRE(fast.size() == ref.size());
      double scale = 0.0;
      for (const Complex& v : ref) scale = std::max(scale, std::abs(v));
      for (std::size_t i = 0; i < ref.size(); ++i) {
        CHECK(std::abs(fast[i] - ref[i]) <= 1e-11 * std::max(1.0, scale));
      }
      ++instances;
    }
  }
  CHECK(instances == 102);
}

TEST_CASE("HankelMatrixView apply and adjoint") {
  std::mt19937_64 rng = seeded_rng(3);
  const std::size_t n = 24;
  HankelMatrixView view;
  view.moments.resize(2 * n - 1);
  view.scalings.resize(n);
  for (auto& v : view.moments) v = random_unit_box(rng);
  for (auto& s : view.scalings)
    s = 0.25 + (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
  CHECK(view.dim() == n);

  std::vector<Complex> x(n), y(n);
  for (auto& v : x) v = random_unit_box(rng);
  for (auto& v : y) v = random_unit_box(rng);

  // A x against the dense definition
  const std::vector<Complex> ax = view.apply(x);
  for (std::size_t m = 0; m < n; ++m) {
    Complex want{0, 0};
    for (std::size_t k = 0; k < n; ++k) {
      want += view.moments[m + k] * view.scalings[m] * view.scalings[k] * x[k];
    }
    CHECK(std::abs(ax[m] - want) <= 1e-12 * (1.0 + std::abs(want)));
  }

  // <A x, y> == <x, A* y>
  const std::vector<Complex> aty = view.apply_adjoint(y);
  Complex lhs{0, 0}, rhs{0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    lhs += ax[i] * std::conj(y[i]);
    rhs += x[i] * std::conj(aty[i]);
  }
  CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(lhs)));
}

TEST_CASE("measure moments: atoms") {
  const ComplexMeasure mu = ComplexMeasure::from_atoms(
      {{Complex{0.5, 0}, Complex{1, 0}}, {Complex{-0.5, 0}, Complex{0, 1}}});
  CHECK(std::abs(mu.moment(0) - Complex{1, 1}) <= 1e-15);
  CHECK(std::abs(mu.moment(1) - Complex{0.5, -0.5}) <= 1e-15);
  CHECK(std::abs(mu.moment(2) - Complex{0.25, 0.25}) <= 1e-15);
  CHECK(std::abs(mu.moment_bar(1) - Complex{0.5, -0.5}) <= 1e-15);
  const std::vector<Complex> ms = mu.moments(4);
  REQUIRE(ms.size() == 5);
  CHECK(std::abs(ms[2] - mu.moment(2)) == 0.0);
}

TEST_CASE("measure moments: anti-analytic density") {
  // d mu = conj(h) d(omega dA), h = z, omega = const:
  // moment(k) = 2 omega_{2k+1} conj(h_k)  -> only k = 1 survives, value 1/2.
  const ComplexMeasure mu = ComplexMeasure::from_density(
      TaylorSeries::monomial(1), RadialWeight::constant());
  CHECK(std::abs(mu.moment(0)) <= 1e-15);
  CHECK(std::abs(mu.moment(1) - Complex{0.5, 0}) <= 1e-14);
  CHECK(std::abs(mu.moment(2)) <= 1e-15);
  // the conjugate-side moments of the density only contribute at k = 0
  CHECK(std::abs(mu.moment_bar(1)) <= 1e-15);

  ComplexMeasure both = mu;
  both.add_atom(Complex{0.3, 0}, Complex{2, 0});
  CHECK(std::abs(both.moment(1) - Complex{0.5 + 2.0 * 0.3, 0}) <= 1e-14);
  CHECK_FALSE(both.empty());
  CHECK(ComplexMeasure().empty());
}

TEST_CASE("measure scaling and addition") {
  const ComplexMeasure mu =
      ComplexMeasure::from_atoms({{Complex{0.4, 0}, Complex{1, 0}}});
  const ComplexMeasure two = mu.scaled(Complex{2, 0});
  CHECK(std::abs(two.moment(1) - 2.0 * mu.moment(1)) <= 1e-15);
  const ComplexMeasure sum = mu + two;
  CHECK(std::abs(sum.moment(1) - 3.0 * mu.moment(1)) <= 1e-15);
}

TEST_CASE("projection of a point mass is the kernel") {
  const ComplexMeasure mu =
      ComplexMeasure::from_atoms({{Complex{0.5, 0}, Complex{1, 0}}});
  const RadialWeight w = RadialWeight::constant();
  const TaylorSeries p = project(w, mu, /*conjugated=*/true, 16);
  const TaylorSeries k = kernel(w, Complex{0.5, 0}, 16);
  for (std::size_t n = 0; n <= 16; ++n) {
    CHECK(std::abs(p.at(n) - k.at(n)) <= 1e-14 * (1.0 + std::abs(k.at(n))));
  }
  // the unconjugated variant projects the measure itself
  const TaylorSeries praw = project(w, mu, /*conjugated=*/false, 4);
  CHECK(std::abs(praw.at(1) - Complex{1.0, 0}) <= 1e-14);  // 0.5 / (1/2)
}

TEST_CASE("dilated projection residual") {
  const ComplexMeasure mu =
      ComplexMeasure::from_atoms({{Complex{0.5, 0}, Complex{1, 0}}});
  const RadialWeight w = RadialWeight::constant();
  // F = z: residual(rho) = |m_1| (1 - rho) = 0.5 (1 - rho)
  const double r9 = dilated_projection_residual(TaylorSeries::monomial(1), mu,
                                                w, 0.9);
  CHECK(r9 == doctest::Approx(0.05).epsilon(1e-8));
  // strictly decreasing along the ladder
  const double r99 = dilated_projection_residual(TaylorSeries::monomial(1), mu,
                                                 w, 0.99);
  const double r999 = dilated_projection_residual(TaylorSeries::monomial(1),
                                                  mu, w, 0.999);
  CHECK(r99 < r9);
  CHECK(r999 < r99);
  // constants are reproduced exactly at every dilation
  const double rc = dilated_projection_residual(
      TaylorSeries::constant(Complex{1, 0}), mu, w, 0.9);
  CHECK(rc <= 1e-10);
}
