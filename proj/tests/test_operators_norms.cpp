// Copyright (c) 2026 the hankelkit authors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "hankel/norms.hpp"
#include "hankel/operators.hpp"

using namespace hankel;

namespace {

RadialWeight triangular() {
  return RadialWeight::custom([](double r) { return 2.0 * (1.0 - r); },
                              "triangular");
}

TaylorSeries probe(int degree) {
  std::vector<Complex> c(degree + 1);
  for (int n = 0; n <= degree; ++n) {
    c[n] = std::pow(0.8, n) * Complex{std::cos(0.9 * n), std::sin(0.4 * n + 1)};
  }
  return TaylorSeries(std::move(c));
}

}  // namespace

TEST_CASE("fractional multiplier ratios") {
  // omega = const, nu = 2(1-r): ratio_n = (2n+3)/2
  const std::vector<double> r =
      frac_multiplier(RadialWeight::constant(), triangular(), 3);
  REQUIRE(r.size() == 4);
  CHECK(r[0] == doctest::Approx(1.5).epsilon(1e-10));
  CHECK(r[1] == doctest::Approx(2.5).epsilon(1e-10));
  CHECK(r[2] == doctest::Approx(3.5).epsilon(1e-10));
}

TEST_CASE("R and the D ladder operators") {
  const RadialWeight w = RadialWeight::constant();
  const TaylorSeries f = probe(12);

  // D^w divides by w_{2n+1} = 1/(2n+2); D_w multiplies back.
  const TaylorSeries up = d_upper(w, f);
  CHECK(std::abs(up.at(3) - 8.0 * f.at(3)) <= 1e-14);
  const TaylorSeries round = d_lower(w, up);
  for (std::size_t n = 0; n < f.size(); ++n) {
    CHECK(std::abs(round.at(n) - f.at(n)) <= 1e-15 * (1.0 + std::abs(f.at(n))));
  }

  // R^{w,nu} then R^{nu,w} is the identity.
  const RadialWeight nu = RadialWeight::standard(1.0);
  const TaylorSeries back = frac_R(nu, w, frac_R(w, nu, f));
  for (std::size_t n = 0; n < f.size(); ++n) {
    CHECK(std::abs(back.at(n) - f.at(n)) <= 1e-13 * (1.0 + std::abs(f.at(n))));
  }
}

TEST_CASE("bilinear form evaluation") {
  const ComplexMeasure mu = ComplexMeasure::from_atoms(
      {{Complex{0.5, 0}, Complex{1, 0}}});
  const TaylorSeries one = TaylorSeries::constant(Complex{1, 0});
  const TaylorSeries z = TaylorSeries::monomial(1);
  CHECK(std::abs(hankel_form_eval(mu, one, one) - Complex{1, 0}) <= 1e-15);
  CHECK(std::abs(hankel_form_eval(mu, z, z) - Complex{0.25, 0}) <= 1e-15);
  CHECK(std::abs(hankel_form_eval(mu, one, z) - Complex{0.5, 0}) <= 1e-15);
  // moments overload agrees
  const std::vector<Complex> ms = mu.moments(2);
  CHECK(std::abs(hankel_form_eval(ms, z, z) - hankel_form_eval(mu, z, z)) ==
        0.0);
  // bilinearity: H(2f, g) = 2 H(f, g)
  CHECK(std::abs(hankel_form_eval(mu, Complex{2, 0} * z, z) -
                 2.0 * hankel_form_eval(mu, z, z)) <= 1e-15);
}

TEST_CASE("small Hankel operator apply") {
  const ComplexMeasure mu = ComplexMeasure::from_atoms(
      {{Complex{0.5, 0}, Complex{1, 0}}});
  const RadialWeight w = RadialWeight::constant();
  const TaylorSeries out =
      hankel_operator_apply(mu, w, TaylorSeries::constant(Complex{1, 0}), 8);
  // coefficients (n+1) 0.5^n for f = 1
  CHECK(std::abs(out.at(0) - Complex{1.0, 0}) <= 1e-14);
  CHECK(std::abs(out.at(1) - Complex{1.0, 0}) <= 1e-14);
  CHECK(std::abs(out.at(2) - Complex{0.75, 0}) <= 1e-14);

  // linearity in f
  const TaylorSeries twice = hankel_operator_apply(
      mu, w, TaylorSeries::constant(Complex{2, 0}), 8);
  CHECK(std::abs(twice.at(2) - 2.0 * out.at(2)) <= 1e-14);
}

TEST_CASE("bergman norms and inner products") {
  const RadialWeight cw = RadialWeight::constant();
  // ||z^3||_2 = sqrt(sigma_3) = 1/2
  CHECK(bergman_norm(TaylorSeries::monomial(3), cw, 2.0) ==
        doctest::Approx(0.5).epsilon(1e-10));
  // mass-normalized weights give ||1||_p = 1 for every p
  CHECK(bergman_norm(TaylorSeries::constant(Complex{1, 0}),
                     RadialWeight::standard(1.0), 3.0) ==
        doctest::Approx(1.0).epsilon(1e-10));

  // Parseval agreement on a generic polynomial
  const TaylorSeries f = probe(10);
  CHECK(bergman_norm(f, cw, 2.0) ==
        doctest::Approx(norm2_coeff(f, cw)).epsilon(1e-10));

  const TaylorSeries g = probe(7);
  const Complex quad = inner_product(f, g, cw);
  const Complex coeff = inner_product_coeff(f, g, cw);
  CHECK(std::abs(quad - coeff) <= 1e-10 * (1.0 + std::abs(coeff)));
  // <z^m, z^n> = 0 for m != n
  CHECK(std::abs(inner_product(TaylorSeries::monomial(2),
                               TaylorSeries::monomial(5), cw)) <= 1e-12);
}

TEST_CASE("bloch norm") {
  const BlochReport rep = bloch_norm(TaylorSeries::monomial(2));
  // sup (1-r^2) 2r on the dyadic grid; the true sup is 4/(3 sqrt 3)
  CHECK(rep.value == doctest::Approx(0.769783548102948).epsilon(1e-12));
  CHECK(std::abs(rep.value - 4.0 / (3.0 * std::sqrt(3.0))) <= 1e-3);
  // the grid maximizer sits near the true argmax 1/sqrt(3)
  CHECK(std::abs(std::abs(rep.at) - 1.0 / std::sqrt(3.0)) <= 0.05);
  // constants have zero derivative, so the norm is |f(0)|
  CHECK(bloch_norm(TaylorSeries::constant(Complex{0, 2})).value ==
        doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("garsia bmo norm of monomials") {
  for (const std::size_t n : {1, 2, 5}) {
    CHECK(garsia_bmo(TaylorSeries::monomial(n)) ==
          doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("bmoa-type norms") {
  const RadialWeight cw = RadialWeight::constant();
  CHECK(bmoa_infty_norm(TaylorSeries::monomial(1), cw) ==
        doctest::Approx(0.25).epsilon(1e-9));
  CHECK(d_omega_bmoa_norm(TaylorSeries::monomial(1), cw) ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("pairing sum form vs quadrature form") {
  const RadialWeight cw = RadialWeight::constant();
  const TaylorSeries one = TaylorSeries::constant(Complex{1, 0});
  const PairingResult pr = pairing_omega_omega(one, one, cw, 0.8);
  CHECK(std::abs(pr.sum_form - Complex{0.2, 0}) <= 1e-15);
  CHECK(std::abs(pr.quadrature_form - Complex{0.2, 0}) <= 1e-10);

  const TaylorSeries f = probe(9);
  const TaylorSeries g = probe(5);
  const PairingResult p2 = pairing_omega_omega(f, g, cw, 0.5);
  CHECK(std::abs(p2.sum_form - p2.quadrature_form) <=
        1e-9 * (1.0 + std::abs(p2.sum_form)));
}

TEST_CASE("fractional Bloch sup") {
  // f = z, omega = const, nu = 2(1-r): multiplier 2.5, profile factor
  // nu-hat/omega-hat = (1-r), sup of 2.5 r (1-r) = 0.625 at r = 1/2.
  CHECK(frac_bloch_sup(TaylorSeries::monomial(1), RadialWeight::constant(),
                       triangular()) ==
        doctest::Approx(0.625).epsilon(1e-7));
}

TEST_CASE("bfrac integral condition") {
  const BfracReport yes =
      bfrac_condition(RadialWeight::constant(), triangular());
  CHECK(yes.holds);
  CHECK(yes.sup_ratio > 0.9);
  CHECK(yes.sup_ratio <= 1.0 + 1e-9);

  const BfracReport no =
      bfrac_condition(RadialWeight::constant(), RadialWeight::constant());
  CHECK_FALSE(no.holds);

  const BfracReport wd = bfrac_condition(
      RadialWeight::constant(),
      RadialWeight::w_derived(2.0, RadialWeight::constant()));
  CHECK(wd.holds);
}

TEST_CASE("kernel norm comparison rows") {
  const std::vector<KernelNormRow> rows = kernel_norm_comparison(
      RadialWeight::constant(), RadialWeight::constant(), 2.0, {0.5, 0.9});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].z == 0.5);
  CHECK(rows[0].trunc == 53);
  CHECK(rows[0].ratio == doctest::Approx(1.18519).epsilon(1e-4));
  CHECK(rows[0].ratio2 == doctest::Approx(0.444444).epsilon(1e-4));
  CHECK(rows[1].trunc == 281);
  CHECK(rows[1].ratio == doctest::Approx(0.559613).epsilon(1e-4));
  CHECK(rows[1].ratio2 == doctest::Approx(0.277008).epsilon(1e-4));
  for (const KernelNormRow& r : rows) {
    CHECK(r.lhs_p > 0.0);
    CHECK(r.rhs > 0.0);
    CHECK(r.ratio == doctest::Approx(r.lhs_p / r.rhs).epsilon(1e-12));
    CHECK(r.ratio2 == doctest::Approx(r.lhs_p / r.rhs2).epsilon(1e-12));
  }
}
