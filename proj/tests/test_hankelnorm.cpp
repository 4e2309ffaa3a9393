// Copyright (c) 2026 the hankelkit authors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "hankel/hankelnorm.hpp"

using namespace hankel;

namespace {

ComplexMeasure delta(Complex z, Complex mass = Complex{1, 0}) {
  return ComplexMeasure::from_atoms({{z, mass}});
}

AscentOptions cheap_opts(int restarts, int steps) {
  AscentOptions o;
  o.restarts = restarts;
  o.steps = steps;
  return o;
}

}  // namespace

TEST_CASE("form case classification by r") {
  const RadialWeight cw = RadialWeight::constant();
  CHECK(HankelFormSpec{delta({0, 0}), cw, 4, 4}.form_case() == FormCase::kCaseI);
  CHECK(HankelFormSpec{delta({0, 0}), cw, 2, 2}.form_case() == FormCase::kCaseII);
  CHECK(HankelFormSpec{delta({0, 0}), cw, 1, 1}.form_case() ==
        FormCase::kCaseIII);
  const HankelFormSpec s{delta({0, 0}), cw, 4, 4};
  CHECK(s.r() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(s.r_conjugate() == doctest::Approx(2.0).epsilon(1e-15));
  // mixed exponents: p=3, q=6 -> r = 2
  CHECK(HankelFormSpec{delta({0, 0}), cw, 3, 6}.r() ==
        doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("form_norm_22 on rank-one symbols") {
  const RadialWeight cw = RadialWeight::constant();
  // delta_0: the Hankel matrix is e_0 e_0^T after scaling, norm 1
  const NormEstimate unit = form_norm_22({delta({0, 0}), cw, 2, 2}, 8);
  CHECK(unit.value == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(unit.kind == NormEstimate::Kind::kBand);

  // delta_a, const: norm (1-a^2)^{-2}
  for (const double a : {0.3, 0.5, 0.7}) {
    const NormEstimate e = form_norm_22({delta({a, 0}), cw, 2, 2}, 200);
    const double want = 1.0 / ((1 - a * a) * (1 - a * a));
    CHECK(e.value == doctest::Approx(want).epsilon(1e-9));
    CHECK(e.truncation == 200);
  }

  // monotone nondecreasing in the truncation (up to the Rayleigh tolerance)
  double prev = 0.0;
  for (const std::size_t n : {25, 50, 100, 200}) {
    const double v = form_norm_22({delta({0.5, 0}), cw, 2, 2}, n).value;
    CHECK(v >= prev - 1e-7 * std::max(1.0, prev));
    prev = v;
  }

  CHECK_THROWS_AS(form_norm_22({delta({0.5, 0}), cw, 4, 4}, 16),
                  UnsupportedInputError);
  // iteration starvation surfaces the last iterates
  try {
    form_norm_22({delta({0.5, 0}), cw, 2, 2}, 50, 1e-14, 1);
    FAIL("expected NonConvergenceError");
  } catch (const NonConvergenceError& e) {
    CHECK(e.last() > 0.0);
    CHECK(e.second_last() >= 0.0);
  }
}

TEST_CASE("form_norm_pq ascent lower bounds") {
  const RadialWeight cw = RadialWeight::constant();

  // p = q = 2 reproduces the spectral value from below
  {
    const NormEstimate e =
        form_norm_pq({delta({0.5, 0}), cw, 2, 2}, 64, cheap_opts(3, 80));
    CHECK(e.kind == NormEstimate::Kind::kLowerBound);
    CHECK(e.value == doctest::Approx(16.0 / 9.0).epsilon(0.01));
    CHECK(e.value <= 16.0 / 9.0 + 1e-9);
  }

  // p = q = 4: point evaluation gives 1/(1-a^2) exactly
  {
    const double a = 0.5;
    const NormEstimate e =
        form_norm_pq({delta({a, 0}), cw, 4, 4}, 64, cheap_opts(4, 120));
    const double want = 1.0 / (1 - a * a);
    CHECK(e.value > 0.93 * want);
    CHECK(e.value <= want * (1 + 1e-6));
  }

  // non-even exponents run on the value-space path and stay deterministic
  {
    const HankelFormSpec spec{delta({0.4, 0}), cw, 3.0, 1.5};
    const NormEstimate e1 = form_norm_pq(spec, 24, cheap_opts(2, 40));
    const NormEstimate e2 = form_norm_pq(spec, 24, cheap_opts(2, 40));
    CHECK(e1.value == e2.value);  // bitwise: same seed, same trajectory
    CHECK(e1.value > 0.5);
    CHECK(std::isfinite(e1.value));
    CHECK(e1.history.size() == 2);
  }

  CHECK_THROWS_AS(form_norm_pq({delta({0.5, 0}), cw, -1.0, 2.0}, 16),
                  std::domain_error);
}

TEST_CASE("dual norms by case") {
  const RadialWeight cw = RadialWeight::constant();
  // case I with p = q = 4: r' = 2, dual = ||B_a||_2 = 1/sqrt(...)
  const double dn = dual_norm({delta({0.5, 0}), cw, 4, 4}, 64);
  CHECK(dn == doctest::Approx(4.0 / 3.0).epsilon(1e-6));
  // scaling: dual(2 mu) = 2 dual(mu) in every case
  for (const double pq : {4.0, 2.0, 1.0}) {
    const HankelFormSpec one{delta({0.4, 0.2}), cw, pq, pq};
    const HankelFormSpec two{delta({0.4, 0.2}).scaled({2, 0}), cw, pq, pq};
    const double d1 = dual_norm(one, 32);
    const double d2 = dual_norm(two, 32);
    CHECK(d2 == doctest::Approx(2.0 * d1).epsilon(1e-9));
  }
}

TEST_CASE("operator norm estimates") {
  const RadialWeight cw = RadialWeight::constant();
  const NormEstimate e =
      operator_norm_pq({delta({0.5, 0}), cw, 2, 2}, 64, cheap_opts(3, 150));
  CHECK(e.value > 0.97 * 16.0 / 9.0);
  CHECK(e.value <= 16.0 / 9.0 + 1e-9);
  CHECK_THROWS_AS(operator_norm_pq({delta({0.5, 0}), cw, 2, 1.0}, 16),
                  UnsupportedInputError);
}

TEST_CASE("theorem1 ratio experiment on a tiny corpus") {
  const RadialWeight cw = RadialWeight::constant();
  const std::vector<ComplexMeasure> corpus = {delta({0.3, 0})};
  const Theorem1Report rep = theorem1_ratio_experiment(
      corpus, cw, 2, 2, {16, 32}, cheap_opts(2, 60));
  REQUIRE(rep.rows.size() == 2);  // one symbol x two truncations
  CHECK(rep.rows.back().truncation == 32);
  CHECK(rep.rows.back().form > 0.0);
  CHECK(rep.rows.back().dual > 0.0);
  CHECK(rep.min_ratio == rep.max_ratio);  // single symbol
  CHECK(rep.band == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(
      theorem1_ratio_experiment({}, cw, 2, 2, {16}, cheap_opts(1, 10)),
      UnsupportedInputError);
}

TEST_CASE("hankel measure detector") {
  const RadialWeight cw = RadialWeight::constant();
  const DetectorReport rep = hankel_measure_detector(delta({0, 0}), cw, 2, 1);
  CHECK(rep.value == doctest::Approx(1.057243248663).epsilon(1e-9));
  CHECK_FALSE(rep.divergent);

  // escaping family: mass scales 2^{-j} at radii 1 - 2^{-j}
  ComplexMeasure esc;
  for (int j = 1; j <= 24; ++j) {
    const double t = std::ldexp(1.0, -j);
    esc.add_atom(Complex{1.0 - t, 0.0}, Complex{t, 0.0});
  }
  CHECK(hankel_measure_detector(esc, cw, 2, 1).divergent);

  CHECK_THROWS_AS(hankel_measure_detector(delta({0, 0}), cw, 2.5, 1),
                  UnsupportedInputError);
  CHECK_THROWS_AS(hankel_measure_detector(delta({0, 0}), cw, 0.5, -0.8),
                  ClassificationError);
}

TEST_CASE("standard criterion") {
  const DetectorReport rep = standard_criterion(delta({0, 0}), 1.0, 1.0);
  CHECK(rep.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_FALSE(rep.divergent);

  // verdict is t-invariant on a fixed symbol
  const ComplexMeasure mu = delta(std::polar(0.6, 1.1), Complex{0.5, 0.5});
  const bool v1 = standard_criterion(mu, 1.0, 0.5).divergent;
  const bool v2 = standard_criterion(mu, 1.0, 1.0).divergent;
  const bool v3 = standard_criterion(mu, 1.0, 2.0).divergent;
  CHECK(v1 == v2);
  CHECK(v2 == v3);

  CHECK_THROWS_AS(standard_criterion(mu, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(standard_criterion(mu, -1.0, 1.0), std::domain_error);
}

TEST_CASE("zero-free factorization") {
  // F = (1 - z/2)^{-2} truncated: F^{1/2} has coefficients 2^{-k}
  std::vector<Complex> fc(16);
  for (std::size_t k = 0; k < fc.size(); ++k) {
    fc[k] = (k + 1.0) * std::pow(0.5, k);
  }
  const auto [f, g] = factor_zero_free(TaylorSeries(std::move(fc)), 1, 2, 2, 12);
  for (std::size_t k = 0; k <= 12; ++k) {
    CHECK(std::abs(f.at(k) - std::pow(0.5, k)) <= 1e-12);
    CHECK(std::abs(g.at(k) - std::pow(0.5, k)) <= 1e-12);
  }

  // the product reproduces F up to the truncation degree
  const TaylorSeries prod = multiply(f, g, 12);
  for (std::size_t k = 0; k <= 12; ++k) {
    CHECK(std::abs(prod.at(k) - (k + 1.0) * std::pow(0.5, k)) <= 1e-11);
  }

  // targets vanishing on the closed disk are rejected
  CHECK_THROWS_AS(
      factor_zero_free(TaylorSeries({Complex{1, 0}, Complex{-1, 0}}), 1, 2, 2, 8),
      UnsupportedInputError);
  CHECK_THROWS_AS(factor_zero_free(TaylorSeries::monomial(1), 1, 2, 2, 8),
                  UnsupportedInputError);
  CHECK_THROWS_AS(factor_zero_free(TaylorSeries(), 1, 2, 2, 8),
                  UnsupportedInputError);
}
