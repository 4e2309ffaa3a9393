// Copyright (c) 2026 the hankelkit authors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hankel/weights.hpp"

using namespace hankel;

TEST_CASE("constant weight closed forms") {
  const RadialWeight w = RadialWeight::constant();
  CHECK(w.profile(0.0) == 1.0);
  CHECK(w.profile(0.73) == 1.0);
  CHECK(w.tail(0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(w.tail(0.5) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(w.moment(0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(w.moment(1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(w.moment(3.0) == doctest::Approx(0.25).epsilon(1e-15));
  // sigma_n = 2 w_{2n+1} = 1/(n+1)
  for (const std::size_t n : {0, 1, 2, 5, 40}) {
    CHECK(w.sigma(n) == doctest::Approx(1.0 / (n + 1.0)).epsilon(1e-14));
  }
  CHECK(w.kind() == RadialWeight::Kind::kConstant);
  CHECK(w.describe() == "kind=const");
}

TEST_CASE("standard weight closed forms") {
  const RadialWeight w = RadialWeight::standard(1.0);
  // mass-normalized: (alpha+1)(1 - r^2)^alpha
  CHECK(w.profile(0.5) == doctest::Approx(2.0 * 0.75).epsilon(1e-15));
  CHECK(w.tail(0.0) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(w.tail(0.5) == doctest::Approx(0.416666666666667).epsilon(1e-12));
  // 1/sigma_n = (n+1)(n+2)/2 for alpha = 1
  for (const std::size_t n : {0, 1, 2, 7}) {
    const double want = 2.0 / ((n + 1.0) * (n + 2.0));
    CHECK(w.sigma(n) == doctest::Approx(want).epsilon(1e-13));
  }
  CHECK(w.param() == 1.0);

  const RadialWeight half = RadialWeight::standard(0.5);
  // total mass 2*moment(1) = 1 for every mass-normalized standard weight
  CHECK(2.0 * half.moment(1.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(RadialWeight::standard(-1.0), std::domain_error);
}

TEST_CASE("derived weight W closed forms") {
  const RadialWeight w =
      RadialWeight::w_derived(2.0, RadialWeight::constant());
  // base const: W = 3 (1-rho)^2, tail = (1-rho)^3
  CHECK(w.profile(0.5) == doctest::Approx(0.75).epsilon(1e-13));
  CHECK(w.tail(0.5) == doctest::Approx(0.125).epsilon(1e-13));
  CHECK(w.moment(3.0) == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(w.has_base());
  CHECK(w.base_weight().kind() == RadialWeight::Kind::kConstant);
  CHECK_THROWS_AS(RadialWeight::w_derived(0.5, RadialWeight::constant()),
                  std::domain_error);

  // exact tail law: tail(rho) = base_tail(rho)^x (1-rho)^{x-1}
  for (const double x : {1.25, 2.0, 3.0}) {
    const RadialWeight base = RadialWeight::standard(1.0);
    const RadialWeight wd = RadialWeight::w_derived(x, base);
    for (double rho = 0.0; rho < 1.0; rho += 0.13) {
      const double want =
          std::pow(base.tail(rho), x) * std::pow(1.0 - rho, x - 1.0);
      CHECK(wd.tail(rho) == doctest::Approx(want).epsilon(1e-9));
    }
  }
}

TEST_CASE("omega_plus closed forms") {
  const RadialWeight w = RadialWeight::omega_plus(RadialWeight::constant());
  // profile(rho) = int_rho^1 ds/s = -log(rho)
  CHECK(w.profile(0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  // moments divide: (w_+)_x = w_x/(x+1)
  CHECK(w.moment(3.0) == doctest::Approx(0.0625).epsilon(1e-12));
  CHECK(w.has_base());
}

TEST_CASE("custom and sampled weights fall back to quadrature") {
  const RadialWeight tri =
      RadialWeight::custom([](double r) { return 2.0 * (1.0 - r); },
                           "triangular");
  CHECK(tri.tail(0.0) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(tri.tail(0.5) == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(tri.moment(1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-11));

  const RadialWeight s = RadialWeight::from_samples({{0.0, 1.0}, {1.0, 1.0}});
  CHECK(s.profile(0.3) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(s.tail(0.25) == doctest::Approx(0.75).epsilon(1e-9));
  CHECK_THROWS_AS(RadialWeight::from_samples({}), std::domain_error);
  CHECK_THROWS_AS(RadialWeight::from_samples({{2.0, 1.0}}), std::domain_error);
}

TEST_CASE("tail quadrature route agrees with closed forms") {
  for (const RadialWeight& w :
       {RadialWeight::constant(), RadialWeight::standard(1.0),
        RadialWeight::w_derived(2.0, RadialWeight::constant())}) {
    for (const double rho : {0.0, 0.3, 0.9, 0.99}) {
      const double a = w.tail(rho);
      const double b = w.tail_by_quadrature(rho);
      CHECK(std::abs(a - b) <= 1e-9 * std::max(1e-300, std::abs(a)));
    }
  }
}

TEST_CASE("moment and sigma values are memoized bit-exactly") {
  const RadialWeight w = RadialWeight::standard(0.5);
  const double a = w.moment(7.25);
  const double b = w.moment(7.25);
  CHECK(a == b);
  const RadialWeight copy = w;  // copies share the cache
  CHECK(copy.moment(7.25) == a);
  CHECK(w.sigma(11) == copy.sigma(11));
}

TEST_CASE("domain errors") {
  const RadialWeight w = RadialWeight::constant();
  CHECK_THROWS_AS(w.profile(1.0), std::domain_error);
  CHECK_THROWS_AS(w.profile(-0.1), std::domain_error);
  CHECK_THROWS_AS(w.tail(1.0), std::domain_error);
  CHECK_THROWS_AS(w.moment(-0.5), std::domain_error);
}

TEST_CASE("doubling classification: constant weight") {
  const RadialWeight w = RadialWeight::constant();
  const DoublingReport up = upper_doubling_report(w);
  CHECK(up.is_upper);
  CHECK(up.upper_constant == doctest::Approx(2.0).epsilon(1e-9));
  const DoublingReport low = lower_doubling_report(w);
  CHECK(low.is_lower);
  CHECK(low.lower_C > 1.001);
  CHECK(growth_exponent(w) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("doubling classification: standard weight alpha=1") {
  const RadialWeight w = RadialWeight::standard(1.0);
  const DoublingReport up = upper_doubling_report(w);
  CHECK(up.is_upper);
  CHECK(up.upper_constant == doctest::Approx(4.0).epsilon(1e-5));
  const DoublingReport low = lower_doubling_report(w);
  CHECK(low.is_lower);
  CHECK(low.lower_K == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(low.lower_C == doctest::Approx(44.5217391304).epsilon(1e-6));
  CHECK(growth_exponent(w) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("growth exponent requires a doubling weight") {
  // A rapidly vanishing weight has tail decaying faster than any power, so
  // no ladder exponent certifies it and classification fails.
  const RadialWeight fast = RadialWeight::custom(
      [](double r) {
        const double u = 1.0 - r;
        return std::exp(-1.0 / std::max(u, 1e-14)) / std::max(u * u, 1e-14);
      },
      "rapid");
  CHECK_THROWS_AS(growth_exponent(fast), ClassificationError);
}
