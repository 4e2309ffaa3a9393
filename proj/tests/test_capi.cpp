// Copyright (c) 2026 the hankelkit authors
// SPDX-License-Identifier: Apache-2.0
//
// Exercises the shared-library C surface the way an external consumer would:
// only hankel_c.h, opaque handles, status codes, and hk_last_error().
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <string>

#include "hankel/hankel_c.h"

// Pure-C translation unit (capi_c_compile.c) proving the header compiles and
// links under -std=c11; returns a sentinel computed through the C API.
extern "C" double hk_c_compile_probe(void);

namespace {

struct Weight {
  hk_weight* w = nullptr;
  explicit Weight(const char* d) { REQUIRE(hk_weight_parse(d, &w) == HK_OK); }
  ~Weight() { hk_weight_free(w); }
};

}  // namespace

TEST_CASE("version and error text") {
  CHECK(std::strcmp(hk_version(), "0.1.0") == 0);
  hk_weight* w = nullptr;
  CHECK(hk_weight_parse("bogus:weight", &w) == HK_ERR_PARSE);
  CHECK(std::strlen(hk_last_error()) > 0);
  CHECK(hk_weight_parse(nullptr, &w) == HK_ERR_INVALID);
  CHECK(hk_weight_parse("const", nullptr) == HK_ERR_INVALID);
}

TEST_CASE("weights through the C surface") {
  Weight std1("standard:1");
  double v = 0.0;
  REQUIRE(hk_weight_tail(std1.w, 0.0, &v) == HK_OK);
  CHECK(v == doctest::Approx(4.0 / 3.0).epsilon(1e-13));
  REQUIRE(hk_weight_moment(std1.w, 1.0, &v) == HK_OK);
  CHECK(v == doctest::Approx(0.5).epsilon(1e-12));
  REQUIRE(hk_weight_sigma(std1.w, 1, &v) == HK_OK);
  CHECK(v == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  REQUIRE(hk_weight_tail_quadrature(std1.w, 0.5, &v) == HK_OK);
  CHECK(v == doctest::Approx(0.416666666666667).epsilon(1e-9));

  char* desc = nullptr;
  REQUIRE(hk_weight_describe(std1.w, &desc) == HK_OK);
  hk_weight* back = nullptr;
  REQUIRE(hk_weight_parse(desc, &back) == HK_OK);
  double v2 = 0.0;
  REQUIRE(hk_weight_tail(back, 0.25, &v) == HK_OK);
  REQUIRE(hk_weight_tail(std1.w, 0.25, &v2) == HK_OK);
  CHECK(v == v2);
  hk_weight_free(back);
  hk_string_free(desc);

  int up = 0, low = 0;
  double c = 0, k = 0, kc = 0;
  REQUIRE(hk_weight_upper_doubling(std1.w, &up, &c) == HK_OK);
  CHECK(up == 1);
  CHECK(c == doctest::Approx(4.0).epsilon(1e-5));
  REQUIRE(hk_weight_lower_doubling(std1.w, &low, &k, &kc) == HK_OK);
  CHECK(low == 1);
  double gamma = 0.0;
  REQUIRE(hk_weight_growth_exponent(std1.w, &gamma) == HK_OK);
  CHECK(gamma == doctest::Approx(2.0));

  // domain errors map to HK_ERR_DOMAIN
  CHECK(hk_weight_profile(std1.w, 1.5, &v) == HK_ERR_DOMAIN);
}

TEST_CASE("series through the C surface") {
  hk_series* s = nullptr;
  const double re[] = {1.0, 0.0, 0.5};
  REQUIRE(hk_series_create(re, nullptr, 3, &s) == HK_OK);
  size_t n = 0;
  REQUIRE(hk_series_size(s, &n) == HK_OK);
  CHECK(n == 3);
  double vr = 0, vi = 0;
  REQUIRE(hk_series_evaluate(s, 0.0, 1.0, &vr, &vi) == HK_OK);
  CHECK(vr == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(vi == doctest::Approx(0.0));

  const auto path =
      (std::filesystem::temp_directory_path() / "hk_capi_series.csv").string();
  REQUIRE(hk_series_write_csv(path.c_str(), s) == HK_OK);
  hk_series* r = nullptr;
  REQUIRE(hk_series_read_csv(path.c_str(), &r) == HK_OK);
  REQUIRE(hk_series_coeff(r, 2, &vr, &vi) == HK_OK);
  CHECK(vr == 0.5);
  hk_series_free(r);
  std::filesystem::remove(path);

  CHECK(hk_series_read_csv("/nonexistent.csv", &r) == HK_ERR_PARSE);
  hk_series_free(s);

  hk_series* m = nullptr;
  REQUIRE(hk_series_monomial(2, 1.0, 0.0, &m) == HK_OK);
  double bv = 0, ar = 0, ai = 0;
  REQUIRE(hk_bloch_norm(m, &bv, &ar, &ai) == HK_OK);
  CHECK(bv == doctest::Approx(0.769783548102948).epsilon(1e-12));
  hk_series_free(m);
}

TEST_CASE("measures and hankelnorm through the C surface") {
  hk_measure* mu = nullptr;
  REQUIRE(hk_measure_create(&mu) == HK_OK);
  REQUIRE(hk_measure_add_atom(mu, 0.5, 0.0, 1.0, 0.0) == HK_OK);
  double mr = 0, mi = 0;
  REQUIRE(hk_measure_moment(mu, 2, &mr, &mi) == HK_OK);
  CHECK(mr == doctest::Approx(0.25).epsilon(1e-15));

  Weight cw("const");
  double value = 0.0;
  REQUIRE(hk_form_norm_22(mu, cw.w, 200, &value) == HK_OK);
  CHECK(value == doctest::Approx(16.0 / 9.0).epsilon(1e-6));

  REQUIRE(hk_dual_norm(mu, cw.w, 4.0, 4.0, 64, &value) == HK_OK);
  CHECK(value == doctest::Approx(4.0 / 3.0).epsilon(1e-6));

  CHECK(hk_operator_norm_pq(mu, cw.w, 2.0, 1.0, 16, 1, &value) ==
        HK_ERR_UNSUPPORTED);
  CHECK(hk_hankel_measure_detector(mu, cw.w, 2.5, 1.0, &value, &mr, &mi,
                                   nullptr) == HK_ERR_UNSUPPORTED);

  double at_re = 0, at_im = 0;
  int divergent = -1;
  REQUIRE(hk_hankel_measure_detector(mu, cw.w, 2.0, 1.0, &value, &at_re,
                                     &at_im, &divergent) == HK_OK);
  CHECK(divergent == 0);
  CHECK(value > 0.0);

  REQUIRE(hk_standard_criterion(mu, 1.0, 1.0, &value, &at_re, &at_im,
                                &divergent) == HK_OK);
  CHECK(divergent == 0);
  hk_measure_free(mu);
}

TEST_CASE("measure text parsing") {
  hk_measure* mu = nullptr;
  REQUIRE(hk_measure_parse("atom 0.5 0 1 0; atom -0.5 0 0 1", nullptr, &mu) ==
          HK_OK);
  double mr = 0, mi = 0;
  REQUIRE(hk_measure_moment(mu, 1, &mr, &mi) == HK_OK);
  CHECK(mr == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(mi == doctest::Approx(-0.5).epsilon(1e-15));
  hk_measure_free(mu);
  CHECK(hk_measure_parse("atom 0.5", nullptr, &mu) == HK_ERR_PARSE);
}

TEST_CASE("operators through the C surface") {
  Weight cw("const");
  hk_series* k = nullptr;
  REQUIRE(hk_kernel(cw.w, 0.5, 0.0, 10, &k) == HK_OK);
  double vr = 0, vi = 0;
  REQUIRE(hk_series_coeff(k, 2, &vr, &vi) == HK_OK);
  CHECK(vr == doctest::Approx(0.75).epsilon(1e-13));

  hk_series* up = nullptr;
  REQUIRE(hk_d_upper(cw.w, k, &up) == HK_OK);
  hk_series* down = nullptr;
  REQUIRE(hk_d_lower(cw.w, up, &down) == HK_OK);
  double wr = 0, wi = 0;
  REQUIRE(hk_series_coeff(down, 2, &wr, &wi) == HK_OK);
  CHECK(wr == doctest::Approx(vr).epsilon(1e-14));
  hk_series_free(down);
  hk_series_free(up);
  hk_series_free(k);
}

TEST_CASE("suite runner through the C surface") {
  int pass = 0;
  char* verdict = nullptr;
  hk_suite_options opt = {};
  REQUIRE(hk_run_suite("standard-criterion", &opt, &pass, &verdict) == HK_OK);
  CHECK(pass == 1);
  REQUIRE(verdict != nullptr);
  CHECK(std::string(verdict).find("\"verdict\": \"pass\"") !=
        std::string::npos);
  hk_string_free(verdict);

  CHECK(hk_run_suite("nope", &opt, &pass, &verdict) == HK_ERR_UNSUPPORTED);
  CHECK(hk_run_suite(nullptr, &opt, &pass, &verdict) == HK_ERR_INVALID);
}

TEST_CASE("header is consumable from plain C") {
  CHECK(hk_c_compile_probe() == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
}
