// Copyright (c) 2026 the hankelkit authors
// SPDX-License-Identifier: Apache-2.0
//
// Verification suites: each bundles a family of checks over a symbol corpus
// and produces a machine-readable verdict plus plot-ready CSV rows.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hankel/hankelnorm.hpp"
#include "hankel/measures.hpp"
#include "hankel/quadrature.hpp"
#include "hankel/series.hpp"
#include "hankel/weights.hpp"

namespace hankel {

struct SuiteCheck {
  std::string name;
  bool pass = false;
  double value = 0.0;  // measured quantity (max error, band, ratio, ...)
  double bound = 0.0;  // the limit it was compared against
  std::string detail;  // free-form context (weight pair, symbol id, ...)
};

struct SuiteResult {
  std::string suite;
  std::string case_label;  // e.g. "case I (p=4, q=4)"; empty if not applicable
  std::size_t corpus_size = 0;
  std::vector<std::size_t> n_ladder;
  double min_ratio = 0.0;  // 0 when the suite has no ratio table
  double max_ratio = 0.0;
  std::vector<SuiteCheck> checks;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;

  bool pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
};

struct SuiteRequest {
  std::string suite;
  RadialWeight omega = RadialWeight::constant();
  double p = 2.0;
  double q = 2.0;
  std::vector<std::size_t> n_ladder;    // empty -> per-suite default
  std::uint64_t seed = 20260825ull;
  std::vector<ComplexMeasure> corpus;   // empty -> built-in default corpus
  bool corpus_explicit = false;         // explicit empty corpus is an error
  std::uint64_t config_hash = 0;        // embedded into artifacts
};

// Built-in corpora -----------------------------------------------------------

// Eight symbols: five atomic measures at assorted radii/arguments and three
// anti-analytic polynomial densities conj(h) d(omega dA).
std::vector<ComplexMeasure> default_symbol_corpus(const RadialWeight& omega);

// Twelve polynomials exercising degree, sign patterns, and complex
// coefficients; all have nonzero Bloch norm.
std::vector<TaylorSeries> polynomial_corpus_12();

// Atoms at rho_j = 1 - 2^-j with masses 2^-j, j = 1..24: the escaping family
// whose detector sup grows through the deepest grid radii.
ComplexMeasure escaping_atom_corpus();

// Suites ---------------------------------------------------------------------
// Names: identities, duality, kernel-norms, theorem1, theorem2,
// hankel-measure, standard-criterion.
SuiteResult run_suite(const SuiteRequest& req);

// Artifacts ------------------------------------------------------------------
// Writes <out_dir>/<suite>.csv and <out_dir>/<suite>_verdict.json.  Outputs
// are deterministic for a fixed request (no timestamps); rerunning reproduces
// byte-identical files.
void write_suite_artifacts(const SuiteResult& result, const SuiteRequest& req,
                           const std::string& out_dir);

std::string suite_verdict_json(const SuiteResult& result,
                               const SuiteRequest& req);
std::string suite_csv(const SuiteResult& result);

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace hankel
