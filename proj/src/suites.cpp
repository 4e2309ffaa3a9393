// Copyright (c) 2026 the hankelkit authors
// SPDX-License-Identifier: Apache-2.0
#include "hankel/suites.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "hankel/descriptors.hpp"
#include "hankel/errors.hpp"
#include "hankel/norms.hpp"
#include "hankel/operators.hpp"

namespace hankel {

namespace {

using nlohmann::ordered_json;

constexpr double kBandBound = 10.0;

void add_check(SuiteResult& res, std::string name, bool pass, double value,
               double bound, std::string detail = "") {
  res.checks.push_back(
      {std::move(name), pass, value, bound, std::move(detail)});
}

std::string sanitize_csv(std::string s) {
  for (auto& c : s) {
    if (c == ',' || c == '\n') c = ';';
  }
  return s;
}

// Deterministic probe polynomial with decaying, phase-varied coefficients.
TaylorSeries probe_series(std::size_t degree, unsigned salt) {
  std::vector<Complex> c(degree + 1);
  for (std::size_t n = 0; n <= degree; ++n) {
    const double d = static_cast<double>(n);
    const double s = static_cast<double>(salt);
    c[n] = std::pow(0.85, d) * Complex(std::cos(0.7 * d + 0.3 + 0.1 * s),
                                       std::sin(1.3 * d + 0.05 * s));
  }
  return TaylorSeries(std::move(c));
}

// max_n |a_n - b_n| / max(1, |b_n|): per-coefficient relative mismatch.
double max_rel_coeff_err(const TaylorSeries& got, const TaylorSeries& want) {
  const std::size_t n = std::max(got.size(), want.size());
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double err =
        std::abs(got.at(k) - want.at(k)) / std::max(1.0, std::abs(want.at(k)));
    worst = std::max(worst, err);
  }
  return worst;
}

std::vector<ComplexMeasure> resolve_corpus(const SuiteRequest& req) {
  if (req.corpus_explicit) {
    bool any = false;
    for (const auto& mu : req.corpus) {
      if (!mu.empty()) any = true;
    }
    if (req.corpus.empty() || !any) {
      throw UnsupportedInputError("no symbols: the corpus is empty");
    }
    return req.corpus;
  }
  if (!req.corpus.empty()) return req.corpus;
  return default_symbol_corpus(req.omega);
}

std::vector<std::size_t> ladder_or(const SuiteRequest& req,
                                   std::vector<std::size_t> fallback) {
  return req.n_ladder.empty() ? std::move(fallback) : req.n_ladder;
}

double conjugate_exponent(double q) { return q / (q - 1.0); }

ordered_json json_num(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

// ---------------------------------------------------------------------------
// identities
// ---------------------------------------------------------------------------
SuiteResult run_identities(const SuiteRequest& req) {
  SuiteResult res;
  res.suite = "identities";
  res.csv_header = {"check", "omega", "nu", "max_rel_err", "tol", "pass"};
  const std::size_t n_top =
      req.n_ladder.empty()
          ? 256
          : *std::max_element(req.n_ladder.begin(), req.n_ladder.end());
  res.n_ladder = {n_top};

  const std::vector<std::pair<std::string, RadialWeight>> ws = {
      {"const", RadialWeight::constant()},
      {"standard:0.5", RadialWeight::standard(0.5)},
      {"standard:1", RadialWeight::standard(1.0)},
      {"wderived:2:const", RadialWeight::w_derived(2.0, RadialWeight::constant())},
  };
  const double tol = 1e-13;
  const TaylorSeries f = probe_series(n_top, 1);
  ComplexMeasure mu = ComplexMeasure::from_atoms(
      {{Complex{0.4, 0.0}, Complex{1.0, 0.0}},
       {Complex{-0.3, 0.2}, Complex{0.0, 0.5}}});

  const auto record = [&](const std::string& check, const std::string& an,
                          const std::string& bn, double err, double bound) {
    add_check(res, check, err <= bound, err, bound, an + " vs " + bn);
    res.csv_rows.push_back({check, sanitize_csv(an), sanitize_csv(bn),
                            format_g17(err), format_g17(bound),
                            err <= bound ? "1" : "0"});
  };

  for (const auto& [an, aw] : ws) {
    for (const auto& [bn, bw] : ws) {
      const TaylorSeries rf = frac_R(aw, bw, f);
      record("inverse_law", an, bn,
             max_rel_coeff_err(frac_R(bw, aw, rf), f), tol);
      record("composition_upper_lower", an, bn,
             max_rel_coeff_err(d_upper(bw, d_lower(aw, f)), rf), tol);
      record("composition_commuted", an, bn,
             max_rel_coeff_err(d_lower(aw, d_upper(bw, f)), rf), tol);
      record("composition_swapped", an, bn,
             max_rel_coeff_err(d_upper(aw, d_lower(bw, f)),
                               frac_R(bw, aw, f)),
             tol);
      for (const Complex a : {Complex{0.3, 0.0}, Complex{-0.55, 0.2}}) {
        record("kernel_intertwining", an, bn,
               max_rel_coeff_err(frac_R(aw, bw, kernel(aw, a, n_top)),
                                 kernel(bw, a, n_top)),
               tol);
      }
      record("projection_intertwining", an, bn,
             max_rel_coeff_err(frac_R(aw, bw, project(aw, mu, true, n_top)),
                               project(bw, mu, true, n_top)),
             tol);
    }
  }
  for (const auto& [an, aw] : ws) {
    record("d_upper_is_fracR_one_omegaplus", an, "omegaplus(" + an + ")",
           max_rel_coeff_err(frac_R(RadialWeight::constant(),
                                    RadialWeight::omega_plus(aw), f),
                             d_upper(aw, f)),
           tol);
  }

  // Standard-weight kernel against the binomial expansion of
  // (1 - conj(a) xi)^(-2-beta).
  for (const double beta : {0.0, 0.5, 2.0}) {
    const Complex a = std::polar(0.6, 0.5);
    const TaylorSeries k = kernel(RadialWeight::standard(beta), a, 50);
    double worst = 0.0;
    double coeff = 1.0;  // C_0 of (1-w)^(-2-beta)
    Complex apow{1.0, 0.0};
    for (std::size_t n = 0; n <= 50; ++n) {
      const Complex want = coeff * apow;
      worst = std::max(worst, std::abs(k.at(n) - want) /
                                  std::max(1.0, std::abs(want)));
      coeff *= (2.0 + beta + static_cast<double>(n)) /
               (static_cast<double>(n) + 1.0);
      apow *= std::conj(a);
    }
    record("standard_kernel_binomial", "standard:" + format_g17(beta), "",
           worst, 1e-12);
  }

  // W tail closed form: quadrature of the W profile against
  // tail(base)^x (1-rho)^(x-1) on a 50-point grid.
  for (const double x : {1.25, 2.0, 3.0}) {
    for (const auto& [bn, bw] :
         {std::pair<std::string, RadialWeight>{"const", RadialWeight::constant()},
          std::pair<std::string, RadialWeight>{"standard:1",
                                               RadialWeight::standard(1.0)}}) {
      const RadialWeight w = RadialWeight::w_derived(x, bw);
      double worst = 0.0;
      for (int i = 1; i <= 50; ++i) {
        const double rho = 0.02 * i - 0.01;
        const double want = std::pow(bw.tail(rho), x) * std::pow(1.0 - rho, x - 1.0);
        const double got = w.tail_by_quadrature(rho);
        worst = std::max(worst, std::abs(got - want) / std::abs(want));
      }
      record("w_exact_tail", "wderived:" + format_g17(x) + ":" + bn, bn, worst,
             1e-9);
    }
  }

  // Parseval cross-check of the quadrature norm.
  {
    const TaylorSeries g = probe_series(64, 3);
    for (const auto& [an, aw] : ws) {
      const double a = bergman_norm(g, aw, 2.0);
      const double b = norm2_coeff(g, aw);
      record("parseval_p2", an, "", std::abs(a - b) / b, 1e-10);
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// duality
// ---------------------------------------------------------------------------
SuiteResult run_duality(const SuiteRequest& req) {
  SuiteResult res;
  res.suite = "duality";
  res.csv_header = {"check", "weight", "instance", "error", "tol", "pass"};

  const std::vector<std::pair<std::string, RadialWeight>> ws = {
      {"const", RadialWeight::constant()},
      {"standard:1", RadialWeight::standard(1.0)},
  };
  const auto record = [&](const std::string& check, const std::string& wn,
                          const std::string& inst, double err, double bound) {
    add_check(res, check, err <= bound, err, bound, wn + " " + inst);
    res.csv_rows.push_back({check, sanitize_csv(wn), sanitize_csv(inst),
                            format_g17(err), format_g17(bound),
                            err <= bound ? "1" : "0"});
  };

  // Reproducing property with seeded random polynomials.
  std::mt19937_64 rng(req.seed);
  const auto uniform = [&rng]() {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
  };
  for (const auto& [wn, w] : ws) {
    for (int inst = 0; inst < 20; ++inst) {
      const std::size_t deg = 1 + static_cast<std::size_t>(uniform() * 20.0);
      std::vector<Complex> c(std::min<std::size_t>(deg, 20) + 1);
      for (auto& v : c) v = Complex(2.0 * uniform() - 1.0, 2.0 * uniform() - 1.0);
      const TaylorSeries f{std::move(c)};
      const Complex a = std::polar(0.9 * uniform(), 2.0 * std::numbers::pi * uniform());
      const Complex lhs = inner_product(f, kernel(w, a, 256), w);
      const Complex want = f.evaluate(a);
      record("reproducing_kernel", wn, "instance " + std::to_string(inst),
             std::abs(lhs - want) / std::max(1.0, std::abs(want)), 1e-8);
    }
  }

  // Pairing: coefficient sum against the quadrature companion.
  for (const auto& [wn, w] : ws) {
    const TaylorSeries f = probe_series(12, 4);
    const TaylorSeries g = probe_series(12, 7);
    for (const double rho : {0.5, 0.9}) {
      const PairingResult pr = pairing_omega_omega(f, g, w, rho);
      record("pairing_sum_vs_quadrature", wn, "rho=" + format_g17(rho),
             std::abs(pr.sum_form - pr.quadrature_form) /
                 std::max(1.0, std::abs(pr.sum_form)),
             1e-9);
    }
  }
  {
    // f = g = 1, constant weight: the sum form collapses to rho/4.
    const PairingResult pr =
        pairing_omega_omega(TaylorSeries::constant(Complex{1.0, 0.0}),
                            TaylorSeries::constant(Complex{1.0, 0.0}),
                            RadialWeight::constant(), 0.8);
    record("pairing_rank_one_exact", "const", "rho=0.8",
           std::abs(pr.sum_form - Complex{0.2, 0.0}), 1e-15);
  }

  // Operator-form duality: <(H f)_rho, conj(g)>_omega -> H(f, g).
  {
    const ComplexMeasure mu = ComplexMeasure::from_atoms(
        {{Complex{0.5, 0.0}, Complex{1.0, 0.0}},
         {std::polar(0.3, std::numbers::pi / 3.0), Complex{0.0, 1.0}}});
    const TaylorSeries f = probe_series(8, 11);
    const TaylorSeries g = probe_series(8, 13);
    for (const auto& [wn, w] : ws) {
      const std::vector<Complex> m = mu.moments(16);
      const Complex target = hankel_form_eval(m, f, g);
      std::vector<Complex> y(g.size(), Complex{0.0, 0.0});
      for (std::size_t n = 0; n < g.size(); ++n) {
        for (std::size_t k = 0; k < f.size(); ++k) y[n] += f.at(k) * m[n + k];
      }
      double prev = std::numeric_limits<double>::infinity();
      bool decreasing = true;
      double last = 0.0;
      for (const double rho : {0.9, 0.99, 0.999}) {
        Complex acc{0.0, 0.0};
        double rp = 1.0;
        for (std::size_t n = 0; n < g.size(); ++n) {
          acc += rp * g.at(n) * y[n];
          rp *= rho;
        }
        last = std::abs(acc - target);
        decreasing = decreasing && last < prev;
        prev = last;
      }
      record("operator_duality_decreasing", wn, "rho ladder", decreasing ? 0.0 : 1.0,
             0.5);
      record("operator_duality_limit", wn, "rho=0.999",
             last / std::max(1.0, std::abs(target)), 1e-2);
    }
  }

  // Dilated-projection residual: strictly decreasing along the rho ladder.
  {
    const std::vector<std::pair<std::string, TaylorSeries>> fs = {
        {"1+z", TaylorSeries({Complex{1, 0}, Complex{1, 0}})},
        {"z3", TaylorSeries::monomial(3)},
        {"2z-z2", TaylorSeries({Complex{0, 0}, Complex{2, 0}, Complex{-1, 0}})},
        {"probe5", probe_series(5, 17)},
    };
    const std::vector<std::pair<std::string, ComplexMeasure>> mus = {
        {"delta0.5",
         ComplexMeasure::from_atoms({{Complex{0.5, 0}, Complex{1, 0}}})},
        {"delta0.8i",
         ComplexMeasure::from_atoms({{Complex{0, 0.8}, Complex{1, 0}}})},
        {"two-atoms",
         ComplexMeasure::from_atoms({{Complex{0.6, 0}, Complex{0.5, 0}},
                                     {Complex{-0.2, 0.4}, Complex{0, 1}}})},
    };
    for (const auto& [wn, w] : ws) {
      for (const auto& [fn, F] : fs) {
        for (const auto& [mn, m] : mus) {
          double prev = std::numeric_limits<double>::infinity();
          bool decreasing = true;
          for (const double rho : {0.9, 0.99, 0.999}) {
            const double r = dilated_projection_residual(F, m, w, rho);
            decreasing = decreasing && r < prev;
            prev = r;
          }
          record("projection_residual_decreasing", wn, fn + "/" + mn,
                 decreasing ? 0.0 : 1.0, 0.5);
        }
      }
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// kernel-norms
// ---------------------------------------------------------------------------
SuiteResult run_kernel_norms(const SuiteRequest& req) {
  SuiteResult res;
  res.suite = "kernel-norms";
  res.csv_header = {"part",  "omega", "nu",     "p",      "z",    "trunc",
                    "lhs_p", "rhs",   "ratio",  "rhs2",   "ratio2"};

  struct Triple {
    std::string on, nn;
    RadialWeight omega, nu;
    double p;
  };
  const std::vector<Triple> triples = {
      {"const", "const", RadialWeight::constant(), RadialWeight::constant(), 2.0},
      {"standard:1", "const", RadialWeight::standard(1.0), RadialWeight::constant(), 2.0},
      {"const", "const", RadialWeight::constant(), RadialWeight::constant(), 1.0},
  };
  const std::vector<double> ladder = {0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99};

  res.min_ratio = std::numeric_limits<double>::infinity();
  res.max_ratio = 0.0;
  for (const auto& t : triples) {
    const std::vector<KernelNormRow> rows =
        kernel_norm_comparison(t.omega, t.nu, t.p, ladder);
    double rmin = std::numeric_limits<double>::infinity(), rmax = 0.0;
    double r2min = rmin, r2max = 0.0;
    for (const auto& row : rows) {
      rmin = std::min(rmin, row.ratio);
      rmax = std::max(rmax, row.ratio);
      r2min = std::min(r2min, row.ratio2);
      r2max = std::max(r2max, row.ratio2);
      res.csv_rows.push_back({"kernel-norm", t.on, t.nn, format_g17(t.p),
                              format_g17(row.z), std::to_string(row.trunc),
                              format_g17(row.lhs_p), format_g17(row.rhs),
                              format_g17(row.ratio), format_g17(row.rhs2),
                              format_g17(row.ratio2)});
    }
    res.min_ratio = std::min(res.min_ratio, rmin);
    res.max_ratio = std::max(res.max_ratio, rmax);
    const std::string label =
        "(" + t.on + ", " + t.nn + ", p=" + format_g17(t.p) + ")";
    add_check(res, "kernel_norm_ratio_band", rmax / rmin <= 4.0, rmax / rmin,
              4.0, label);
    add_check(res, "kernel_norm_ratio2_band", r2max / r2min <= 4.0,
              r2max / r2min, 4.0, label);
  }

  // Fractional-derivative Bloch equivalence over the polynomial corpus.
  struct Pair {
    std::string on, nn;
    RadialWeight omega, nu;
    bool expect;
  };
  const RadialWeight triangular = RadialWeight::custom(
      [](double r) { return 2.0 * (1.0 - r); }, "triangular");
  const std::vector<Pair> pairs = {
      {"const", "triangular", RadialWeight::constant(), triangular, true},
      {"const", "wderived:2:const", RadialWeight::constant(),
       RadialWeight::w_derived(2.0, RadialWeight::constant()), true},
      {"const", "const", RadialWeight::constant(), RadialWeight::constant(),
       false},
  };
  const std::vector<TaylorSeries> polys = polynomial_corpus_12();
  for (const auto& pr : pairs) {
    const BfracReport rep = bfrac_condition(pr.omega, pr.nu);
    const std::string label = "(" + pr.on + ", " + pr.nn + ")";
    add_check(res, "bfrac_condition", rep.holds == pr.expect,
              rep.holds ? 1.0 : 0.0, pr.expect ? 1.0 : 0.0, label);
    if (!rep.holds || !pr.expect) continue;
    double bmin = std::numeric_limits<double>::infinity(), bmax = 0.0;
    for (std::size_t i = 0; i < polys.size(); ++i) {
      const double num = frac_bloch_sup(polys[i], pr.omega, pr.nu);
      const double den = bloch_norm(polys[i]).value;
      const double ratio = num / den;
      bmin = std::min(bmin, ratio);
      bmax = std::max(bmax, ratio);
      res.csv_rows.push_back({"frac-bloch", pr.on, pr.nn, "",
                              "poly" + std::to_string(i), "", format_g17(num),
                              format_g17(den), format_g17(ratio), "", ""});
    }
    add_check(res, "frac_bloch_band", bmax / bmin <= kBandBound, bmax / bmin,
              kBandBound, label);
  }
  return res;
}

// ---------------------------------------------------------------------------
// theorem1
// ---------------------------------------------------------------------------
std::string case_name(FormCase c) {
  switch (c) {
    case FormCase::kCaseI:
      return "case I";
    case FormCase::kCaseII:
      return "case II";
    case FormCase::kCaseIII:
      return "case III";
  }
  return "?";
}

SuiteResult run_theorem1(const SuiteRequest& req) {
  SuiteResult res;
  res.suite = "theorem1";
  const std::vector<ComplexMeasure> corpus = resolve_corpus(req);
  res.corpus_size = corpus.size();
  res.n_ladder = ladder_or(req, {16, 32, 64});
  res.csv_header = {"symbol", "trunc", "form", "dual", "ratio"};

  HankelFormSpec probe{corpus.front(), req.omega, req.p, req.q};
  const FormCase fc = probe.form_case();
  res.case_label = case_name(fc) + " (p=" + format_g17(req.p) +
                   ", q=" + format_g17(req.q) + ")";

  AscentOptions opts;
  opts.seed = req.seed;

  const Theorem1Report rep = theorem1_ratio_experiment(
      corpus, req.omega, req.p, req.q, res.n_ladder, opts);
  for (const auto& row : rep.rows) {
    res.csv_rows.push_back({std::to_string(row.symbol),
                            std::to_string(row.truncation),
                            format_g17(row.form), format_g17(row.dual),
                            format_g17(row.ratio)});
  }
  res.min_ratio = rep.min_ratio;
  res.max_ratio = rep.max_ratio;
  add_check(res, "ratio_band_top_truncation", rep.band <= kBandBound, rep.band,
            kBandBound, res.case_label);

  // Case II carries a second dual: the Bloch norm of the same projection,
  // banded against the first across the corpus.
  if (fc == FormCase::kCaseII) {
    const std::size_t top =
        *std::max_element(res.n_ladder.begin(), res.n_ladder.end());
    double bmin = std::numeric_limits<double>::infinity(), bmax = 0.0;
    double xmin = bmin, xmax = 0.0;
    for (std::size_t s = 0; s < corpus.size(); ++s) {
      const TaylorSeries g = project(req.omega, corpus[s], true, top);
      const double bloch = bloch_norm(g).value;
      const double dbmoa = d_omega_bmoa_norm(g, req.omega);
      double form = 0.0;
      for (const auto& row : rep.rows) {
        if (row.symbol == s && row.truncation == top) form = row.form;
      }
      const double r1 = form / bloch;
      bmin = std::min(bmin, r1);
      bmax = std::max(bmax, r1);
      const double r2 = dbmoa / bloch;
      xmin = std::min(xmin, r2);
      xmax = std::max(xmax, r2);
      res.csv_rows.push_back({"bloch:" + std::to_string(s),
                              std::to_string(top), format_g17(form),
                              format_g17(bloch), format_g17(r1)});
    }
    add_check(res, "ratio_band_bloch_dual", bmax / bmin <= kBandBound,
              bmax / bmin, kBandBound, "form vs bloch(P_omega mu-bar)");
    add_check(res, "dual_band_bmoa_vs_bloch", xmax / xmin <= kBandBound,
              xmax / xmin, kBandBound, "d_omega_bmoa vs bloch");
  }

  // Bilinearity: scaling the symbol scales both columns.
  {
    const std::size_t n = res.n_ladder.front();
    HankelFormSpec s1{corpus.front(), req.omega, req.p, req.q};
    HankelFormSpec s2{corpus.front().scaled(Complex{2.0, 0.0}), req.omega,
                      req.p, req.q};
    const bool spectral =
        std::abs(req.p - 2.0) < 1e-12 && std::abs(req.q - 2.0) < 1e-12;
    const double f1 = spectral ? form_norm_22(s1, n).value
                               : form_norm_pq(s1, n, opts).value;
    const double f2 = spectral ? form_norm_22(s2, n).value
                               : form_norm_pq(s2, n, opts).value;
    const double d1 = dual_norm(s1, n);
    const double d2 = dual_norm(s2, n);
    add_check(res, "scaling_form", std::abs(f2 / f1 - 2.0) <= 1e-6,
              f2 / f1, 2.0, "mu -> 2mu");
    add_check(res, "scaling_dual", std::abs(d2 / d1 - 2.0) <= 1e-9, d2 / d1,
              2.0, "mu -> 2mu");
  }
  return res;
}

// ---------------------------------------------------------------------------
// theorem2
// ---------------------------------------------------------------------------
SuiteResult run_theorem2(const SuiteRequest& req) {
  SuiteResult res;
  res.suite = "theorem2";
  if (!(req.q > 1.0)) {
    throw UnsupportedInputError(
        "theorem2 requires 1 < q < infinity; the form-side suite (theorem1) "
        "carries q <= 1");
  }
  const std::vector<ComplexMeasure> corpus = resolve_corpus(req);
  res.corpus_size = corpus.size();
  res.n_ladder = ladder_or(req, {16, 32, 64});
  res.csv_header = {"symbol", "trunc", "operator", "form_conjugate", "dual",
                    "op_form_ratio", "op_dual_ratio"};
  const double qc = conjugate_exponent(req.q);
  res.case_label = "operator (p=" + format_g17(req.p) +
                   ", q=" + format_g17(req.q) + ") vs form (p, q'=" +
                   format_g17(qc) + ")";

  AscentOptions opts;
  opts.seed = req.seed;
  const bool spectral =
      std::abs(req.p - 2.0) < 1e-12 && std::abs(qc - 2.0) < 1e-12;
  const std::size_t top =
      *std::max_element(res.n_ladder.begin(), res.n_ladder.end());

  struct Row {
    std::size_t symbol, trunc;
    double op, form, dual;
  };
  const auto run_symbol = [&](std::size_t s) {
    std::vector<Row> rows;
    HankelFormSpec op_spec{corpus[s], req.omega, req.p, req.q};
    HankelFormSpec form_spec{corpus[s], req.omega, req.p, qc};
    for (const std::size_t n : res.n_ladder) {
      Row r{s, n, 0.0, 0.0, 0.0};
      r.op = operator_norm_pq(op_spec, n, opts).value;
      r.form = spectral ? form_norm_22(form_spec, n).value
                        : form_norm_pq(form_spec, n, opts).value;
      r.dual = dual_norm(form_spec, n);
      rows.push_back(r);
    }
    return rows;
  };
  std::vector<std::future<std::vector<Row>>> futures;
  for (std::size_t s = 0; s < corpus.size(); ++s) {
    futures.push_back(std::async(std::launch::async, run_symbol, s));
  }
  double fmin = std::numeric_limits<double>::infinity(), fmax = 0.0;
  double dmin = fmin, dmax = 0.0;
  for (auto& fut : futures) {
    for (const Row& r : fut.get()) {
      const double rf = r.op / r.form;
      const double rd = r.dual > 0.0 ? r.op / r.dual
                                     : std::numeric_limits<double>::infinity();
      if (r.trunc == top) {
        fmin = std::min(fmin, rf);
        fmax = std::max(fmax, rf);
        dmin = std::min(dmin, rd);
        dmax = std::max(dmax, rd);
      }
      res.csv_rows.push_back({std::to_string(r.symbol), std::to_string(r.trunc),
                              format_g17(r.op), format_g17(r.form),
                              format_g17(r.dual), format_g17(rf),
                              format_g17(rd)});
    }
  }
  res.min_ratio = dmin;
  res.max_ratio = dmax;
  add_check(res, "operator_vs_form_band", fmax / fmin <= kBandBound,
            fmax / fmin, kBandBound, res.case_label);
  add_check(res, "operator_vs_dual_band", dmax / dmin <= kBandBound,
            dmax / dmin, kBandBound, res.case_label);

  // q <= 1 is rejected on the operator side by construction.
  {
    bool threw = false;
    try {
      HankelFormSpec bad{corpus.front(), req.omega, req.p, 1.0};
      operator_norm_pq(bad, 8, opts);
    } catch (const UnsupportedInputError&) {
      threw = true;
    }
    add_check(res, "operator_rejects_q_le_1", threw, threw ? 1.0 : 0.0, 1.0,
              "q=1");
  }
  // Scaling mu -> 2mu doubles the operator estimate.
  {
    HankelFormSpec s1{corpus.front(), req.omega, req.p, req.q};
    HankelFormSpec s2{corpus.front().scaled(Complex{2.0, 0.0}), req.omega,
                      req.p, req.q};
    const double o1 = operator_norm_pq(s1, res.n_ladder.front(), opts).value;
    const double o2 = operator_norm_pq(s2, res.n_ladder.front(), opts).value;
    add_check(res, "scaling_operator", std::abs(o2 / o1 - 2.0) <= 1e-6,
              o2 / o1, 2.0, "mu -> 2mu");
  }
  return res;
}

// ---------------------------------------------------------------------------
// hankel-measure
// ---------------------------------------------------------------------------
SuiteResult run_hankel_measure(const SuiteRequest& req) {
  SuiteResult res;
  res.suite = "hankel-measure";
  const double p = req.p;
  const double beta = 1.0;
  const std::vector<ComplexMeasure> corpus = resolve_corpus(req);
  res.corpus_size = corpus.size();
  res.n_ladder = ladder_or(req, {16, 64, 256});
  res.case_label = "p=" + format_g17(p) + ", beta=" + format_g17(beta);
  res.csv_header = {"symbol", "value", "at_re", "at_im", "divergent"};

  for (std::size_t s = 0; s < corpus.size(); ++s) {
    const DetectorReport rep =
        hankel_measure_detector(corpus[s], req.omega, p, beta);
    res.csv_rows.push_back({std::to_string(s), format_g17(rep.value),
                            format_g17(rep.at.real()), format_g17(rep.at.imag()),
                            rep.divergent ? "1" : "0"});
    add_check(res, "detector_finite", !rep.divergent && std::isfinite(rep.value),
              rep.value, 0.0, "symbol " + std::to_string(s));
  }

  const ComplexMeasure esc = escaping_atom_corpus();
  {
    const DetectorReport rep = hankel_measure_detector(esc, req.omega, p, beta);
    res.csv_rows.push_back({"escaping", format_g17(rep.value),
                            format_g17(rep.at.real()), format_g17(rep.at.imag()),
                            rep.divergent ? "1" : "0"});
    add_check(res, "detector_divergent_on_escaping", rep.divergent, rep.value,
              0.0, "escaping corpus");
  }

  // Verdict t-invariance of the standard-weight criterion on the same corpus.
  {
    bool invariant = true;
    for (const auto& mu : corpus) {
      const bool v1 = standard_criterion(mu, 1.0, 0.5).divergent;
      const bool v2 = standard_criterion(mu, 1.0, 1.0).divergent;
      const bool v3 = standard_criterion(mu, 1.0, 2.0).divergent;
      invariant = invariant && v1 == v2 && v2 == v3;
    }
    const bool e1 = standard_criterion(esc, 1.0, 0.5).divergent;
    const bool e2 = standard_criterion(esc, 1.0, 1.0).divergent;
    const bool e3 = standard_criterion(esc, 1.0, 2.0).divergent;
    invariant = invariant && e1 && e2 && e3;
    add_check(res, "t_invariance_verdicts", invariant, invariant ? 1.0 : 0.0,
              1.0, "t in {0.5, 1, 2}");
  }

  // Consistency: on the escaping corpus the theorem-1 dual norm grows along
  // the truncation ladder (the symbol is not a bounded-form symbol).
  {
    HankelFormSpec spec{esc, req.omega, 2.0, 2.0};
    double prev = -1.0;
    bool growing = true;
    double first = 0.0, last = 0.0;
    for (const std::size_t n : res.n_ladder) {
      const double d = dual_norm(spec, n);
      if (prev < 0.0) first = d;
      growing = growing && d > prev;
      prev = d;
      last = d;
    }
    add_check(res, "dual_norm_grows_on_escaping", growing && last > 1.5 * first,
              last / first, 1.5, "case II dual along ladder");
  }

  // Precondition rejections.
  {
    bool threw = false;
    try {
      hankel_measure_detector(corpus.front(), req.omega, 2.5, beta);
    } catch (const UnsupportedInputError&) {
      threw = true;
    }
    add_check(res, "detector_rejects_p_gt_2", threw, threw ? 1.0 : 0.0, 1.0,
              "p=2.5");
    threw = false;
    try {
      hankel_measure_detector(corpus.front(), RadialWeight::constant(), 0.5,
                              -0.8);
    } catch (const ClassificationError&) {
      threw = true;
    }
    add_check(res, "detector_rejects_small_exponent", threw, threw ? 1.0 : 0.0,
              1.0, "p=0.5, beta=-0.8");
  }
  return res;
}

// ---------------------------------------------------------------------------
// standard-criterion
// ---------------------------------------------------------------------------
SuiteResult run_standard_criterion(const SuiteRequest& req) {
  SuiteResult res;
  res.suite = "standard-criterion";
  const double alpha =
      req.omega.kind() == RadialWeight::Kind::kStandard ? req.omega.param() : 1.0;
  res.case_label = "alpha=" + format_g17(alpha);
  res.csv_header = {"symbol", "t", "value", "at_re", "at_im", "divergent"};

  const RadialWeight std_w = RadialWeight::standard(alpha);
  SuiteRequest sub = req;
  sub.omega = std_w;
  const std::vector<ComplexMeasure> corpus = resolve_corpus(sub);
  res.corpus_size = corpus.size();

  const std::vector<double> ts = {0.5, 1.0, 2.0};
  std::vector<std::vector<bool>> verdicts(corpus.size());
  for (std::size_t s = 0; s < corpus.size(); ++s) {
    for (const double t : ts) {
      const DetectorReport rep = standard_criterion(corpus[s], alpha, t);
      verdicts[s].push_back(rep.divergent);
      res.csv_rows.push_back({std::to_string(s), format_g17(t),
                              format_g17(rep.value), format_g17(rep.at.real()),
                              format_g17(rep.at.imag()),
                              rep.divergent ? "1" : "0"});
      add_check(res, "criterion_finite", !rep.divergent, rep.value, 0.0,
                "symbol " + std::to_string(s) + " t=" + format_g17(t));
    }
  }
  for (std::size_t s = 0; s < corpus.size(); ++s) {
    const bool same =
        verdicts[s][0] == verdicts[s][1] && verdicts[s][1] == verdicts[s][2];
    add_check(res, "t_invariance", same, same ? 1.0 : 0.0, 1.0,
              "symbol " + std::to_string(s));
  }

  // delta_0 is exactly 1 at every t.
  {
    const ComplexMeasure d0 =
        ComplexMeasure::from_atoms({{Complex{0, 0}, Complex{1, 0}}});
    const DetectorReport rep = standard_criterion(d0, alpha, 1.0);
    add_check(res, "delta0_exact", std::abs(rep.value - 1.0) <= 1e-12,
              rep.value, 1.0, "delta_0");
  }
  // delta_a closed form against a dense 1-D radial search; atoms aligned with
  // the grid's angular lattice.
  for (const double t : ts) {
    const double sexp = 2.0 + alpha + t;
    for (const double a : {0.35, 0.7}) {
      const Complex az = std::polar(a, 2.0 * std::numbers::pi * 2.0 / 16.0);
      const ComplexMeasure mu =
          ComplexMeasure::from_atoms({{az, Complex{1.0, 0.0}}});
      const DetectorReport rep = standard_criterion(mu, alpha, t);
      double oracle = 0.0;
      for (int i = 0; i <= 200000; ++i) {
        const double r = static_cast<double>(i) / 200001.0;
        oracle = std::max(oracle, std::pow(1.0 - r * r, t) *
                                      std::pow(1.0 - r * a, -sexp));
      }
      add_check(res, "delta_a_radial_oracle",
                rep.value <= oracle * (1.0 + 1e-9) &&
                    rep.value >= 0.98 * oracle,
                rep.value / oracle, 1.0,
                "a=" + format_g17(a) + " t=" + format_g17(t));
    }
  }
  // The escaping family is divergent at every t.
  {
    const ComplexMeasure esc = escaping_atom_corpus();
    bool all = true;
    for (const double t : ts) {
      const DetectorReport rep = standard_criterion(esc, alpha, t);
      all = all && rep.divergent;
      res.csv_rows.push_back({"escaping", format_g17(t), format_g17(rep.value),
                              format_g17(rep.at.real()),
                              format_g17(rep.at.imag()),
                              rep.divergent ? "1" : "0"});
    }
    add_check(res, "escaping_divergent_all_t", all, all ? 1.0 : 0.0, 1.0,
              "t in {0.5, 1, 2}");
  }
  return res;
}

}  // namespace

std::vector<ComplexMeasure> default_symbol_corpus(const RadialWeight& omega) {
  std::vector<ComplexMeasure> corpus;
  corpus.push_back(
      ComplexMeasure::from_atoms({{Complex{0.3, 0.0}, Complex{1.0, 0.0}}}));
  corpus.push_back(ComplexMeasure::from_atoms(
      {{std::polar(0.6, std::numbers::pi / 4.0), Complex{1.0, 0.0}}}));
  corpus.push_back(ComplexMeasure::from_atoms(
      {{std::polar(0.8, 2.0), Complex{0.5, 0.5}}}));
  corpus.push_back(
      ComplexMeasure::from_atoms({{Complex{0.5, 0.0}, Complex{1.0, 0.0}},
                                  {Complex{-0.5, 0.0}, Complex{0.0, 1.0}}}));
  corpus.push_back(ComplexMeasure::from_atoms(
      {{std::polar(0.7, -0.8), Complex{-0.75, 0.0}}}));
  ComplexMeasure d1;
  d1.set_density(TaylorSeries({Complex{0.5, 0.0}, Complex{1.0, 0.0}}), omega);
  corpus.push_back(d1);
  ComplexMeasure d2;
  d2.set_density(TaylorSeries({Complex{0.0, 0.1}, Complex{-0.25, 0.0},
                               Complex{0.0, 0.0}, Complex{1.0, 0.0}}),
                 omega);
  corpus.push_back(d2);
  ComplexMeasure d3;
  d3.set_density(
      TaylorSeries({Complex{0, 0}, Complex{0, 0}, Complex{0.0, 0.8}}), omega);
  corpus.push_back(d3);
  return corpus;
}

std::vector<TaylorSeries> polynomial_corpus_12() {
  std::vector<TaylorSeries> polys;
  polys.push_back(TaylorSeries::constant(Complex{1.0, 0.0}));
  polys.push_back(TaylorSeries::monomial(1));
  polys.push_back(TaylorSeries::monomial(2));
  polys.push_back(TaylorSeries::monomial(3));
  polys.push_back(TaylorSeries::monomial(5));
  polys.push_back(TaylorSeries::monomial(8));
  polys.push_back(TaylorSeries({Complex{1, 0}, Complex{1, 0}}));
  polys.push_back(TaylorSeries({Complex{1, 0}, Complex{0, 0}, Complex{-1, 0}}));
  polys.push_back(TaylorSeries(
      {Complex{0, 0}, Complex{1, 0}, Complex{0, 0}, Complex{1, 0}}));
  polys.push_back(TaylorSeries({Complex{0, 0}, Complex{2, 0}, Complex{0, 0},
                                Complex{-3, 0}, Complex{0, 0}, Complex{1, 0}}));
  polys.push_back(TaylorSeries({Complex{1, 0}, Complex{0, 0}, Complex{0, 1}}));
  polys.push_back(TaylorSeries({Complex{0.5, 0}, Complex{1, 0}, Complex{1, 0},
                                Complex{1, 0}}));
  return polys;
}

ComplexMeasure escaping_atom_corpus() {
  ComplexMeasure mu;
  for (int j = 1; j <= 24; ++j) {
    const double w = std::ldexp(1.0, -j);
    mu.add_atom(Complex{1.0 - w, 0.0}, Complex{w, 0.0});
  }
  return mu;
}

SuiteResult run_suite(const SuiteRequest& req) {
  if (req.suite == "identities") return run_identities(req);
  if (req.suite == "duality") return run_duality(req);
  if (req.suite == "kernel-norms") return run_kernel_norms(req);
  if (req.suite == "theorem1") return run_theorem1(req);
  if (req.suite == "theorem2") return run_theorem2(req);
  if (req.suite == "hankel-measure") return run_hankel_measure(req);
  if (req.suite == "standard-criterion") return run_standard_criterion(req);
  throw UnsupportedInputError(
      "unknown suite '" + req.suite +
      "'; expected one of identities, duality, kernel-norms, theorem1, "
      "theorem2, hankel-measure, standard-criterion");
}

std::string suite_csv(const SuiteResult& result) {
  std::ostringstream os;
  for (std::size_t i = 0; i < result.csv_header.size(); ++i) {
    os << (i ? "," : "") << result.csv_header[i];
  }
  os << '\n';
  for (const auto& row : result.csv_rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? "," : "") << row[i];
    }
    os << '\n';
  }
  return os.str();
}

std::string suite_verdict_json(const SuiteResult& result,
                               const SuiteRequest& req) {
  ordered_json j;
  j["suite"] = result.suite;
  j["case"] = result.case_label;
  j["corpus_size"] = result.corpus_size;
  j["n_ladder"] = result.n_ladder;
  j["min_ratio"] = json_num(result.min_ratio);
  j["max_ratio"] = json_num(result.max_ratio);
  j["verdict"] = result.pass() ? "pass" : "fail";
  ordered_json checks = ordered_json::array();
  for (const auto& c : result.checks) {
    ordered_json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    jc["value"] = json_num(c.value);
    jc["bound"] = json_num(c.bound);
    jc["detail"] = c.detail;
    checks.push_back(jc);
  }
  j["checks"] = checks;
  j["tool_version"] = kToolVersion;
  {
    char buf[32];
    std::snprintf(buf, sizeof buf, "0x%016llx",
                  static_cast<unsigned long long>(req.config_hash));
    j["config_hash"] = buf;
  }
  j["seed"] = req.seed;
  return j.dump(2) + "\n";
}

void write_suite_artifacts(const SuiteResult& result, const SuiteRequest& req,
                           const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  const std::filesystem::path dir(out_dir);
  {
    std::ofstream os(dir / (result.suite + ".csv"));
    if (!os) throw ParseError("cannot write artifact in " + out_dir);
    os << suite_csv(result);
  }
  {
    std::ofstream os(dir / (result.suite + "_verdict.json"));
    if (!os) throw ParseError("cannot write artifact in " + out_dir);
    os << suite_verdict_json(result, req);
  }
}

}  // namespace hankel
