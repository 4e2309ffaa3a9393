// Copyright (c) 2026 the hankelkit authors
// SPDX-License-Identifier: Apache-2.0
//
// Release gate: eleven numbered criteria, one PASS/FAIL line each, exit 0
// only when every criterion holds.  Criterion 6 carries a documented
// limitation: the dilated-projection residual decays like (1 - rho), so its
// "below 1e-6 at rho = 0.999" clause cannot hold for unit-scale symbols; the
// gate reports that clause honestly and the expected overall verdict is
// 10/11.  The ctest registration pins this exact outcome.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "hankel/descriptors.hpp"
#include "hankel/hankelnorm.hpp"
#include "hankel/measures.hpp"
#include "hankel/norms.hpp"
#include "hankel/operators.hpp"
#include "hankel/series.hpp"
#include "hankel/suites.hpp"
#include "hankel/weights.hpp"

using namespace hankel;
using Clock = std::chrono::steady_clock;

namespace {

struct Gate {
  int passed = 0;
  int failed = 0;
  std::vector<int> failed_ids;

  void report(int id, bool pass, const std::string& title,
              const std::string& detail) {
    std::printf("[%2d] %s  %s (%s)\n", id, pass ? "PASS" : "FAIL",
                title.c_str(), detail.c_str());
    std::fflush(stdout);
    if (pass) {
      ++passed;
    } else {
      ++failed;
      failed_ids.push_back(id);
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

SuiteRequest request(const std::string& suite) {
  SuiteRequest req;
  req.suite = suite;
  req.config_hash = fnv1a64("");
  return req;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

bool checks_pass(const SuiteResult& res,
                 const std::vector<std::string>& names, double* worst) {
  bool all = true;
  if (worst != nullptr) *worst = 0.0;
  for (const SuiteCheck& c : res.checks) {
    for (const std::string& n : names) {
      if (c.name == n) {
        all = all && c.pass;
        if (worst != nullptr) *worst = std::max(*worst, c.value);
      }
    }
  }
  return all;
}

// ---- criterion bodies ------------------------------------------------------

void criterion_identities(Gate& g) {
  const auto t0 = Clock::now();
  const SuiteResult res = run_suite(request("identities"));
  const double secs = seconds_since(t0);
  g.report(1, res.pass() && secs < 5.0,
           "operator identity suite coefficient-exact at 1e-13 (N=256, four "
           "weights)",
           fmt("%.0f checks, %.2f s < 5 s", double(res.checks.size()), secs));
}

void criterion_reproducing(Gate& g, const SuiteResult& duality,
                           double duality_secs) {
  double worst = 0.0;
  const bool ok = checks_pass(duality, {"reproducing_kernel"}, &worst);
  int count = 0;
  for (const SuiteCheck& c : duality.checks) {
    if (c.name == "reproducing_kernel") ++count;
  }
  g.report(2, ok && count == 40 && duality_secs < 10.0,
           "reproducing property at 1e-8 for 20 random polynomials per "
           "weight (deg <= 20, |a| <= 0.9)",
           fmt("max err %.2e, %.2f s < 10 s", worst, duality_secs));
}

void criterion_standard_kernel(Gate& g) {
  const Complex a = std::polar(0.6, 0.5);
  double worst = 0.0;
  for (const double beta : {0.0, 0.5, 2.0}) {
    const TaylorSeries k = kernel(RadialWeight::standard(beta), a, 50);
    double binom = 1.0;
    for (std::size_t n = 0; n <= 50; ++n) {
      if (n > 0) binom *= (n + 1.0 + beta) / n;
      const Complex want = binom * std::pow(std::conj(a), n);
      worst = std::max(worst, std::abs(k.at(n) - want) /
                                  std::max(1.0, std::abs(want)));
    }
  }
  g.report(3, worst <= 1e-12,
           "standard-weight kernel matches the binomial closed form "
           "(beta in {0, 0.5, 2}, N=50)",
           fmt("max coeff err %.2e <= 1e-12", worst));
}

void criterion_derived_tail(Gate& g) {
  const std::vector<std::pair<std::string, RadialWeight>> bases = {
      {"const", RadialWeight::constant()},
      {"standard:1", RadialWeight::standard(1.0)},
  };
  double worst = 0.0;
  for (const auto& [name, base] : bases) {
    for (const double x : {1.25, 2.0, 3.0}) {
      const RadialWeight wd = RadialWeight::w_derived(x, base);
      for (int i = 1; i <= 50; ++i) {
        const double rho = 0.02 * i - 0.01;
        const double want =
            std::pow(base.tail(rho), x) * std::pow(1.0 - rho, x - 1.0);
        worst = std::max(worst, std::abs(wd.tail(rho) - want) / want);
      }
    }
  }
  g.report(4, worst <= 1e-9,
           "derived-weight tail identity at 1e-9 relative on a 50-point "
           "grid (x in {1.25, 2, 3}, two bases)",
           fmt("max rel err %.2e <= 1e-9", worst));
}

void criterion_rank_one(Gate& g) {
  const auto t0 = Clock::now();
  const RadialWeight cw = RadialWeight::constant();
  double worst_rel = 0.0;
  bool monotone = true;
  for (const double a : {0.3, 0.5, 0.7}) {
    const ComplexMeasure mu =
        ComplexMeasure::from_atoms({{Complex{a, 0}, Complex{1, 0}}});
    double prev = 0.0;
    double at_top = 0.0;
    for (const std::size_t n : {25, 50, 100, 200}) {
      at_top = form_norm_22({mu, cw, 2, 2}, n).value;
      monotone = monotone && at_top >= prev - 1e-7 * std::max(1.0, prev);
      prev = at_top;
    }
    const double want = 1.0 / ((1 - a * a) * (1 - a * a));
    worst_rel = std::max(worst_rel, std::abs(at_top - want) / want);
  }
  const double secs = seconds_since(t0);
  g.report(5,
           worst_rel <= 0.02 && monotone && secs < 20.0,
           "rank-one form norm matches (1-a^2)^{-2} within 2% and grows "
           "with N (a in {0.3, 0.5, 0.7}, N=200)",
           fmt("max rel err %.2e, %.2f s < 20 s", worst_rel, secs));
}

void criterion_residual(Gate& g) {
  // Same pairs the duality suite sweeps: four polynomials, three atomic
  // symbols, two weights.
  const std::vector<TaylorSeries> fs = {
      TaylorSeries({Complex{1, 0}, Complex{1, 0}}),
      TaylorSeries::monomial(3),
      TaylorSeries({Complex{0, 0}, Complex{2, 0}, Complex{-1, 0}}),
      TaylorSeries({Complex{0.5, 0}, Complex{0, 1}, Complex{0.25, 0},
                    Complex{0, -0.5}, Complex{1, 0}, Complex{-0.125, 0}}),
  };
  const std::vector<ComplexMeasure> mus = {
      ComplexMeasure::from_atoms({{Complex{0.5, 0}, Complex{1, 0}}}),
      ComplexMeasure::from_atoms({{Complex{0, 0.8}, Complex{1, 0}}}),
      ComplexMeasure::from_atoms({{Complex{0.6, 0}, Complex{0.5, 0}},
                                  {Complex{-0.2, 0.4}, Complex{0, 1}}}),
  };
  const std::vector<RadialWeight> ws = {RadialWeight::constant(),
                                        RadialWeight::standard(1.0)};
  bool decreasing = true;
  double worst_tail = 0.0;
  for (const RadialWeight& w : ws) {
    for (const TaylorSeries& F : fs) {
      for (const ComplexMeasure& mu : mus) {
        double prev = std::numeric_limits<double>::infinity();
        double last = 0.0;
        for (const double rho : {0.9, 0.99, 0.999}) {
          last = dilated_projection_residual(F, mu, w, rho);
          decreasing = decreasing && last < prev;
          prev = last;
        }
        worst_tail = std::max(worst_tail, last);
      }
    }
  }
  const bool tail_ok = worst_tail < 1e-6;
  std::printf("     criterion 6 clause A (strictly decreasing along rho): "
              "%s\n",
              decreasing ? "holds" : "violated");
  std::printf("     criterion 6 clause B (residual < 1e-6 at rho=0.999): "
              "%s (worst %.3e; first-order decay in 1-rho makes this "
              "unreachable at unit scale)\n",
              tail_ok ? "holds" : "violated", worst_tail);
  g.report(6, decreasing && tail_ok,
           "dilated-projection residual decreasing and below 1e-6 at "
           "rho=0.999",
           fmt("worst residual at 0.999: %.3e", worst_tail));
}

void criterion_theorem1(Gate& g) {
  struct Case {
    const char* label;
    double p, q;
    RadialWeight omega;
  };
  const std::vector<Case> cases = {
      {"I", 4, 4, RadialWeight::constant()},
      {"II", 2, 2, RadialWeight::standard(0.0)},
      {"III", 1, 1, RadialWeight::constant()},
  };
  bool all = true;
  std::string detail;
  for (const Case& c : cases) {
    SuiteRequest req = request("theorem1");
    req.p = c.p;
    req.q = c.q;
    req.omega = c.omega;
    const auto t0 = Clock::now();
    const SuiteResult res = run_suite(req);
    const double secs = seconds_since(t0);
    const double band =
        res.min_ratio > 0.0 ? res.max_ratio / res.min_ratio : 1e300;
    const bool ok = res.pass() && band <= 10.0 && secs < 300.0;
    all = all && ok;
    detail += std::string(detail.empty() ? "" : "; ") + "case " + c.label +
              fmt(": band %.2f, %.0f s", band, secs);
  }
  g.report(7, all,
           "form-vs-dual ratio bands <= 10 over the eight-symbol corpus "
           "(cases I, II, III; each < 5 min)",
           detail);
}

void criterion_kernel_norms(Gate& g, const SuiteResult& kn) {
  double worst = 0.0;
  const bool ok = checks_pass(
      kn, {"kernel_norm_ratio_band", "kernel_norm_ratio2_band"}, &worst);
  g.report(8, ok,
           "kernel-norm comparison stays within a factor-4 band on "
           "|z| in [0.5, 0.99] for three weight/exponent triples",
           fmt("worst band %.3f <= 4", worst));
}

void criterion_frac_bloch(Gate& g, const SuiteResult& kn) {
  double band = 0.0;
  const bool bands_ok = checks_pass(kn, {"frac_bloch_band"}, &band);
  const bool pairs_ok = checks_pass(kn, {"bfrac_condition"}, nullptr);
  const bool self_false =
      !bfrac_condition(RadialWeight::constant(), RadialWeight::constant())
           .holds;
  g.report(9, bands_ok && pairs_ok && self_false,
           "fractional-derivative Bloch band <= 10 over the 12-polynomial "
           "corpus; the integral condition rejects omega = nu",
           fmt("band %.3f <= 10, self-pair rejected: %.0f", band,
               self_false ? 1.0 : 0.0));
}

void criterion_detector(Gate& g) {
  const SuiteResult res = run_suite(request("hankel-measure"));
  const bool ok = checks_pass(res,
                              {"detector_finite",
                               "detector_divergent_on_escaping",
                               "t_invariance_verdicts"},
                              nullptr);
  g.report(10, ok,
           "measure detector: finite on the symbol corpus, divergent on "
           "the escaping family, t-invariant verdicts",
           ok ? "all detector checks hold" : "a detector check failed");
}

void criterion_matvec(Gate& g) {
  const std::size_t n = 4096;
  std::mt19937_64 rng(0x243F6A8885A308D3ull);
  const auto u = [&rng] {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
  };
  double naive_total = 0.0;
  double fast_total = 0.0;
  double worst = 0.0;

  // warm-up so transform plan setup is not billed to the timed runs
  {
    std::vector<Complex> m(2 * n - 1, Complex{1, 0}), x(n, Complex{1, 0});
    (void)hankel_matvec(m, x);
  }
  for (int inst = 0; inst < 10; ++inst) {
    std::vector<Complex> moments(2 * n - 1), x(n);
    for (auto& v : moments) v = Complex{2 * u() - 1, 2 * u() - 1};
    for (auto& v : x) v = Complex{2 * u() - 1, 2 * u() - 1};

    const auto t0 = Clock::now();
    const std::vector<Complex> fast = hankel_matvec(moments, x);
    fast_total += seconds_since(t0);

    const auto t1 = Clock::now();
    std::vector<Complex> ref(n, Complex{0, 0});
    for (std::size_t m = 0; m < n; ++m) {
      Complex acc{0, 0};
      for (std::size_t k = 0; k < n; ++k) acc += moments[m + k] * x[k];
      ref[m] = acc;
    }
    naive_total += seconds_since(t1);

    double scale = 0.0;
    for (const Complex& v : ref) scale = std::max(scale, std::abs(v));
    for (std::size_t i = 0; i < n; ++i) {
      worst = std::max(worst, std::abs(fast[i] - ref[i]) /
                                  std::max(1.0, scale));
    }
  }
  const double speedup = fast_total > 0.0 ? naive_total / fast_total : 1e300;
  g.report(11, speedup >= 20.0 && worst <= 1e-11,
           "fast Hankel matvec at N=4096: >= 20x the direct sum and "
           "matching it to 1e-11 on 10 instances",
           fmt("speedup %.0fx, max rel err %.2e", speedup, worst));
}

}  // namespace

int main() {
  std::printf("hankelkit acceptance gate (tool %s)\n", kToolVersion);
  Gate g;

  criterion_identities(g);

  const auto dt0 = Clock::now();
  const SuiteResult duality = run_suite(request("duality"));
  const double duality_secs = seconds_since(dt0);
  criterion_reproducing(g, duality, duality_secs);

  criterion_standard_kernel(g);
  criterion_derived_tail(g);
  criterion_rank_one(g);
  criterion_residual(g);
  criterion_theorem1(g);

  const SuiteResult kn = run_suite(request("kernel-norms"));
  criterion_kernel_norms(g, kn);
  criterion_frac_bloch(g, kn);

  criterion_detector(g);
  criterion_matvec(g);

  if (g.failed == 0) {
    std::printf("ACCEPTANCE VERDICT: 11/11 pass\n");
    return 0;
  }
  if (g.failed == 1 && g.failed_ids[0] == 6) {
    std::printf(
        "ACCEPTANCE VERDICT: 10/11 pass; criterion 6 fails its 1e-6 tail "
        "clause (documented limitation)\n");
    return 1;
  }
  std::printf("ACCEPTANCE VERDICT: %d/11 pass; unexpected failures:",
              g.passed);
  for (const int id : g.failed_ids) std::printf(" %d", id);
  std::printf("\n");
  return 1;
}
