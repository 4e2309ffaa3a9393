// Copyright (c) 2026 the hankelkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hankel/measures.hpp"
#include "hankel/norms.hpp"
#include "hankel/operators.hpp"
#include "hankel/quadrature.hpp"
#include "hankel/series.hpp"
#include "hankel/weights.hpp"

namespace hankel {

// The bilinear Hankel form H_μ on A^p_ω × A^q_ω splits into three regimes by
// r = (1/p + 1/q)^{-1}: r > 1 (dual exponent r' applies), r = 1 (BMOA-type
// dual), r < 1 (Bloch dual through the derived weight W_{1/r,ω}).
enum class FormCase { kCaseI, kCaseII, kCaseIII };

struct HankelFormSpec {
  ComplexMeasure mu;
  RadialWeight omega;
  double p = 2.0;
  double q = 2.0;

  double r() const { return p * q / (p + q); }
  double r_conjugate() const;  // r/(r-1); only defined in case I
  FormCase form_case() const;
};

struct NormEstimate {
  enum class Kind { kBand, kLowerBound };
  double value = 0.0;
  Kind kind = Kind::kLowerBound;
  std::size_t truncation = 0;
  std::size_t iterations = 0;
  std::vector<double> history;  // per-iteration (22) or per-restart (pq) values
};

// Cheaper quadrature used inside ascent loops; final reported values are
// re-evaluated with the caller's full-quality quadrature settings.
QuadratureSpec ascent_quadrature();

struct AscentOptions {
  int restarts = 8;
  int steps = 200;
  std::uint64_t seed = 20260825ull;
  QuadratureSpec inner_quad = ascent_quadrature();
};

// Largest singular value of the n×n matrix A_{mk} = m_{m+k}/√(σ_m σ_k) by
// power iteration on A*A (tolerance on the Rayleigh quotient); this is the
// exact form norm over degree-<n polynomials when p = q = 2.
NormEstimate form_norm_22(const HankelFormSpec& spec, std::size_t n,
                          double rayleigh_tol = 1e-8,
                          std::size_t max_iterations = 20000);

// Multi-restart alternating projected-gradient ascent of
// |H_μ(f,g)| / (‖f‖_{p,ω} ‖g‖_{q,ω}) over degree-<n pairs; reported value is
// a lower bound for the form norm.
NormEstimate form_norm_pq(const HankelFormSpec& spec, std::size_t n,
                          const AscentOptions& opts = {},
                          const QuadratureSpec& quad = {});

// Theorem-driven dual norm of the symbol:
//   case I   ‖P_ω[μ̄]‖_{r',ω};
//   case II  ‖P_ω[μ̄]‖ in the D_ω BMOA(∞,ω) norm;
//   case III Bloch norm of P_W[μ̄] with W = W_{1/r,ω}.
double dual_norm(const HankelFormSpec& spec, std::size_t n,
                 const QuadratureSpec& quad = {});

// Direct lower estimate of the operator norm A^p_ω → conj(A^q_ω) by gradient
// ascent of ‖H_μ f‖_{q,ω}/‖f‖_{p,ω}; restricted to 1 < q < ∞ (the form-side
// estimate carries q ≤ 1).
NormEstimate operator_norm_pq(const HankelFormSpec& spec, std::size_t n,
                              const AscentOptions& opts = {},
                              const QuadratureSpec& quad = {});

struct SymbolEstimate {
  std::size_t symbol = 0;
  std::size_t truncation = 0;
  double form = 0.0;
  double dual = 0.0;
  double ratio = 0.0;
};
struct Theorem1Report {
  std::vector<SymbolEstimate> rows;
  double min_ratio = 0.0;  // over symbols at the top truncation
  double max_ratio = 0.0;
  double band = 0.0;       // max_ratio / min_ratio
};
// Form-vs-dual ratio table over a symbol corpus and a truncation ladder; the
// band verdict is taken at the largest truncation.
Theorem1Report theorem1_ratio_experiment(
    const std::vector<ComplexMeasure>& corpus, const RadialWeight& omega,
    double p, double q, const std::vector<std::size_t>& n_ladder,
    const AscentOptions& opts = {}, const QuadratureSpec& quad = {});

struct DetectorReport {
  double value = 0.0;
  Complex at{0.0, 0.0};
  bool divergent = false;
};

// Default evaluation grid for the boundary-growth detectors: the sup radii
// ladder plus a fine small-radius sweep, at 16 angles.
std::vector<Complex> detector_grid(const QuadratureSpec& quad = {});

// Hankel-measure detector: sup over the grid of
//   |∫ (1-z̄ξ)^{-4-2β} dμ(ξ)| · (1-|z|²)^{2β+4-2/p} / ω̂(|z|)^{2/p},
// with the integral in closed form over atoms plus the finite density part.
// Requires p ≤ 2 and p(β+1)+p > γ+1 for the growth exponent γ of ω.  The
// divergent flag trips when the running sup keeps setting records over the
// last radius decade of the grid.
DetectorReport hankel_measure_detector(const ComplexMeasure& mu,
                                       const RadialWeight& omega, double p,
                                       double beta,
                                       const std::vector<Complex>& z_grid = {});

// Standard-weight criterion: sup over the grid of
//   (1-|z|²)^t · |∫ (1-zξ̄)^{-2-α-t} dμ̄(ξ)|,  t > 0, α > -1;
// finite/divergent verdicts are t-independent on admissible symbols.
DetectorReport standard_criterion(const ComplexMeasure& mu, double alpha,
                                  double t,
                                  const std::vector<Complex>& z_grid = {});

// Factorization F = f·g with f = F^{r/p}, g = F^{r/q} for F zero-free on the
// closed disk (checked by boundary minimum modulus and winding number); the
// power series are built by log/exp coefficient recurrences to degree n.
std::pair<TaylorSeries, TaylorSeries> factor_zero_free(const TaylorSeries& F,
                                                       double r, double p,
                                                       double q,
                                                       std::size_t n);

}  // namespace hankel
