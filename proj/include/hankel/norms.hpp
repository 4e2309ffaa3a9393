// Copyright (c) 2026 the hankelkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "hankel/quadrature.hpp"
#include "hankel/series.hpp"
#include "hankel/weights.hpp"

namespace hankel {

// ‖f‖_{p,ω} = ( 2 ∫_0^1 M_p^p(r,f) ω(r) r dr )^{1/p}, with the angular mean
// M_p^p taken over T uniform angles (T is bumped to keep trig-polynomial
// integrands exact) and the radial integral on the clustered composite rule.
double bergman_norm(const TaylorSeries& f, const RadialWeight& w, double p,
                    const QuadratureSpec& quad = {});

// ⟨f,g⟩_ω = ∫_D f conj(g) ω dA by the same quadrature.
Complex inner_product(const TaylorSeries& f, const TaylorSeries& g,
                      const RadialWeight& w, const QuadratureSpec& quad = {});

// Coefficient-exact companions (Parseval): used as cross-checks and fast paths.
double norm2_coeff(const TaylorSeries& f, const RadialWeight& w);
Complex inner_product_coeff(const TaylorSeries& f, const TaylorSeries& g,
                            const RadialWeight& w);

struct BlochReport {
  double value = 0.0;
  Complex at{0.0, 0.0};  // maximizing grid point of (1-|z|²)|f'(z)|
};
// sup_grid (1-|z|²)|f'(z)| + |f(0)|.
BlochReport bloch_norm(const TaylorSeries& f, const QuadratureSpec& quad = {});

// Garsia-style BMO norm: sup_z ( P[|f|²](z) - |f(z)|² )^{1/2} over the sup
// grid, where P[|f|²] is the harmonic extension of the boundary modulus
// computed from b_k = Σ_n f_{n+k} conj(f_n).
double garsia_bmo(const TaylorSeries& f, const QuadratureSpec& quad = {});

// BMOA(∞,ω) norm: max over the dilation grid of garsia_bmo(f_ρ)·ω̂(ρ).
double bmoa_infty_norm(const TaylorSeries& f, const RadialWeight& w,
                       const QuadratureSpec& quad = {});

// ‖D^ω g‖_{BMOA(∞,ω)} + |g(0)| where D^ω divides coefficients by ω_{2n+1}.
double d_omega_bmoa_norm(const TaylorSeries& g, const RadialWeight& w,
                         const QuadratureSpec& quad = {});

struct PairingResult {
  Complex sum_form;         // Σ_n f_n conj(g_n) ρ^{2n+1} (ω_{2n+1})²
  Complex quadrature_form;  // ρ·⟨f_ρ, (D_ω g)_ρ⟩_ω / 2  (normalization-corrected)
};
PairingResult pairing_omega_omega(const TaylorSeries& f, const TaylorSeries& g,
                                  const RadialWeight& w, double rho,
                                  const QuadratureSpec& quad = {});

// sup_grid ( ν̂(|z|)/ω̂(|z|) ) |R^{ω,ν} f(z)| with the fractional multiplier
// ω_{2n+1}/ν_{2n+1} applied coefficient-wise.
double frac_bloch_sup(const TaylorSeries& f, const RadialWeight& omega,
                      const RadialWeight& nu, const QuadratureSpec& quad = {});

struct BfracReport {
  bool holds = false;
  double sup_ratio = 0.0;          // max over the grid of LHS(ρ)/RHS(ρ)
  double last_decade_ratio = 0.0;  // max(last grid decade) / max(earlier grid)
};
// Integral condition  ∫_0^ρ ω̂/(ν̂(1-t)) dt ≲ ω̂(ρ)/ν̂(ρ): holds when the
// ratio of the two sides is grid-stable (last-decade max within 10% of the
// earlier max).
BfracReport bfrac_condition(const RadialWeight& omega, const RadialWeight& nu,
                            std::vector<double> grid = {});

struct KernelNormRow {
  double z = 0.0;      // |z|
  int trunc = 0;       // kernel truncation chosen for this |z|
  double lhs_p = 0.0;  // ‖B_z^ν‖_{p,ω}^p
  double rhs = 0.0;    // ∫_0^{|z|} ω̂(t)/(ν̂^p(t)(1-t)^p) dt
  double ratio = 0.0;
  double rhs2 = 0.0;   // ω̂(|z|)/(ν̂^p(|z|)(1-|z|)^{p-1})
  double ratio2 = 0.0;
};
// Kernel-norm comparison along a |z| ladder; the kernel truncation N(z) is
// grown until the coefficient tail drops below 1e-10 of the partial sum
// (ToleranceError when the cap does not suffice, naming the required N).
std::vector<KernelNormRow> kernel_norm_comparison(
    const RadialWeight& omega, const RadialWeight& nu, double p,
    const std::vector<double>& z_ladder, const QuadratureSpec& quad = {},
    int n_cap = 20000);

}  // namespace hankel
