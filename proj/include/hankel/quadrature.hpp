// Copyright (c) 2026 the hankelkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace hankel {

// Grid and tolerance knobs shared by the norm evaluators.  The defaults are
// part of the documented contract: T=1024 angular nodes make the angular mean
// exact for trig polynomials of degree < T/2 (evaluators bump T automatically
// when a series degree requires it), the radial rule clusters nodes at 1 via
// the cubic map r = 1 - (1-s)^3, and the sup grids use a dyadic radii ladder
// that reaches 1 - 2^-20.
struct QuadratureSpec {
  int radial = 400;       // composite Gauss-Legendre nodes after the cubic map
  int angular = 1024;     // power of two; uniform angles, trapezoid-exact mean
  int sup_radii = 161;    // radii 1 - 2^{-k/8}, k = 0..sup_radii-1
  int sup_angles = 64;    // uniform angles for sup-type norms
  double tail_rel_tol = 1e-10;
  double moment_rel_tol = 1e-12;

  // Radii ladder for sup-type norms: 0 = 1-2^0, ..., up to 1-2^-20.
  std::vector<double> sup_radii_ladder() const;
  // Dilation grid used by the BMOA-type norms: 0.01..0.99 step 0.01 plus a
  // few deep points.
  std::vector<double> rho_grid() const;
};

// ----- adaptive scalar quadrature -------------------------------------------

// Adaptive Gauss-Legendre (15-point panels, recursive bisection) on [a,b].
// Throws ToleranceError when the requested relative tolerance is unreachable
// within the depth budget.
double adaptive_integrate(const std::function<double(double)>& f, double a,
                          double b, double rel_tol, int max_depth = 30);

// ----- radial/angular machinery for disk integrals ---------------------------

// Nodes r_i and base weights b_i such that  ∫_0^1 g(r) dr ≈ Σ b_i g(r_i),
// clustered at 1 through r = 1 - (1-s)^3.
struct RadialRule {
  std::vector<double> r;
  std::vector<double> w;
};
RadialRule make_radial_rule(int nodes);

// Values of the polynomial Σ c_n (r z)^n at the T-th roots of unity times r,
// computed by folding coefficients mod T and one FFT.  T must be a power of
// two.  values[t] = Σ_n c_n r^n e^{2πi n t / T}.
void values_on_circle(const std::vector<std::complex<double>>& coeffs, double r,
                      int T, std::vector<std::complex<double>>& values);

// Projection of sampled circle values onto e^{imθ} modes:
// out[m] = (1/T) Σ_t values[t] e^{-2πi m t / T}, m = 0..count-1.
void circle_modes(const std::vector<std::complex<double>>& values, int count,
                  std::vector<std::complex<double>>& out);

int next_pow2(int n);

}  // namespace hankel
