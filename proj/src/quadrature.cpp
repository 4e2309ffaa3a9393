// Copyright (c) 2026 the hankelkit authors
// SPDX-License-Identifier: Apache-2.0
#include "hankel/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hankel/errors.hpp"
#include "hankel/fft.hpp"

namespace hankel {

namespace {

// 15-point Gauss-Legendre abscissas/weights on [-1,1].
constexpr int kGLN = 15;
constexpr double kGLX[kGLN] = {
    -0.9879925180204854, -0.9372733924007060, -0.8482065834104272,
    -0.7244177313601701, -0.5709721726085388, -0.3941513470775634,
    -0.2011940939974345, 0.0,                 0.2011940939974345,
    0.3941513470775634,  0.5709721726085388,  0.7244177313601701,
    0.8482065834104272,  0.9372733924007060,  0.9879925180204854};
constexpr double kGLW[kGLN] = {
    0.0307532419961173, 0.0703660474881081, 0.1071592204671719,
    0.1395706779261543, 0.1662692058169939, 0.1861610000155622,
    0.1984314853271116, 0.2025782419255613, 0.1984314853271116,
    0.1861610000155622, 0.1662692058169939, 0.1395706779261543,
    0.1071592204671719, 0.0703660474881081, 0.0307532419961173};

// 8-point Gauss-Legendre, used for the fixed composite radial rule.
constexpr int kGL8N = 8;
constexpr double kGL8X[kGL8N] = {
    -0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
    -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
    0.7966664774136267,  0.9602898564975363};
constexpr double kGL8W[kGL8N] = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
    0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
    0.2223810344533745, 0.1012285362903763};

double gl15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < kGLN; ++i) s += kGLW[i] * f(c + h * kGLX[i]);
  return s * h;
}

struct AdaptiveState {
  const std::function<double(double)>& f;
  double err_accum = 0.0;
  bool depth_exhausted = false;
};

double adapt(AdaptiveState& st, double a, double b, double whole, double eps,
             int depth) {
  const double m = 0.5 * (a + b);
  const double left = gl15(st.f, a, m);
  const double right = gl15(st.f, m, b);
  const double delta = left + right - whole;
  if (std::abs(delta) <= eps || b - a < 1e-15) {
    st.err_accum += std::abs(delta);
    return left + right;
  }
  if (depth <= 0) {
    st.depth_exhausted = true;
    st.err_accum += std::abs(delta);
    return left + right;
  }
  return adapt(st, a, m, left, 0.5 * eps, depth - 1) +
         adapt(st, m, b, right, 0.5 * eps, depth - 1);
}

}  // namespace

double adaptive_integrate(const std::function<double(double)>& f, double a,
                          double b, double rel_tol, int max_depth) {
  if (!(b >= a)) throw std::domain_error("adaptive_integrate: b < a");
  if (a == b) return 0.0;
  AdaptiveState st{f};
  const double rough = gl15(f, a, b);
  // Absolute budget derived from a first sweep; the tiny floor keeps
  // integrals that are legitimately ~0 from recursing forever.
  const double eps = std::max(rel_tol * std::abs(rough), 1e-305);
  const double value = adapt(st, a, b, rough, eps, max_depth);
  if (st.depth_exhausted &&
      st.err_accum > 10.0 * std::max(rel_tol * std::abs(value), 1e-305)) {
    throw ToleranceError(
        "adaptive_integrate: tolerance " + std::to_string(rel_tol) +
            " not reached (estimated error " + std::to_string(st.err_accum) +
            ")",
        st.err_accum);
  }
  return value;
}

std::vector<double> QuadratureSpec::sup_radii_ladder() const {
  std::vector<double> out;
  out.reserve(sup_radii);
  const double deepest = 20.0;  // 1 - 2^-20
  const double step = deepest / static_cast<double>(sup_radii - 1);
  for (int k = 0; k < sup_radii; ++k) {
    out.push_back(1.0 - std::exp2(-step * static_cast<double>(k)));
  }
  return out;
}

std::vector<double> QuadratureSpec::rho_grid() const {
  std::vector<double> out;
  for (int i = 1; i <= 99; ++i) out.push_back(0.01 * i);
  out.push_back(0.995);
  out.push_back(0.999);
  out.push_back(0.9999);
  return out;
}

RadialRule make_radial_rule(int nodes) {
  if (nodes < kGL8N) nodes = kGL8N;
  const int panels = (nodes + kGL8N - 1) / kGL8N;
  RadialRule rule;
  rule.r.reserve(panels * kGL8N);
  rule.w.reserve(panels * kGL8N);
  const double width = 1.0 / static_cast<double>(panels);
  for (int p = 0; p < panels; ++p) {
    const double a = p * width;
    const double c = a + 0.5 * width;
    const double h = 0.5 * width;
    for (int i = 0; i < kGL8N; ++i) {
      const double s = c + h * kGL8X[i];
      const double one_minus = 1.0 - s;
      // r = 1-(1-s)^3 clusters nodes at 1; Jacobian 3(1-s)^2.
      rule.r.push_back(1.0 - one_minus * one_minus * one_minus);
      rule.w.push_back(kGL8W[i] * h * 3.0 * one_minus * one_minus);
    }
  }
  return rule;
}

int next_pow2(int n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

void values_on_circle(const std::vector<std::complex<double>>& coeffs, double r,
                      int T, std::vector<std::complex<double>>& values) {
  values.assign(T, {0.0, 0.0});
  double rn = 1.0;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    values[n % static_cast<std::size_t>(T)] += coeffs[n] * rn;
    rn *= r;
  }
  detail::fft_inplace(values, +1);
}

void circle_modes(const std::vector<std::complex<double>>& values, int count,
                  std::vector<std::complex<double>>& out) {
  std::vector<std::complex<double>> work = values;
  detail::fft_inplace(work, -1);
  const double scale = 1.0 / static_cast<double>(values.size());
  out.assign(count, {0.0, 0.0});
  const int limit = std::min<int>(count, static_cast<int>(values.size()));
  for (int m = 0; m < limit; ++m) out[m] = work[m] * scale;
}

}  // namespace hankel
