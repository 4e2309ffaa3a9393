// Copyright (c) 2026 the hankelkit authors
// SPDX-License-Identifier: Apache-2.0
#include "hankel/operators.hpp"

#include <algorithm>
#include <stdexcept>

#include "hankel/errors.hpp"
#include "hankel/fft.hpp"

namespace hankel {

std::vector<double> frac_multiplier(const RadialWeight& omega,
                                    const RadialWeight& nu,
                                    std::size_t n_max) {
  std::vector<double> r(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    // sigma(n) = 2*omega_{2n+1} is memoized per weight; the factor 2 cancels.
    r[n] = omega.sigma(n) / nu.sigma(n);
  }
  return r;
}

TaylorSeries frac_R(const RadialWeight& omega, const RadialWeight& nu,
                    const TaylorSeries& f) {
  std::vector<Complex> out(f.size());
  for (std::size_t n = 0; n < f.size(); ++n) {
    out[n] = f.coeffs()[n] * (omega.sigma(n) / nu.sigma(n));
  }
  return TaylorSeries(std::move(out));
}

TaylorSeries d_upper(const RadialWeight& omega, const TaylorSeries& f) {
  std::vector<Complex> out(f.size());
  for (std::size_t n = 0; n < f.size(); ++n) {
    out[n] = f.coeffs()[n] * (2.0 / omega.sigma(n));
  }
  return TaylorSeries(std::move(out));
}

TaylorSeries d_lower(const RadialWeight& omega, const TaylorSeries& f) {
  std::vector<Complex> out(f.size());
  for (std::size_t n = 0; n < f.size(); ++n) {
    out[n] = f.coeffs()[n] * (0.5 * omega.sigma(n));
  }
  return TaylorSeries(std::move(out));
}

Complex hankel_form_eval(const ComplexMeasure& mu, const TaylorSeries& f,
                         const TaylorSeries& g) {
  if (f.empty() || g.empty()) return {0.0, 0.0};
  const TaylorSeries fg = multiply(f, g);
  return hankel_form_eval(mu.moments(fg.size() - 1), f, g);
}

Complex hankel_form_eval(const std::vector<Complex>& moments,
                         const TaylorSeries& f, const TaylorSeries& g) {
  if (f.empty() || g.empty()) return {0.0, 0.0};
  const TaylorSeries fg = multiply(f, g);
  if (moments.size() < fg.size()) {
    throw UnsupportedInputError(
        "hankel_form_eval: need moments to degree " +
        std::to_string(fg.size() - 1) + ", got " +
        std::to_string(moments.size()) + " entries");
  }
  Complex s{0.0, 0.0};
  for (std::size_t k = 0; k < fg.size(); ++k) s += fg.coeffs()[k] * moments[k];
  return s;
}

std::vector<Complex> hankel_matvec(const std::vector<Complex>& moments,
                                   const std::vector<Complex>& x) {
  if (x.empty()) return {};
  const std::size_t n = x.size() - 1;
  if (moments.size() < 2 * n + 1) {
    throw UnsupportedInputError(
        "hankel_matvec: moments length " + std::to_string(moments.size()) +
        " < required 2N+1 = " + std::to_string(2 * n + 1));
  }
  std::vector<Complex> xr(x.rbegin(), x.rend());
  const std::vector<Complex> conv = detail::convolve(moments, xr);
  return std::vector<Complex>(conv.begin() + static_cast<std::ptrdiff_t>(n),
                              conv.begin() + static_cast<std::ptrdiff_t>(2 * n + 1));
}

TaylorSeries hankel_operator_apply(const ComplexMeasure& mu,
                                   const RadialWeight& omega,
                                   const TaylorSeries& f, std::size_t n_max) {
  if (f.empty()) return TaylorSeries{};
  const std::size_t k_big = std::max(n_max, f.size() - 1);
  std::vector<Complex> x(f.coeffs());
  x.resize(k_big + 1, Complex{0.0, 0.0});
  const std::vector<Complex> y = hankel_matvec(mu.moments(2 * k_big), x);
  std::vector<Complex> c(n_max + 1);
  for (std::size_t m = 0; m <= n_max; ++m) {
    c[m] = std::conj(y[m] / omega.sigma(m));
  }
  return TaylorSeries(std::move(c));
}

std::vector<Complex> HankelMatrixView::apply(
    const std::vector<Complex>& x) const {
  if (x.size() != dim()) {
    throw UnsupportedInputError("HankelMatrixView::apply: dimension mismatch");
  }
  std::vector<Complex> xs(x.size());
  for (std::size_t n = 0; n < x.size(); ++n) xs[n] = x[n] * scalings[n];
  std::vector<Complex> y = hankel_matvec(moments, xs);
  for (std::size_t m = 0; m < y.size(); ++m) y[m] *= scalings[m];
  return y;
}

std::vector<Complex> HankelMatrixView::apply_adjoint(
    const std::vector<Complex>& x) const {
  std::vector<Complex> xc(x.size());
  for (std::size_t n = 0; n < x.size(); ++n) xc[n] = std::conj(x[n]);
  std::vector<Complex> y = apply(xc);
  for (auto& v : y) v = std::conj(v);
  return y;
}

}  // namespace hankel
