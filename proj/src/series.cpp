// Copyright (c) 2026 the hankelkit authors
// SPDX-License-Identifier: Apache-2.0
#include "hankel/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace hankel {

TaylorSeries TaylorSeries::monomial(std::size_t n, Complex c) {
  std::vector<Complex> coeffs(n + 1, Complex{0.0, 0.0});
  coeffs[n] = c;
  return TaylorSeries(std::move(coeffs));
}

TaylorSeries TaylorSeries::constant(Complex c) {
  return TaylorSeries(std::vector<Complex>{c});
}

Complex TaylorSeries::evaluate(Complex z) const {
  Complex acc{0.0, 0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc;
}

TaylorSeries TaylorSeries::dilated(double rho) const {
  if (!(rho >= 0.0) || rho > 1.0) {
    throw std::domain_error("dilation factor must lie in [0,1], got " +
                            std::to_string(rho));
  }
  std::vector<Complex> out(coeffs_.size());
  double rn = 1.0;
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    out[n] = coeffs_[n] * rn;
    rn *= rho;
  }
  return TaylorSeries(std::move(out));
}

TaylorSeries TaylorSeries::derivative() const {
  if (coeffs_.size() <= 1) return TaylorSeries(std::vector<Complex>{});
  std::vector<Complex> out(coeffs_.size() - 1);
  for (std::size_t n = 1; n < coeffs_.size(); ++n) {
    out[n - 1] = coeffs_[n] * static_cast<double>(n);
  }
  return TaylorSeries(std::move(out));
}

TaylorSeries TaylorSeries::truncated(std::size_t n_max) const {
  std::vector<Complex> out(coeffs_.begin(),
                           coeffs_.begin() +
                               std::min(coeffs_.size(), n_max + 1));
  return TaylorSeries(std::move(out));
}

TaylorSeries TaylorSeries::conjugated_coeffs() const {
  std::vector<Complex> out(coeffs_.size());
  for (std::size_t n = 0; n < coeffs_.size(); ++n) out[n] = std::conj(coeffs_[n]);
  return TaylorSeries(std::move(out));
}

TaylorSeries operator+(const TaylorSeries& a, const TaylorSeries& b) {
  std::vector<Complex> out(std::max(a.size(), b.size()), Complex{0.0, 0.0});
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = a.at(n) + b.at(n);
  return TaylorSeries(std::move(out));
}

TaylorSeries operator-(const TaylorSeries& a, const TaylorSeries& b) {
  std::vector<Complex> out(std::max(a.size(), b.size()), Complex{0.0, 0.0});
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = a.at(n) - b.at(n);
  return TaylorSeries(std::move(out));
}

TaylorSeries operator*(Complex s, const TaylorSeries& a) {
  std::vector<Complex> out(a.coeffs());
  for (auto& c : out) c *= s;
  return TaylorSeries(std::move(out));
}

TaylorSeries multiply(const TaylorSeries& a, const TaylorSeries& b, int trunc) {
  if (a.empty() || b.empty()) return TaylorSeries{};
  const std::size_t full = a.size() + b.size() - 1;
  const std::size_t len =
      trunc < 0 ? full : std::min<std::size_t>(full, trunc + 1);
  std::vector<Complex> out(len, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i >= len) break;
    const Complex ai = a.coeffs()[i];
    const std::size_t j_max = std::min(b.size(), len - i);
    for (std::size_t j = 0; j < j_max; ++j) out[i + j] += ai * b.coeffs()[j];
  }
  return TaylorSeries(std::move(out));
}

TaylorSeries kernel(const RadialWeight& w, Complex a, std::size_t n_max) {
  if (!(std::abs(a) < 1.0)) {
    throw std::domain_error("kernel point must lie in the open unit disk");
  }
  std::vector<Complex> out(n_max + 1);
  const Complex abar = std::conj(a);
  Complex an{1.0, 0.0};
  for (std::size_t n = 0; n <= n_max; ++n) {
    out[n] = an / w.sigma(n);
    an *= abar;
  }
  return TaylorSeries(std::move(out));
}

}  // namespace hankel
