// Copyright (c) 2026 the hankelkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "hankel/weights.hpp"

namespace hankel {

using Complex = std::complex<double>;

// Truncated Taylor series Σ_{n≤N} c_n z^n.  A thin value type: the coefficient
// vector is the representation, and all operators work coefficient-wise.
class TaylorSeries {
 public:
  TaylorSeries() = default;
  explicit TaylorSeries(std::vector<Complex> coeffs)
      : coeffs_(std::move(coeffs)) {}
  static TaylorSeries monomial(std::size_t n, Complex c = {1.0, 0.0});
  static TaylorSeries constant(Complex c);

  const std::vector<Complex>& coeffs() const { return coeffs_; }
  std::vector<Complex>& coeffs() { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  bool empty() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Complex at(std::size_t n) const {
    return n < coeffs_.size() ? coeffs_[n] : Complex{0.0, 0.0};
  }

  Complex evaluate(Complex z) const;  // Horner; intended for |z| <= 1
  TaylorSeries dilated(double rho) const;        // c_n ρ^n
  TaylorSeries derivative() const;               // (n+1) c_{n+1}
  TaylorSeries truncated(std::size_t n_max) const;
  TaylorSeries conjugated_coeffs() const;        // conj(c_n)

 private:
  std::vector<Complex> coeffs_;
};

TaylorSeries operator+(const TaylorSeries& a, const TaylorSeries& b);
TaylorSeries operator-(const TaylorSeries& a, const TaylorSeries& b);
TaylorSeries operator*(Complex s, const TaylorSeries& a);

// Cauchy product, optionally truncated to degree trunc (trunc < 0: full).
TaylorSeries multiply(const TaylorSeries& a, const TaylorSeries& b,
                      int trunc = -1);

// Truncated reproducing kernel of the weighted A² space:
// B_a(ξ) = Σ_{n≤N} conj(a)^n ξ^n / σ_n(w),  σ_n = 2 ω_{2n+1}.
TaylorSeries kernel(const RadialWeight& w, Complex a, std::size_t n_max);

}  // namespace hankel
