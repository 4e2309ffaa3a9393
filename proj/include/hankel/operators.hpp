// Copyright (c) 2026 the hankelkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "hankel/measures.hpp"
#include "hankel/series.hpp"
#include "hankel/weights.hpp"

namespace hankel {

// Diagonal multiplier ratios r_n = ω_{2n+1}/ν_{2n+1} for n = 0..n_max.
std::vector<double> frac_multiplier(const RadialWeight& omega,
                                    const RadialWeight& nu,
                                    std::size_t n_max);

// R^{ω,ν} f: coefficient-wise multiplication by ω_{2n+1}/ν_{2n+1}.
TaylorSeries frac_R(const RadialWeight& omega, const RadialWeight& nu,
                    const TaylorSeries& f);

// D^ω f (divide coefficients by ω_{2n+1}) and D_ω f (multiply by ω_{2n+1});
// exact inverses of each other.
TaylorSeries d_upper(const RadialWeight& omega, const TaylorSeries& f);
TaylorSeries d_lower(const RadialWeight& omega, const TaylorSeries& f);

// Bilinear Hankel form H_μ(f,g) = Σ_{m,n} f_m g_n m_{m+n} = Σ_k (fg)_k m_k.
Complex hankel_form_eval(const ComplexMeasure& mu, const TaylorSeries& f,
                         const TaylorSeries& g);
Complex hankel_form_eval(const std::vector<Complex>& moments,
                         const TaylorSeries& f, const TaylorSeries& g);

// y_m = Σ_{n=0}^{N} moments_{m+n} x_n for m = 0..N, N = x.size()-1, computed
// by FFT convolution in O(N log N).  Requires moments.size() ≥ 2N+1.
std::vector<Complex> hankel_matvec(const std::vector<Complex>& moments,
                                   const std::vector<Complex>& x);

// Analytic representative of the (anti-analytic) small Hankel operator image:
// coefficients c_n = conj( (1/σ_n(ω)) Σ_k f_k m_{k+n} ), n = 0..n_max.
TaylorSeries hankel_operator_apply(const ComplexMeasure& mu,
                                   const RadialWeight& omega,
                                   const TaylorSeries& f, std::size_t n_max);

// Scaled Hankel matrix A_{mn} = moments_{m+n}·s_m·s_n (symmetric) with a fast
// matvec; the adjoint apply uses A* = conj(A).
struct HankelMatrixView {
  std::vector<Complex> moments;  // m_0 .. m_{2N}
  std::vector<double> scalings;  // s_0 .. s_N

  std::size_t dim() const { return scalings.size(); }
  std::vector<Complex> apply(const std::vector<Complex>& x) const;
  std::vector<Complex> apply_adjoint(const std::vector<Complex>& x) const;
};

}  // namespace hankel
