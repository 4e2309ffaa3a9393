// Copyright (c) 2026 the hankelkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <vector>

namespace hankel::detail {

// In-place complex DFT, no normalization.  sign = -1 forward, +1 inverse
// (inverse must be divided by size by the caller).  Backed by FFTW; plan
// bookkeeping is serialized internally so calls are thread-safe.
void fft_inplace(std::vector<std::complex<double>>& a, int sign);

// Linear convolution via zero-padded FFTs; result length is a.size()+b.size()-1.
std::vector<std::complex<double>> convolve(
    const std::vector<std::complex<double>>& a,
    const std::vector<std::complex<double>>& b);

}  // namespace hankel::detail
