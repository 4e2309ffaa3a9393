// Copyright (c) 2026 the hankelkit authors
// SPDX-License-Identifier: Apache-2.0
#include "hankel/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace hankel::detail {

namespace {

// FFTW's planner is not thread-safe, so plan creation/destruction is
// serialized globally.  Execution happens on per-thread buffers owned by the
// plan entry, which keeps fftw_execute calls lock-free and deterministic.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct PlanEntry {
  fftw_plan forward = nullptr;
  fftw_plan inverse = nullptr;
  fftw_complex* buf = nullptr;
  std::size_t n = 0;

  ~PlanEntry() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (forward) fftw_destroy_plan(forward);
    if (inverse) fftw_destroy_plan(inverse);
    if (buf) fftw_free(buf);
  }
};

PlanEntry& plan_for(std::size_t n) {
  thread_local std::unordered_map<std::size_t, PlanEntry> cache;
  PlanEntry& e = cache[n];
  if (e.n == 0) {
    std::lock_guard<std::mutex> lock(planner_mutex());
    e.buf = fftw_alloc_complex(n);
    if (!e.buf) throw std::bad_alloc();
    e.forward = fftw_plan_dft_1d(static_cast<int>(n), e.buf, e.buf,
                                 FFTW_FORWARD, FFTW_ESTIMATE);
    e.inverse = fftw_plan_dft_1d(static_cast<int>(n), e.buf, e.buf,
                                 FFTW_BACKWARD, FFTW_ESTIMATE);
    e.n = n;
  }
  return e;
}

}  // namespace

void fft_inplace(std::vector<std::complex<double>>& a, int sign) {
  if (a.empty()) return;
  PlanEntry& e = plan_for(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    e.buf[i][0] = a[i].real();
    e.buf[i][1] = a[i].imag();
  }
  fftw_execute(sign < 0 ? e.forward : e.inverse);
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] = {e.buf[i][0], e.buf[i][1]};
  }
}

std::vector<std::complex<double>> convolve(
    const std::vector<std::complex<double>>& a,
    const std::vector<std::complex<double>>& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t out_len = a.size() + b.size() - 1;
  std::size_t n = 1;
  while (n < out_len) n <<= 1;

  std::vector<std::complex<double>> fa(n), fb(n);
  std::copy(a.begin(), a.end(), fa.begin());
  std::copy(b.begin(), b.end(), fb.begin());
  fft_inplace(fa, -1);
  fft_inplace(fb, -1);
  for (std::size_t i = 0; i < n; ++i) fa[i] *= fb[i];
  fft_inplace(fa, +1);
  const double scale = 1.0 / static_cast<double>(n);
  std::vector<std::complex<double>> out(out_len);
  for (std::size_t i = 0; i < out_len; ++i) out[i] = fa[i] * scale;
  return out;
}

}  // namespace hankel::detail
