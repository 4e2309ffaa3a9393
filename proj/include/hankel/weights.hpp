// Copyright (c) 2026 the hankelkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hankel/errors.hpp"

namespace hankel {

// A radial weight ω on [0,1): positive profile ω(ρ), tail ω̂(ρ) = ∫_ρ^1 ω(t)dt
// and moments ω_x = ∫_0^1 ω(s) s^x ds.  Tagged variants carry closed forms
// (constant, standard, the derived weight W and ω_+); everything else falls
// back to adaptive quadrature.  Tail and moment values are memoized per
// instance (copies share the cache), so repeated identity checks see bitwise
// identical numbers.
class RadialWeight {
 public:
  RadialWeight();  // constant weight ω ≡ 1

  static RadialWeight constant();
  // Mass-normalized standard weight (α+1)(1-r²)^α, α > -1.
  static RadialWeight standard(double alpha);
  // Derived weight W_{x,ω}(ρ) = (x-1)ω̂^x(1-ρ)^{x-2} + xωω̂^{x-1}(1-ρ)^{x-1},
  // x ≥ 1, whose tail is exactly ω̂^x(ρ)(1-ρ)^{x-1}.
  static RadialWeight w_derived(double x, const RadialWeight& base);
  // ω_+(ρ) = ∫_ρ^1 ω(s) ds/s, with exact moments (ω_+)_x = ω_x/(x+1).
  static RadialWeight omega_plus(const RadialWeight& base);
  // Arbitrary positive profile; everything is computed by quadrature.
  static RadialWeight custom(std::function<double(double)> profile,
                             std::string label = "custom");
  // Piecewise-linear profile through (rho, value) samples; extended by the
  // first/last value outside the sampled range.
  static RadialWeight from_samples(
      std::vector<std::pair<double, double>> samples,
      std::string source = "");

  double profile(double rho) const;
  double operator()(double rho) const { return profile(rho); }

  // ω̂(ρ), ρ ∈ [0,1).  Closed form for tagged variants, adaptive quadrature
  // (relative tolerance 1e-10) otherwise.
  double tail(double rho) const;
  // Quadrature-only tail, bypassing closed forms: the cross-check route.
  double tail_by_quadrature(double rho) const;

  // ω_x, x ≥ 0, relative tolerance 1e-12 when computed by quadrature.
  double moment(double x) const;
  // σ_n = 2 ω_{2n+1}: the squared norm of z^n in the weighted A² space.
  double sigma(std::size_t n) const;

  // One-line descriptor, parseable by parse_weight() in descriptors.hpp.
  std::string describe() const;

  // Structure accessors used by descriptor serialization and fast paths.
  enum class Kind { kConstant, kStandard, kWDerived, kOmegaPlus, kCustom, kSamples };
  Kind kind() const;
  double param() const;        // alpha (standard) or x (w_derived)
  bool has_base() const;
  RadialWeight base_weight() const;  // shares the nested impl and its caches
  const std::vector<std::pair<double, double>>* samples() const;
  const std::string& source() const;  // samples file path, if any

 private:
  struct Impl;
  explicit RadialWeight(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
};

// Report from the doubling classifiers.  The same struct serves the upper and
// lower checks; unused fields stay at their defaults.
struct DoublingReport {
  bool is_upper = false;
  double upper_constant = 0.0;  // max over grid of ω̂(ρ)/ω̂((1+ρ)/2)
  bool is_lower = false;
  double lower_K = 0.0;         // best K among the candidates
  double lower_C = 0.0;         // min over grid of ω̂(ρ)/ω̂(1-(1-ρ)/K) at best K
  std::vector<double> grid;
};

// Default classification grid: ρ = 1 - 2^{-k/4}, k = 0..80 (so up to 1-2^-20).
std::vector<double> default_rho_grid();

// Upper-doubling check: the ratio ω̂(ρ)/ω̂((1+ρ)/2) must stay bounded on the
// grid; "bounded" means the max over the last grid decade (points within 10x
// of the deepest 1-ρ) does not exceed the max over the earlier grid by more
// than 5%.  Grid must reach ρ ≥ 0.999.
DoublingReport upper_doubling_report(const RadialWeight& w,
                                     std::vector<double> grid = {});

// Lower-doubling check: for K in the candidate ladder, C_K = min over the grid
// of ω̂(ρ)/ω̂(1-(1-ρ)/K); the weight passes when some K gives C_K > 1+1e-3.
// Reports the best (K, C) pair.
DoublingReport lower_doubling_report(const RadialWeight& w,
                                     std::vector<double> k_candidates = {},
                                     std::vector<double> grid = {});

// Smallest γ on the ladder {0.25, 0.5, ..., 16} such that ω̂(ρ)/(1-ρ)^γ is
// almost increasing on the grid (f(ρ1) ≤ 1.05 f(ρ2) for ρ1 < ρ2).  Requires
// the weight to pass the upper-doubling check; throws ClassificationError
// otherwise or when no ladder exponent works.
double growth_exponent(const RadialWeight& w, std::vector<double> grid = {});

}  // namespace hankel
