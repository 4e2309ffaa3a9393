// Copyright (c) 2026 the hankelkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "hankel/quadrature.hpp"
#include "hankel/series.hpp"
#include "hankel/weights.hpp"

namespace hankel {

// Finite complex measure on the closed unit disk: a list of point masses plus
// an optional anti-analytic polynomial density conj(h) dν against a radial
// weight ν.  Every consumer goes through the moment evaluators
// ∫ξ^k dμ and ∫ξ̄^k dμ, so the conjugate measure never needs to be
// materialized (its moments are conjugates of these).
class ComplexMeasure {
 public:
  struct Atom {
    Complex z;     // |z| < 1
    Complex mass;  // complex weight of the point mass
  };
  struct Density {
    TaylorSeries h;      // analytic polynomial; the density is conj(h) dν
    RadialWeight base;   // ν
  };

  ComplexMeasure() = default;
  static ComplexMeasure from_atoms(std::vector<Atom> atoms);
  static ComplexMeasure from_density(TaylorSeries h, RadialWeight base);

  ComplexMeasure& add_atom(Complex z, Complex mass);
  ComplexMeasure& set_density(TaylorSeries h, RadialWeight base);

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::optional<Density>& density() const { return density_; }
  bool empty() const { return atoms_.empty() && !density_.has_value(); }

  // m_k = ∫ ξ^k dμ = Σ_j c_j z_j^k + 2 ν_{2k+1} conj(h_k).
  Complex moment(std::size_t k) const;
  // ∫ ξ̄^k dμ (the density contributes only at k = 0).
  Complex moment_bar(std::size_t k) const;
  std::vector<Complex> moments(std::size_t k_max) const;

  ComplexMeasure scaled(Complex factor) const;
  friend ComplexMeasure operator+(const ComplexMeasure& a,
                                  const ComplexMeasure& b);

 private:
  std::vector<Atom> atoms_;
  std::optional<Density> density_;
};

// Bergman projection of μ (or of its conjugate measure) against the weight ν,
// truncated to degree n_max:
//   conjugated = true:  coefficients conj(m_n)/σ_n(ν)  — the projection of μ̄;
//   conjugated = false: coefficients (∫ξ̄^n dμ)/σ_n(ν).
TaylorSeries project(const RadialWeight& nu, const ComplexMeasure& mu,
                     bool conjugated, std::size_t n_max);

// | ∫F dμ  −  ∫_D F·conj( dilate(project(ν,μ,conj), ρ) ) dν |, the left term
// exact from moments, the right term by the norms-module quadrature.
double dilated_projection_residual(const TaylorSeries& F,
                                   const ComplexMeasure& mu,
                                   const RadialWeight& nu, double rho,
                                   const QuadratureSpec& quad = {});

}  // namespace hankel
