// Copyright (c) 2026 the hankelkit authors
// SPDX-License-Identifier: Apache-2.0
#include "hankel/measures.hpp"

#include <cmath>
#include <stdexcept>

#include "hankel/errors.hpp"
#include "hankel/norms.hpp"

namespace hankel {

ComplexMeasure ComplexMeasure::from_atoms(std::vector<Atom> atoms) {
  ComplexMeasure mu;
  for (const auto& a : atoms) mu.add_atom(a.z, a.mass);
  return mu;
}

ComplexMeasure ComplexMeasure::from_density(TaylorSeries h, RadialWeight base) {
  ComplexMeasure mu;
  mu.set_density(std::move(h), std::move(base));
  return mu;
}

ComplexMeasure& ComplexMeasure::add_atom(Complex z, Complex mass) {
  if (!(std::abs(z) < 1.0)) {
    throw std::domain_error("measure atoms must lie in the open unit disk");
  }
  atoms_.push_back(Atom{z, mass});
  return *this;
}

ComplexMeasure& ComplexMeasure::set_density(TaylorSeries h, RadialWeight base) {
  density_ = Density{std::move(h), std::move(base)};
  return *this;
}

namespace {

// z^k by repeated multiplication; std::pow(complex, real) maps 0^0 to NaN.
Complex int_pow(Complex z, std::size_t k) {
  Complex acc{1.0, 0.0};
  while (k > 0) {
    if (k & 1u) acc *= z;
    z *= z;
    k >>= 1u;
  }
  return acc;
}

}  // namespace

Complex ComplexMeasure::moment(std::size_t k) const {
  Complex m{0.0, 0.0};
  for (const auto& a : atoms_) m += a.mass * int_pow(a.z, k);
  if (density_ && k < density_->h.size()) {
    const double nu_moment =
        density_->base.moment(2.0 * static_cast<double>(k) + 1.0);
    m += 2.0 * nu_moment * std::conj(density_->h.at(k));
  }
  return m;
}

Complex ComplexMeasure::moment_bar(std::size_t k) const {
  Complex m{0.0, 0.0};
  for (const auto& a : atoms_) m += a.mass * int_pow(std::conj(a.z), k);
  // Against a radial base, ∫ ξ̄^k conj(h) dν picks out only the k = 0 term.
  if (density_ && k == 0 && !density_->h.empty()) {
    m += 2.0 * density_->base.moment(1.0) * std::conj(density_->h.at(0));
  }
  return m;
}

std::vector<Complex> ComplexMeasure::moments(std::size_t k_max) const {
  std::vector<Complex> out(k_max + 1, Complex{0.0, 0.0});
  std::vector<Complex> zpow(atoms_.size(), Complex{1.0, 0.0});
  for (std::size_t k = 0; k <= k_max; ++k) {
    Complex m{0.0, 0.0};
    for (std::size_t j = 0; j < atoms_.size(); ++j) {
      m += atoms_[j].mass * zpow[j];
      zpow[j] *= atoms_[j].z;
    }
    if (density_ && k < density_->h.size()) {
      const double nu_moment =
          density_->base.moment(2.0 * static_cast<double>(k) + 1.0);
      m += 2.0 * nu_moment * std::conj(density_->h.at(k));
    }
    out[k] = m;
  }
  return out;
}

ComplexMeasure ComplexMeasure::scaled(Complex factor) const {
  ComplexMeasure out;
  for (const auto& a : atoms_) out.add_atom(a.z, factor * a.mass);
  if (density_) {
    // The density is conj(h)dν: scaling the measure by c replaces h by
    // conj(c)·h so that conj(h') = c·conj(h).
    out.set_density(std::conj(factor) * density_->h, density_->base);
  }
  return out;
}

ComplexMeasure operator+(const ComplexMeasure& a, const ComplexMeasure& b) {
  ComplexMeasure out;
  for (const auto& at : a.atoms_) out.add_atom(at.z, at.mass);
  for (const auto& at : b.atoms_) out.add_atom(at.z, at.mass);
  if (a.density_ && b.density_) {
    if (a.density_->base.describe() != b.density_->base.describe()) {
      throw UnsupportedInputError(
          "cannot add measures with densities against different base weights: " +
          a.density_->base.describe() + " vs " + b.density_->base.describe());
    }
    out.set_density(a.density_->h + b.density_->h, a.density_->base);
  } else if (a.density_) {
    out.set_density(a.density_->h, a.density_->base);
  } else if (b.density_) {
    out.set_density(b.density_->h, b.density_->base);
  }
  return out;
}

TaylorSeries project(const RadialWeight& nu, const ComplexMeasure& mu,
                     bool conjugated, std::size_t n_max) {
  const std::vector<Complex> m = mu.moments(n_max);
  std::vector<Complex> coeffs(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const Complex num = conjugated ? std::conj(m[n]) : mu.moment_bar(n);
    coeffs[n] = num / nu.sigma(n);
  }
  return TaylorSeries(std::move(coeffs));
}

double dilated_projection_residual(const TaylorSeries& F,
                                   const ComplexMeasure& mu,
                                   const RadialWeight& nu, double rho,
                                   const QuadratureSpec& quad) {
  if (!(rho >= 0.0) || rho >= 1.0) {
    throw std::domain_error("dilation parameter must lie in [0,1)");
  }
  if (F.empty()) return 0.0;
  Complex exact{0.0, 0.0};
  const std::vector<Complex> m = mu.moments(F.size() - 1);
  for (std::size_t k = 0; k < F.size(); ++k) exact += F.at(k) * m[k];

  const std::size_t n_max = std::max<std::size_t>(F.size() - 1, 256);
  const TaylorSeries g = project(nu, mu, /*conjugated=*/true, n_max);
  const Complex approx = inner_product(F, g.dilated(rho), nu, quad);
  return std::abs(exact - approx);
}

}  // namespace hankel
