// Copyright (c) 2026 the hankelkit authors
// SPDX-License-Identifier: Apache-2.0
#include "hankel/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hankel/errors.hpp"

namespace hankel {

namespace {

int bumped_angular(const QuadratureSpec& quad, int needed_degree) {
  // Keep the angular mean exact for trig polynomials: T > 2*needed_degree.
  return std::max(quad.angular, next_pow2(2 * needed_degree + 2));
}

// Drop trailing coefficients that cannot affect double-precision results;
// dilated series decay geometrically and this keeps Horner loops short.
std::size_t effective_size(const std::vector<Complex>& c) {
  double max_abs = 0.0;
  for (const auto& v : c) max_abs = std::max(max_abs, std::abs(v));
  if (max_abs == 0.0) return 0;
  std::size_t n = c.size();
  while (n > 0 && std::abs(c[n - 1]) < 1e-18 * max_abs) --n;
  return n;
}

}  // namespace

double bergman_norm(const TaylorSeries& f, const RadialWeight& w, double p,
                    const QuadratureSpec& quad) {
  if (!(p > 0.0)) {
    throw std::domain_error("bergman_norm requires p > 0, got " +
                            std::to_string(p));
  }
  if (f.empty()) return 0.0;
  const int T = bumped_angular(quad, f.degree());
  const RadialRule rule = make_radial_rule(quad.radial);
  std::vector<Complex> values;
  double total = 0.0;
  const bool is_two = p == 2.0;
  for (std::size_t i = 0; i < rule.r.size(); ++i) {
    const double r = rule.r[i];
    values_on_circle(f.coeffs(), r, T, values);
    double mean = 0.0;
    if (is_two) {
      for (const auto& v : values) mean += std::norm(v);
    } else {
      for (const auto& v : values) mean += std::pow(std::abs(v), p);
    }
    mean /= static_cast<double>(T);
    total += rule.w[i] * w.profile(r) * r * mean;
  }
  return std::pow(2.0 * total, 1.0 / p);
}

Complex inner_product(const TaylorSeries& f, const TaylorSeries& g,
                      const RadialWeight& w, const QuadratureSpec& quad) {
  if (f.empty() || g.empty()) return {0.0, 0.0};
  const int T = bumped_angular(quad, f.degree() + g.degree());
  const RadialRule rule = make_radial_rule(quad.radial);
  std::vector<Complex> fv, gv;
  Complex total{0.0, 0.0};
  for (std::size_t i = 0; i < rule.r.size(); ++i) {
    const double r = rule.r[i];
    values_on_circle(f.coeffs(), r, T, fv);
    values_on_circle(g.coeffs(), r, T, gv);
    Complex mean{0.0, 0.0};
    for (int t = 0; t < T; ++t) mean += fv[t] * std::conj(gv[t]);
    mean /= static_cast<double>(T);
    total += rule.w[i] * w.profile(r) * r * mean;
  }
  return 2.0 * total;
}

double norm2_coeff(const TaylorSeries& f, const RadialWeight& w) {
  double s = 0.0;
  for (std::size_t n = 0; n < f.size(); ++n) {
    s += std::norm(f.coeffs()[n]) * w.sigma(n);
  }
  return std::sqrt(s);
}

Complex inner_product_coeff(const TaylorSeries& f, const TaylorSeries& g,
                            const RadialWeight& w) {
  Complex s{0.0, 0.0};
  const std::size_t n_max = std::min(f.size(), g.size());
  for (std::size_t n = 0; n < n_max; ++n) {
    s += f.coeffs()[n] * std::conj(g.coeffs()[n]) * w.sigma(n);
  }
  return s;
}

BlochReport bloch_norm(const TaylorSeries& f, const QuadratureSpec& quad) {
  BlochReport rep;
  if (f.empty()) return rep;
  const TaylorSeries df = f.derivative();
  const std::vector<double> radii = quad.sup_radii_ladder();
  const int A = quad.sup_angles;
  const double dtheta = 2.0 * std::numbers::pi / A;
  double best = 0.0;
  Complex best_z{0.0, 0.0};
  for (double r : radii) {
    const double factor = 1.0 - r * r;
    for (int a = 0; a < A; ++a) {
      const Complex z = std::polar(r, dtheta * a);
      const double v = factor * std::abs(df.evaluate(z));
      if (v > best) {
        best = v;
        best_z = z;
      }
    }
  }
  rep.value = best + std::abs(f.at(0));
  rep.at = best_z;
  return rep;
}

double garsia_bmo(const TaylorSeries& f, const QuadratureSpec& quad) {
  const std::size_t n = effective_size(f.coeffs());
  if (n == 0) return 0.0;
  const std::vector<Complex>& c = f.coeffs();
  // Boundary Fourier coefficients of |f|²: b_k = Σ_n f_{n+k} conj(f_n).
  std::vector<Complex> b(n, Complex{0.0, 0.0});
  for (std::size_t k = 0; k < n; ++k) {
    Complex s{0.0, 0.0};
    for (std::size_t m = 0; m + k < n; ++m) s += c[m + k] * std::conj(c[m]);
    b[k] = s;
  }
  const TaylorSeries fb(std::vector<Complex>(c.begin(), c.begin() + n));
  const TaylorSeries bb(std::move(b));
  const std::vector<double> radii = quad.sup_radii_ladder();
  const int A = quad.sup_angles;
  const double dtheta = 2.0 * std::numbers::pi / A;
  double best = 0.0;
  for (double r : radii) {
    for (int a = 0; a < A; ++a) {
      const Complex z = std::polar(r, dtheta * a);
      const Complex bz = bb.evaluate(z);
      // Harmonic extension of |f|² minus |f|²; nonnegative up to roundoff.
      const double ext = 2.0 * bz.real() - bb.at(0).real();
      const double gap = ext - std::norm(fb.evaluate(z));
      if (gap > best) best = gap;
    }
  }
  return std::sqrt(std::max(best, 0.0));
}

double bmoa_infty_norm(const TaylorSeries& f, const RadialWeight& w,
                       const QuadratureSpec& quad) {
  if (f.empty()) return 0.0;
  double best = 0.0;
  for (double rho : quad.rho_grid()) {
    TaylorSeries fr = f.dilated(rho);
    fr.coeffs().resize(std::max<std::size_t>(effective_size(fr.coeffs()), 1));
    const double v = garsia_bmo(fr, quad) * w.tail(rho);
    if (v > best) best = v;
  }
  return best;
}

double d_omega_bmoa_norm(const TaylorSeries& g, const RadialWeight& w,
                         const QuadratureSpec& quad) {
  if (g.empty()) return 0.0;
  std::vector<Complex> h(g.size());
  for (std::size_t n = 0; n < g.size(); ++n) {
    h[n] = g.coeffs()[n] / w.moment(2.0 * static_cast<double>(n) + 1.0);
  }
  return bmoa_infty_norm(TaylorSeries(std::move(h)), w, quad) +
         std::abs(g.at(0));
}

PairingResult pairing_omega_omega(const TaylorSeries& f, const TaylorSeries& g,
                                  const RadialWeight& w, double rho,
                                  const QuadratureSpec& quad) {
  if (!(rho >= 0.0) || rho >= 1.0) {
    throw std::domain_error("pairing dilation must lie in [0,1)");
  }
  PairingResult out;
  Complex sum{0.0, 0.0};
  const std::size_t n_max = std::min(f.size(), g.size());
  double rho_pow = rho;  // ρ^{2n+1}
  for (std::size_t n = 0; n < n_max; ++n) {
    const double m = w.moment(2.0 * static_cast<double>(n) + 1.0);
    sum += f.coeffs()[n] * std::conj(g.coeffs()[n]) * rho_pow * (m * m);
    rho_pow *= rho * rho;
  }
  out.sum_form = sum;

  // Companion quadrature form ρ·⟨f_ρ, (D_ω g)_ρ⟩_ω; with the normalized area
  // measure ∫|z^n|² dω = 2ω_{2n+1}, so the quadrature carries an extra factor
  // 2 relative to the sum form — corrected here.
  std::vector<Complex> dg(g.size());
  for (std::size_t n = 0; n < g.size(); ++n) {
    dg[n] = g.coeffs()[n] * w.moment(2.0 * static_cast<double>(n) + 1.0);
  }
  const Complex quad_form =
      rho * inner_product(f.dilated(rho), TaylorSeries(std::move(dg)).dilated(rho),
                          w, quad);
  out.quadrature_form = 0.5 * quad_form;
  return out;
}

double frac_bloch_sup(const TaylorSeries& f, const RadialWeight& omega,
                      const RadialWeight& nu, const QuadratureSpec& quad) {
  if (f.empty()) return 0.0;
  std::vector<Complex> g(f.size());
  for (std::size_t n = 0; n < f.size(); ++n) {
    const double x = 2.0 * static_cast<double>(n) + 1.0;
    g[n] = f.coeffs()[n] * (omega.moment(x) / nu.moment(x));
  }
  const TaylorSeries rf(std::move(g));
  const std::vector<double> radii = quad.sup_radii_ladder();
  const int A = quad.sup_angles;
  const double dtheta = 2.0 * std::numbers::pi / A;
  double best = 0.0;
  for (double r : radii) {
    const double ratio = nu.tail(r) / omega.tail(r);
    for (int a = 0; a < A; ++a) {
      const Complex z = std::polar(r, dtheta * a);
      const double v = ratio * std::abs(rf.evaluate(z));
      if (v > best) best = v;
    }
  }
  return best;
}

BfracReport bfrac_condition(const RadialWeight& omega, const RadialWeight& nu,
                            std::vector<double> grid) {
  if (grid.empty()) grid = default_rho_grid();
  std::sort(grid.begin(), grid.end());
  BfracReport rep;
  const auto integrand = [&](double t) {
    return omega.tail(t) / (nu.tail(t) * (1.0 - t));
  };
  // Accumulate the LHS integral incrementally along the grid.
  double acc = 0.0;
  double prev = 0.0;
  double max_early = 0.0, max_late = 0.0;
  const double deepest = 1.0 - grid.back();
  const double cutoff = 10.0 * deepest;
  for (double rho : grid) {
    if (rho > prev) acc += adaptive_integrate(integrand, prev, rho, 1e-9);
    prev = rho;
    if (rho <= 0.0) continue;
    const double rhs = omega.tail(rho) / nu.tail(rho);
    const double ratio = acc / rhs;
    rep.sup_ratio = std::max(rep.sup_ratio, ratio);
    if (1.0 - rho <= cutoff) {
      max_late = std::max(max_late, ratio);
    } else {
      max_early = std::max(max_early, ratio);
    }
  }
  rep.last_decade_ratio = max_early > 0.0 ? max_late / max_early : 0.0;
  rep.holds = max_early > 0.0 && max_late <= 1.1 * max_early;
  return rep;
}

std::vector<KernelNormRow> kernel_norm_comparison(
    const RadialWeight& omega, const RadialWeight& nu, double p,
    const std::vector<double>& z_ladder, const QuadratureSpec& quad,
    int n_cap) {
  if (!(p > 0.0)) throw std::domain_error("kernel_norm_comparison: p > 0");
  std::vector<KernelNormRow> rows;
  rows.reserve(z_ladder.size());
  for (double z : z_ladder) {
    if (!(z >= 0.0) || z >= 1.0) {
      throw std::domain_error("kernel_norm_comparison: |z| must lie in [0,1)");
    }
    // Grow the truncation until the coefficient tail is negligible.
    double partial = 0.0;
    double zn = 1.0;
    int n = 0;
    int quiet = 0;
    std::vector<Complex> coeffs;
    while (n <= n_cap) {
      const double term = zn / nu.sigma(n);
      coeffs.emplace_back(term, 0.0);
      partial += term;
      quiet = term < 1e-12 * partial ? quiet + 1 : 0;
      if (quiet >= 10) break;
      zn *= z;
      ++n;
    }
    if (n > n_cap) {
      const int required = static_cast<int>(
          std::ceil(std::log(1e-12) / std::log(std::max(z, 0.1))));
      throw ToleranceError(
          "kernel_norm_comparison: truncation cap " + std::to_string(n_cap) +
              " insufficient at |z|=" + std::to_string(z) +
              " (roughly N=" + std::to_string(required) + " required)",
          zn / partial);
    }
    KernelNormRow row;
    row.z = z;
    row.trunc = static_cast<int>(coeffs.size()) - 1;
    const double lhs = bergman_norm(TaylorSeries(std::move(coeffs)), omega, p,
                                    quad);
    row.lhs_p = std::pow(lhs, p);
    row.rhs = adaptive_integrate(
        [&](double t) {
          return omega.tail(t) / (std::pow(nu.tail(t), p) *
                                  std::pow(1.0 - t, p));
        },
        0.0, z, 1e-9);
    row.ratio = row.lhs_p / row.rhs;
    row.rhs2 = omega.tail(z) /
               (std::pow(nu.tail(z), p) * std::pow(1.0 - z, p - 1.0));
    row.ratio2 = row.lhs_p / row.rhs2;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace hankel
