// Copyright (c) 2026 the hankelkit authors
// SPDX-License-Identifier: Apache-2.0
#include "hankel/hankelnorm.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "hankel/errors.hpp"

namespace hankel {

namespace {

double l2_norm(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const auto& c : v) s += std::norm(c);
  return std::sqrt(s);
}

// Bilinear (no conjugation) dot product Σ a_i b_i.
Complex dot_plain(const std::vector<Complex>& a,
                  const std::vector<Complex>& b) {
  Complex s{0.0, 0.0};
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

// Deterministic uniforms/gaussians built directly on the engine output so
// restarts reproduce bit-identically across standard libraries.
double uniform01(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

double gaussian(std::mt19937_64& rng) {
  const double u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<Complex> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::vector<Complex> v(n);
  for (auto& c : v) c = Complex(gaussian(rng), gaussian(rng));
  return v;
}

bool all_zero(const std::vector<Complex>& v) {
  for (const auto& c : v) {
    if (c != Complex{0.0, 0.0}) return false;
  }
  return true;
}

TaylorSeries as_series(const std::vector<Complex>& v) {
  return TaylorSeries(std::vector<Complex>(v));
}

bool is_even_integer_p(double p) {
  if (p < 2.0 || p > 16.0) return false;
  const double r = std::round(p);
  return std::abs(p - r) < 1e-12 &&
         static_cast<long>(std::lround(r)) % 2 == 0;
}

std::vector<Complex> coeff_power(const std::vector<Complex>& x, int s) {
  TaylorSeries acc = TaylorSeries::constant(Complex{1.0, 0.0});
  const TaylorSeries base = as_series(x);
  for (int i = 0; i < s; ++i) acc = multiply(acc, base);
  return acc.coeffs();
}

// ‖x‖_{p,ω}: coefficient-exact for p = 2 and even integer p (Parseval on x
// and on the coefficient power x^{p/2}); quadrature otherwise.
double p_norm(const std::vector<Complex>& x, const RadialWeight& w, double p,
              const QuadratureSpec& quad) {
  if (p == 2.0) return norm2_coeff(as_series(x), w);
  if (is_even_integer_p(p)) {
    const int s = static_cast<int>(std::lround(p)) / 2;
    const std::vector<Complex> u = coeff_power(x, s);
    double acc = 0.0;
    for (std::size_t k = 0; k < u.size(); ++k) acc += std::norm(u[k]) * w.sigma(k);
    return std::pow(acc, 1.0 / p);
  }
  return bergman_norm(as_series(x), w, p, quad);
}

// Euclidean ascent gradient of ‖x‖_p at unit p-norm:
// G_m = ∫_D |x|^{p-2} x conj(z)^m ω dA.
std::vector<Complex> p_norm_gradient(const std::vector<Complex>& x,
                                     const RadialWeight& w, double p,
                                     const QuadratureSpec& quad) {
  const std::size_t n = x.size();
  std::vector<Complex> g(n, Complex{0.0, 0.0});
  if (p == 2.0) {
    for (std::size_t m = 0; m < n; ++m) g[m] = x[m] * w.sigma(m);
    return g;
  }
  if (is_even_integer_p(p)) {
    const int s = static_cast<int>(std::lround(p)) / 2;
    const std::vector<Complex> u = coeff_power(x, s);      // x^s
    const std::vector<Complex> v = coeff_power(x, s - 1);  // x^{s-1}
    for (std::size_t m = 0; m < n; ++m) {
      Complex acc{0.0, 0.0};
      for (std::size_t k = 0; k < v.size() && k + m < u.size(); ++k) {
        acc += std::conj(v[k]) * u[k + m] * w.sigma(k + m);
      }
      g[m] = acc;
    }
    return g;
  }
  // General exponents: angular FFT modes of |x|^{p-2}x per radial node.
  const int t_nodes =
      std::max(quad.angular, next_pow2(2 * static_cast<int>(n) + 2));
  const RadialRule rule = make_radial_rule(quad.radial);
  std::vector<Complex> vals, modes;
  for (std::size_t i = 0; i < rule.r.size(); ++i) {
    const double r = rule.r[i];
    values_on_circle(x, r, t_nodes, vals);
    for (auto& v : vals) {
      const double av = std::max(std::abs(v), 1e-150);
      v *= std::pow(av, p - 2.0);
    }
    circle_modes(vals, static_cast<int>(n), modes);
    const double base = 2.0 * rule.w[i] * w.profile(r) * r;
    double rm = 1.0;
    for (std::size_t m = 0; m < n; ++m) {
      g[m] += base * rm * modes[m];
      rm *= r;
    }
  }
  return g;
}

struct AscentVec {
  std::vector<Complex> x;
  double eta = 0.25;
};

bool normalize_p(std::vector<Complex>& x, const RadialWeight& w, double p,
                 const QuadratureSpec& quad) {
  const double nrm = p_norm(x, w, p, quad);
  if (!(nrm > 0.0) || !std::isfinite(nrm)) return false;
  for (auto& c : x) c /= nrm;
  return true;
}

// One update of x maximizing |Σ_m x_m w_m| over the unit p-sphere: the exact
// maximizer for p = 2, otherwise a backtracking projected-gradient step with
// a per-vector persistent step size.  Returns the post-update objective.
double ascent_update(AscentVec& av, const std::vector<Complex>& w,
                     const RadialWeight& omega, double p,
                     const QuadratureSpec& quad) {
  if (p == 2.0) {
    std::vector<Complex> x(w.size());
    for (std::size_t m = 0; m < w.size(); ++m) {
      x[m] = std::conj(w[m]) / omega.sigma(m);
    }
    if (normalize_p(x, omega, 2.0, quad)) av.x = std::move(x);
    return std::abs(dot_plain(av.x, w));
  }
  if (is_even_integer_p(p)) {
    normalize_p(av.x, omega, p, quad);
    const Complex big_l = dot_plain(av.x, w);
    const double j0 = std::abs(big_l);
    const Complex phase = j0 > 0.0 ? big_l / j0 : Complex{1.0, 0.0};
    const std::vector<Complex> big_g = p_norm_gradient(av.x, omega, p, quad);
    std::vector<Complex> grad(av.x.size());
    for (std::size_t m = 0; m < grad.size(); ++m) {
      grad[m] = phase * std::conj(w[m]) - j0 * big_g[m];
    }
    const double gn = l2_norm(grad);
    if (gn == 0.0 || !std::isfinite(gn)) return j0;
    for (auto& c : grad) c /= gn;

    double eta = av.eta;
    for (int tries = 0; tries < 40 && eta >= 1e-14; ++tries, eta *= 0.5) {
      std::vector<Complex> cand = av.x;
      for (std::size_t m = 0; m < cand.size(); ++m) cand[m] += eta * grad[m];
      if (!normalize_p(cand, omega, p, quad)) continue;
      const double jc = std::abs(dot_plain(cand, w));
      if (jc > j0) {
        av.x = std::move(cand);
        av.eta = std::min(eta * 2.0, 64.0);
        return jc;
      }
    }
    av.eta = std::max(eta, 1e-12);
    return j0;
  }

  // General exponents: the polynomial is transformed to circle values once
  // per step; a backtracking candidate x + eta*g has values VX + eta*VG by
  // linearity, so each trial step costs only a modulus pass over the grid.
  const std::size_t n = av.x.size();
  const int t_nodes =
      std::max(quad.angular, next_pow2(2 * static_cast<int>(n) + 2));
  const double inv_t = 1.0 / static_cast<double>(t_nodes);
  const RadialRule rule = make_radial_rule(quad.radial);
  const std::size_t nr = rule.r.size();
  std::vector<double> base(nr);
  for (std::size_t i = 0; i < nr; ++i) {
    base[i] = 2.0 * rule.w[i] * omega.profile(rule.r[i]) * rule.r[i];
  }
  const bool is_one = p == 1.0;
  const auto mean_pow = [&](const std::vector<Complex>& vals) {
    double s = 0.0;
    if (is_one) {
      for (const Complex& v : vals) s += std::sqrt(std::norm(v));
    } else {
      for (const Complex& v : vals) s += std::pow(std::abs(v), p);
    }
    return s * inv_t;
  };
  std::vector<std::vector<Complex>> vx(nr);
  double acc = 0.0;
  for (std::size_t i = 0; i < nr; ++i) {
    values_on_circle(av.x, rule.r[i], t_nodes, vx[i]);
    acc += base[i] * mean_pow(vx[i]);
  }
  const double nx = std::pow(acc, 1.0 / p);
  if (!(nx > 0.0) || !std::isfinite(nx)) return 0.0;
  for (auto& c : av.x) c /= nx;
  for (auto& row : vx) {
    for (auto& c : row) c /= nx;
  }
  const Complex big_l = dot_plain(av.x, w);
  const double j0 = std::abs(big_l);
  const Complex phase = j0 > 0.0 ? big_l / j0 : Complex{1.0, 0.0};

  // Gradient of the norm from the same circle values: modes of |x|^{p-2}x.
  std::vector<Complex> big_g(n, Complex{0.0, 0.0});
  {
    std::vector<Complex> weighted, modes;
    for (std::size_t i = 0; i < nr; ++i) {
      weighted = vx[i];
      for (auto& v : weighted) {
        const double av_abs = std::max(std::abs(v), 1e-150);
        v *= std::pow(av_abs, p - 2.0);
      }
      circle_modes(weighted, static_cast<int>(n), modes);
      double rm = 1.0;
      for (std::size_t m = 0; m < n; ++m) {
        big_g[m] += base[i] * rm * modes[m];
        rm *= rule.r[i];
      }
    }
  }
  std::vector<Complex> grad(n);
  for (std::size_t m = 0; m < n; ++m) {
    grad[m] = phase * std::conj(w[m]) - j0 * big_g[m];
  }
  const double gn = l2_norm(grad);
  if (gn == 0.0 || !std::isfinite(gn)) return j0;
  for (auto& c : grad) c /= gn;

  std::vector<std::vector<Complex>> vg(nr);
  for (std::size_t i = 0; i < nr; ++i) {
    values_on_circle(grad, rule.r[i], t_nodes, vg[i]);
  }
  const Complex lg = dot_plain(grad, w);

  double eta = av.eta;
  std::vector<Complex> cand_vals;
  for (int tries = 0; tries < 40 && eta >= 1e-14; ++tries, eta *= 0.5) {
    double cacc = 0.0;
    for (std::size_t i = 0; i < nr; ++i) {
      cand_vals.resize(vx[i].size());
      for (std::size_t t = 0; t < cand_vals.size(); ++t) {
        cand_vals[t] = vx[i][t] + eta * vg[i][t];
      }
      cacc += base[i] * mean_pow(cand_vals);
    }
    const double nc = std::pow(cacc, 1.0 / p);
    if (!(nc > 0.0) || !std::isfinite(nc)) continue;
    const double jc = std::abs(big_l + eta * lg) / nc;
    if (jc > j0) {
      for (std::size_t m = 0; m < n; ++m) {
        av.x[m] = (av.x[m] + eta * grad[m]) / nc;
      }
      av.eta = std::min(eta * 2.0, 64.0);
      return jc;
    }
  }
  av.eta = std::max(eta, 1e-12);
  return j0;
}

// Coefficients C_k of (1-w)^{-s}: C_0 = 1, C_{k+1} = C_k (s+k)/(k+1).
std::vector<double> binomial_series(double s, std::size_t k_max) {
  std::vector<double> c(k_max + 1);
  c[0] = 1.0;
  for (std::size_t k = 0; k + 1 <= k_max; ++k) {
    c[k + 1] = c[k] * (s + static_cast<double>(k)) / (static_cast<double>(k) + 1.0);
  }
  return c;
}

struct GridPoint {
  Complex z;
  double radius = 0.0;
};

std::vector<GridPoint> bucket_by_radius(const std::vector<Complex>& grid) {
  std::vector<GridPoint> pts;
  pts.reserve(grid.size());
  for (const auto& z : grid) pts.push_back({z, std::abs(z)});
  std::sort(pts.begin(), pts.end(),
            [](const GridPoint& a, const GridPoint& b) {
              if (a.radius != b.radius) return a.radius < b.radius;
              return std::arg(a.z) < std::arg(b.z);
            });
  return pts;
}

// Divergence heuristic shared by the detectors: the running sup still grows
// through the last radius decade of the grid.  Concretely, new running-sup
// records are set at three or more radii inside the last decade, and the
// final record lies in the deepest octave — growth that has not saturated
// before the grid edge.
bool grows_over_last_decade(const std::vector<std::pair<double, double>>& rv) {
  if (rv.size() < 4) return false;
  const double deepest = 1.0 - rv.back().first;
  if (!(deepest > 0.0)) return false;
  const double decade = 10.0 * deepest;
  double running = 0.0;
  int records = 0;
  double last_record_gap = 1.0;
  for (const auto& [r, v] : rv) {
    if (v > running) {
      running = v;
      if (1.0 - r <= decade) {
        ++records;
        last_record_gap = 1.0 - r;
      }
    }
  }
  return records >= 3 && last_record_gap <= 2.0 * deepest;
}

struct SupScan {
  double value = 0.0;
  Complex at{0.0, 0.0};
  bool divergent = false;
};

// Shared sup-scan over a grid of a per-point evaluator, with the divergence
// heuristic applied to per-radius maxima.
template <typename F>
SupScan scan_grid(const std::vector<Complex>& grid, F&& eval) {
  SupScan out;
  const std::vector<GridPoint> pts = bucket_by_radius(grid);
  std::vector<std::pair<double, double>> radius_max;
  for (const auto& pt : pts) {
    const double v = eval(pt.z);
    if (v > out.value) {
      out.value = v;
      out.at = pt.z;
    }
    if (!radius_max.empty() &&
        std::abs(radius_max.back().first - pt.radius) <=
            1e-12 * (1.0 + pt.radius)) {
      radius_max.back().second = std::max(radius_max.back().second, v);
    } else {
      radius_max.emplace_back(pt.radius, v);
    }
  }
  out.divergent = grows_over_last_decade(radius_max);
  return out;
}

}  // namespace

double HankelFormSpec::r_conjugate() const {
  const double rr = r();
  if (!(rr > 1.0)) {
    throw UnsupportedInputError(
        "conjugate exponent r' requires r > 1, got r = " + std::to_string(rr));
  }
  return rr / (rr - 1.0);
}

FormCase HankelFormSpec::form_case() const {
  const double rr = r();
  if (std::abs(rr - 1.0) < 1e-12) return FormCase::kCaseII;
  return rr > 1.0 ? FormCase::kCaseI : FormCase::kCaseIII;
}

QuadratureSpec ascent_quadrature() {
  QuadratureSpec q;
  q.radial = 120;
  q.angular = 256;
  return q;
}

NormEstimate form_norm_22(const HankelFormSpec& spec, std::size_t n,
                          double rayleigh_tol, std::size_t max_iterations) {
  if (std::abs(spec.p - 2.0) > 1e-12 || std::abs(spec.q - 2.0) > 1e-12) {
    throw UnsupportedInputError("form_norm_22 requires p = q = 2");
  }
  NormEstimate est;
  est.kind = NormEstimate::Kind::kBand;
  est.truncation = n;
  if (n == 0 || spec.mu.empty()) return est;

  HankelMatrixView view;
  view.moments = spec.mu.moments(2 * n - 2);
  if (all_zero(view.moments)) return est;
  view.scalings.resize(n);
  for (std::size_t m = 0; m < n; ++m) {
    view.scalings[m] = 1.0 / std::sqrt(spec.omega.sigma(m));
  }

  std::mt19937_64 rng(0x243F6A8885A308D3ull);
  std::vector<Complex> v = random_vector(rng, n);
  {
    const double nv = l2_norm(v);
    for (auto& c : v) c /= nv;
  }
  double prev = -1.0;
  for (std::size_t it = 1; it <= max_iterations; ++it) {
    const std::vector<Complex> av = view.apply(v);
    double lam = 0.0;  // ⟨A*A v, v⟩ = ‖Av‖² at unit v
    for (const auto& c : av) lam += std::norm(c);
    const double sv = std::sqrt(std::max(lam, 0.0));
    est.history.push_back(sv);
    est.iterations = it;
    if (prev >= 0.0 && std::abs(sv - prev) <= rayleigh_tol * std::max(1.0, sv)) {
      est.value = sv;
      return est;
    }
    prev = sv;
    std::vector<Complex> hv = view.apply_adjoint(av);
    const double nh = l2_norm(hv);
    if (nh == 0.0) {
      est.value = 0.0;
      return est;
    }
    for (auto& c : hv) c /= nh;
    v = std::move(hv);
  }
  const double last = est.history.back();
  const double second =
      est.history.size() > 1 ? est.history[est.history.size() - 2] : last;
  throw NonConvergenceError(
      "form_norm_22: power iteration did not meet the Rayleigh tolerance " +
          std::to_string(rayleigh_tol) + " within " +
          std::to_string(max_iterations) + " iterations",
      last, second);
}

NormEstimate form_norm_pq(const HankelFormSpec& spec, std::size_t n,
                          const AscentOptions& opts,
                          const QuadratureSpec& quad) {
  if (!(spec.p > 0.0) || !(spec.q > 0.0)) {
    throw std::domain_error("form_norm_pq requires p, q > 0");
  }
  NormEstimate est;
  est.kind = NormEstimate::Kind::kLowerBound;
  est.truncation = n;
  if (n == 0 || spec.mu.empty()) return est;
  const std::vector<Complex> moments = spec.mu.moments(2 * n - 2);
  if (all_zero(moments)) return est;

  std::size_t total_steps = 0;
  for (int restart = 0; restart < opts.restarts; ++restart) {
    std::mt19937_64 rng(opts.seed +
                        0x9E3779B97F4A7C15ull *
                            static_cast<std::uint64_t>(restart + 1));
    AscentVec f{random_vector(rng, n)};
    AscentVec g{random_vector(rng, n)};
    if (!normalize_p(f.x, spec.omega, spec.p, opts.inner_quad)) continue;
    if (!normalize_p(g.x, spec.omega, spec.q, opts.inner_quad)) continue;

    double obj = 0.0;
    int stall = 0;
    for (int step = 0; step < opts.steps; ++step) {
      ++total_steps;
      const std::vector<Complex> wf = hankel_matvec(moments, g.x);
      ascent_update(f, wf, spec.omega, spec.p, opts.inner_quad);
      const std::vector<Complex> wg = hankel_matvec(moments, f.x);
      const double now = ascent_update(g, wg, spec.omega, spec.q, opts.inner_quad);
      if (now <= obj * (1.0 + 1e-10) + 1e-15) {
        if (++stall >= 8) break;
      } else {
        stall = 0;
      }
      obj = std::max(obj, now);
    }

    // Re-evaluate the found pair with the full-quality quadrature; the
    // reported value stays a genuine lower bound.
    const double nf = p_norm(f.x, spec.omega, spec.p, quad);
    const double ng = p_norm(g.x, spec.omega, spec.q, quad);
    double val = 0.0;
    if (nf > 0.0 && ng > 0.0) {
      val = std::abs(hankel_form_eval(moments, as_series(f.x), as_series(g.x))) /
            (nf * ng);
    }
    est.history.push_back(val);
    est.value = std::max(est.value, val);
  }
  est.iterations = total_steps;
  return est;
}

double dual_norm(const HankelFormSpec& spec, std::size_t n,
                 const QuadratureSpec& quad) {
  switch (spec.form_case()) {
    case FormCase::kCaseI: {
      const TaylorSeries g = project(spec.omega, spec.mu, true, n);
      return bergman_norm(g, spec.omega, spec.r_conjugate(), quad);
    }
    case FormCase::kCaseII: {
      const TaylorSeries g = project(spec.omega, spec.mu, true, n);
      return d_omega_bmoa_norm(g, spec.omega, quad);
    }
    case FormCase::kCaseIII: {
      const RadialWeight w = RadialWeight::w_derived(1.0 / spec.r(), spec.omega);
      const TaylorSeries g = project(w, spec.mu, true, n);
      return bloch_norm(g, quad).value;
    }
  }
  throw std::logic_error("unreachable form case");
}

NormEstimate operator_norm_pq(const HankelFormSpec& spec, std::size_t n,
                              const AscentOptions& opts,
                              const QuadratureSpec& quad) {
  if (!(spec.q > 1.0) || !std::isfinite(spec.q)) {
    throw UnsupportedInputError(
        "operator_norm_pq requires 1 < q < infinity; the form-side estimate "
        "carries q <= 1");
  }
  NormEstimate est;
  est.kind = NormEstimate::Kind::kLowerBound;
  est.truncation = n;
  if (n == 0 || spec.mu.empty()) return est;
  const std::vector<Complex> moments = spec.mu.moments(2 * n - 2);
  if (all_zero(moments)) return est;

  std::vector<double> dinv(n);
  for (std::size_t m = 0; m < n; ++m) dinv[m] = 1.0 / spec.omega.sigma(m);
  // v_m = (1/σ_m) Σ_k m_{m+k} f_k; the operator image is conj(v), whose
  // A^q norm equals that of v.
  const auto apply_op = [&](const std::vector<Complex>& f) {
    std::vector<Complex> v = hankel_matvec(moments, f);
    for (std::size_t m = 0; m < v.size(); ++m) v[m] *= dinv[m];
    return v;
  };

  std::size_t total_steps = 0;
  for (int restart = 0; restart < opts.restarts; ++restart) {
    std::mt19937_64 rng(opts.seed +
                        0xD1B54A32D192ED03ull *
                            static_cast<std::uint64_t>(restart + 1));
    AscentVec f{random_vector(rng, n)};
    if (!normalize_p(f.x, spec.omega, spec.p, opts.inner_quad)) continue;
    double obj = 0.0;
    int stall = 0;
    for (int step = 0; step < opts.steps; ++step) {
      ++total_steps;
      const std::vector<Complex> v = apply_op(f.x);
      const double nv = p_norm(v, spec.omega, spec.q, opts.inner_quad);
      if (!(nv > 0.0)) break;
      // ∇‖v(f)‖_q = ‖v‖^{1-q} conj(M (dinv ∘ conj(G_q(v)))); at unit ‖f‖_p
      // the normalized-objective gradient subtracts ‖v‖_q G_p(f).
      const std::vector<Complex> gq =
          p_norm_gradient(v, spec.omega, spec.q, opts.inner_quad);
      std::vector<Complex> t(n);
      for (std::size_t m = 0; m < n; ++m) t[m] = dinv[m] * std::conj(gq[m]);
      const std::vector<Complex> mv = hankel_matvec(moments, t);
      const std::vector<Complex> gp =
          p_norm_gradient(f.x, spec.omega, spec.p, opts.inner_quad);
      const double vfac = std::pow(nv, 1.0 - spec.q);
      std::vector<Complex> grad(n);
      for (std::size_t m = 0; m < n; ++m) {
        grad[m] = vfac * std::conj(mv[m]) - nv * gp[m];
      }
      const double gn = l2_norm(grad);
      if (gn == 0.0 || !std::isfinite(gn)) break;
      for (auto& c : grad) c /= gn;

      double improved = -1.0;
      double eta = f.eta;
      for (int tries = 0; tries < 40 && eta >= 1e-14; ++tries, eta *= 0.5) {
        std::vector<Complex> cand = f.x;
        for (std::size_t m = 0; m < n; ++m) cand[m] += eta * grad[m];
        if (!normalize_p(cand, spec.omega, spec.p, opts.inner_quad)) continue;
        const double jc =
            p_norm(apply_op(cand), spec.omega, spec.q, opts.inner_quad);
        if (jc > nv) {
          f.x = std::move(cand);
          f.eta = std::min(eta * 2.0, 64.0);
          improved = jc;
          break;
        }
      }
      if (improved < 0.0) {
        f.eta = std::max(eta, 1e-12);
        break;  // stalled at a (local) maximizer
      }
      if (improved <= obj * (1.0 + 1e-10) + 1e-15) {
        if (++stall >= 8) break;
      } else {
        stall = 0;
      }
      obj = std::max(obj, improved);
    }
    const double nf = p_norm(f.x, spec.omega, spec.p, quad);
    double val = 0.0;
    if (nf > 0.0) {
      val = p_norm(apply_op(f.x), spec.omega, spec.q, quad) / nf;
    }
    est.history.push_back(val);
    est.value = std::max(est.value, val);
  }
  est.iterations = total_steps;
  return est;
}

Theorem1Report theorem1_ratio_experiment(
    const std::vector<ComplexMeasure>& corpus, const RadialWeight& omega,
    double p, double q, const std::vector<std::size_t>& n_ladder,
    const AscentOptions& opts, const QuadratureSpec& quad) {
  if (corpus.empty()) {
    throw UnsupportedInputError("theorem1_ratio_experiment: no symbols");
  }
  if (n_ladder.empty()) {
    throw UnsupportedInputError("theorem1_ratio_experiment: empty truncation ladder");
  }
  const std::size_t top = *std::max_element(n_ladder.begin(), n_ladder.end());
  const bool spectral = std::abs(p - 2.0) < 1e-12 && std::abs(q - 2.0) < 1e-12;

  // Corpus members are independent; run them concurrently and merge in
  // symbol order so the report is deterministic.
  const auto run_symbol = [&](std::size_t s) {
    std::vector<SymbolEstimate> rows;
    HankelFormSpec spec{corpus[s], omega, p, q};
    for (const std::size_t n : n_ladder) {
      const NormEstimate form =
          spectral ? form_norm_22(spec, n) : form_norm_pq(spec, n, opts, quad);
      const double dual = dual_norm(spec, n, quad);
      SymbolEstimate row;
      row.symbol = s;
      row.truncation = n;
      row.form = form.value;
      row.dual = dual;
      row.ratio = dual > 0.0 ? form.value / dual
                             : std::numeric_limits<double>::infinity();
      rows.push_back(row);
    }
    return rows;
  };
  std::vector<std::future<std::vector<SymbolEstimate>>> futures;
  futures.reserve(corpus.size());
  for (std::size_t s = 0; s < corpus.size(); ++s) {
    futures.push_back(std::async(std::launch::async, run_symbol, s));
  }

  Theorem1Report rep;
  rep.min_ratio = std::numeric_limits<double>::infinity();
  rep.max_ratio = 0.0;
  for (auto& fut : futures) {
    for (const SymbolEstimate& row : fut.get()) {
      rep.rows.push_back(row);
      if (row.truncation == top) {
        rep.min_ratio = std::min(rep.min_ratio, row.ratio);
        rep.max_ratio = std::max(rep.max_ratio, row.ratio);
      }
    }
  }
  rep.band = rep.min_ratio > 0.0
                 ? rep.max_ratio / rep.min_ratio
                 : std::numeric_limits<double>::infinity();
  return rep;
}

std::vector<Complex> detector_grid(const QuadratureSpec& quad) {
  std::vector<double> radii = quad.sup_radii_ladder();
  for (int i = 1; i <= 30; ++i) radii.push_back(0.01 * i);
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end(),
                          [](double a, double b) {
                            return std::abs(a - b) <= 1e-14;
                          }),
              radii.end());
  const int angles = 16;
  std::vector<Complex> grid;
  grid.reserve(radii.size() * angles);
  for (const double r : radii) {
    if (r == 0.0) {
      grid.emplace_back(0.0, 0.0);
      continue;
    }
    for (int a = 0; a < angles; ++a) {
      grid.push_back(std::polar(r, 2.0 * std::numbers::pi * a / angles));
    }
  }
  return grid;
}

DetectorReport hankel_measure_detector(const ComplexMeasure& mu,
                                       const RadialWeight& omega, double p,
                                       double beta,
                                       const std::vector<Complex>& z_grid) {
  if (!(p > 0.0) || p > 2.0) {
    throw UnsupportedInputError(
        "hankel_measure_detector supports 0 < p <= 2 only");
  }
  const double gamma = growth_exponent(omega);
  if (!(p * (beta + 1.0) + p > gamma + 1.0)) {
    throw ClassificationError(
        "detector exponent too small: need p(beta+1)+p > gamma+1 with growth "
        "exponent gamma = " +
        std::to_string(gamma) + ", got p = " + std::to_string(p) +
        ", beta = " + std::to_string(beta));
  }
  const std::vector<Complex> grid = z_grid.empty() ? detector_grid() : z_grid;
  const double s = 4.0 + 2.0 * beta;
  const double e = 2.0 * beta + 4.0 - 2.0 / p;

  // Finite density contribution: Σ_k C_k(s) z̄^k · 2ν_{2k+1} conj(h_k).
  std::vector<Complex> dens;
  if (mu.density()) {
    const auto& d = *mu.density();
    const std::vector<double> c = binomial_series(s, d.h.empty() ? 0 : d.h.size() - 1);
    dens.resize(d.h.size());
    for (std::size_t k = 0; k < d.h.size(); ++k) {
      dens[k] = c[k] *
                (2.0 * d.base.moment(2.0 * static_cast<double>(k) + 1.0)) *
                std::conj(d.h.at(k));
    }
  }
  const TaylorSeries dens_poly{std::vector<Complex>(dens)};

  const auto eval = [&](Complex z) {
    const Complex zb = std::conj(z);
    Complex sum{0.0, 0.0};
    for (const auto& atom : mu.atoms()) {
      sum += atom.mass * std::pow(Complex{1.0, 0.0} - zb * atom.z, -s);
    }
    if (!dens_poly.empty()) sum += dens_poly.evaluate(zb);
    const double r = std::abs(z);
    return std::abs(sum) * std::pow(1.0 - r * r, e) /
           std::pow(omega.tail(r), 2.0 / p);
  };
  const SupScan scan = scan_grid(grid, eval);
  return DetectorReport{scan.value, scan.at, scan.divergent};
}

DetectorReport standard_criterion(const ComplexMeasure& mu, double alpha,
                                  double t,
                                  const std::vector<Complex>& z_grid) {
  if (!(t > 0.0)) throw std::domain_error("standard_criterion requires t > 0");
  if (!(alpha > -1.0)) {
    throw std::domain_error("standard_criterion requires alpha > -1");
  }
  const std::vector<Complex> grid = z_grid.empty() ? detector_grid() : z_grid;
  const double s = 2.0 + alpha + t;

  std::vector<Complex> dens;
  if (mu.density()) {
    const auto& d = *mu.density();
    const std::vector<double> c = binomial_series(s, d.h.empty() ? 0 : d.h.size() - 1);
    dens.resize(d.h.size());
    for (std::size_t k = 0; k < d.h.size(); ++k) {
      dens[k] = c[k] *
                (2.0 * d.base.moment(2.0 * static_cast<double>(k) + 1.0)) *
                d.h.at(k);
    }
  }
  const TaylorSeries dens_poly{std::vector<Complex>(dens)};

  const auto eval = [&](Complex z) {
    Complex sum{0.0, 0.0};
    for (const auto& atom : mu.atoms()) {
      sum += std::conj(atom.mass) *
             std::pow(Complex{1.0, 0.0} - z * std::conj(atom.z), -s);
    }
    if (!dens_poly.empty()) sum += dens_poly.evaluate(z);
    const double r = std::abs(z);
    return std::abs(sum) * std::pow(1.0 - r * r, t);
  };
  const SupScan scan = scan_grid(grid, eval);
  return DetectorReport{scan.value, scan.at, scan.divergent};
}

std::pair<TaylorSeries, TaylorSeries> factor_zero_free(const TaylorSeries& big_f,
                                                       double r, double p,
                                                       double q,
                                                       std::size_t n) {
  if (big_f.empty()) {
    throw UnsupportedInputError("factor_zero_free: empty series");
  }
  // Zero-freeness on the closed disk: minimum modulus and winding number on
  // the unit circle (argument principle counts interior zeros).
  const int t_nodes = std::max(4096, next_pow2(8 * (big_f.degree() + 1)));
  std::vector<Complex> vals;
  values_on_circle(big_f.coeffs(), 1.0, t_nodes, vals);
  double min_mod = std::numeric_limits<double>::infinity();
  double max_mod = 0.0;
  for (const auto& v : vals) {
    min_mod = std::min(min_mod, std::abs(v));
    max_mod = std::max(max_mod, std::abs(v));
  }
  if (!(min_mod > 1e-9 * std::max(max_mod, 1.0))) {
    throw UnsupportedInputError(
        "factor_zero_free: the series vanishes on or near the unit circle "
        "(min boundary modulus " +
        std::to_string(min_mod) + ")");
  }
  double arg_sum = 0.0;
  for (int i = 0; i < t_nodes; ++i) {
    arg_sum += std::arg(vals[(i + 1) % t_nodes] / vals[i]);
  }
  const long winding = std::lround(arg_sum / (2.0 * std::numbers::pi));
  if (winding != 0) {
    throw UnsupportedInputError(
        "factor_zero_free: the series has " + std::to_string(winding) +
        " zero(s) inside the unit disk; only zero-free targets are supported");
  }

  // log-series L with exp(L) = F, then E(s) = exp(sL), by the standard
  // coefficient recurrences from F' = L'F and E' = sL'E.
  const std::vector<Complex>& fc = big_f.coeffs();
  std::vector<Complex> lc(n + 1, Complex{0.0, 0.0});
  lc[0] = std::log(fc[0]);
  for (std::size_t k = 1; k <= n; ++k) {
    Complex acc = static_cast<double>(k) * (k < fc.size() ? fc[k] : Complex{0.0, 0.0});
    for (std::size_t j = 1; j < k; ++j) {
      if (k - j < fc.size()) {
        acc -= static_cast<double>(j) * lc[j] * fc[k - j];
      }
    }
    lc[k] = acc / (static_cast<double>(k) * fc[0]);
  }
  const auto exp_series = [&](double s) {
    std::vector<Complex> ec(n + 1, Complex{0.0, 0.0});
    ec[0] = std::exp(s * lc[0]);
    for (std::size_t k = 1; k <= n; ++k) {
      Complex acc{0.0, 0.0};
      for (std::size_t j = 1; j <= k; ++j) {
        acc += static_cast<double>(j) * lc[j] * ec[k - j];
      }
      ec[k] = s * acc / static_cast<double>(k);
    }
    return TaylorSeries(std::move(ec));
  };
  return {exp_series(r / p), exp_series(r / q)};
}

}  // namespace hankel
