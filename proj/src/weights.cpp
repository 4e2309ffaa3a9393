// Copyright (c) 2026 the hankelkit authors
// SPDX-License-Identifier: Apache-2.0
#include "hankel/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>

#include "hankel/quadrature.hpp"

namespace hankel {

namespace {

void check_rho(double rho) {
  if (!(rho >= 0.0) || rho >= 1.0) {
    throw std::domain_error("radial argument must lie in [0,1), got " +
                            std::to_string(rho));
  }
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

struct RadialWeight::Impl {
  Kind kind = Kind::kConstant;
  double param = 0.0;  // alpha for standard, x for w_derived
  std::shared_ptr<Impl> base;
  std::function<double(double)> profile_fn;  // custom only
  std::vector<std::pair<double, double>> samples;
  std::string label;
  std::string source;

  // Memoized values; copies of the owning RadialWeight share this cache so
  // identity checks always see the same floating-point numbers.
  mutable std::mutex mu;
  mutable std::map<double, double> tail_cache;
  mutable std::map<double, double> moment_cache;
  mutable std::vector<double> sigma_cache;

  double profile(double rho) const;
  double tail(double rho) const;
  double tail_closed_or_quad(double rho) const;
  double tail_quad(double rho) const;
  double moment(double x) const;
  double moment_uncached(double x) const;
  double omega_plus_profile(double rho) const;
};

double RadialWeight::Impl::profile(double rho) const {
  check_rho(rho);
  switch (kind) {
    case Kind::kConstant:
      return 1.0;
    case Kind::kStandard:
      return (param + 1.0) * std::pow(1.0 - rho * rho, param);
    case Kind::kWDerived: {
      const double x = param;
      const double t = base->tail(rho);
      const double om = base->profile(rho);
      const double one_minus = 1.0 - rho;
      // (x-1) ω̂^x (1-ρ)^{x-2} + x ω ω̂^{x-1} (1-ρ)^{x-1}; bounded for x ≥ 1
      // whenever ω̂(ρ) ≲ (1-ρ).
      return (x - 1.0) * std::pow(t, x) * std::pow(one_minus, x - 2.0) +
             x * om * std::pow(t, x - 1.0) * std::pow(one_minus, x - 1.0);
    }
    case Kind::kOmegaPlus:
      return omega_plus_profile(rho);
    case Kind::kCustom:
      return profile_fn(rho);
    case Kind::kSamples: {
      if (samples.empty()) return 0.0;
      if (rho <= samples.front().first) return samples.front().second;
      if (rho >= samples.back().first) return samples.back().second;
      auto it = std::upper_bound(
          samples.begin(), samples.end(), rho,
          [](double v, const std::pair<double, double>& s) { return v < s.first; });
      const auto& hi = *it;
      const auto& lo = *(it - 1);
      const double t = (rho - lo.first) / (hi.first - lo.first);
      return lo.second + t * (hi.second - lo.second);
    }
  }
  return 0.0;
}

double RadialWeight::Impl::omega_plus_profile(double rho) const {
  if (rho <= 0.0) {
    throw std::domain_error(
        "omega_plus profile diverges at 0 (logarithmic); use moments instead");
  }
  return adaptive_integrate(
      [this](double s) { return base->profile(s) / s; }, rho, 1.0, 1e-12);
}

double RadialWeight::Impl::tail_quad(double rho) const {
  // Substitution t = 1 - (1-ρ)u clusters the panels toward 1.
  const double one_minus = 1.0 - rho;
  return one_minus *
         adaptive_integrate(
             [this, rho, one_minus](double u) {
               return profile(1.0 - one_minus * u);
             },
             0.0, 1.0, 1e-10);
}

double RadialWeight::Impl::tail_closed_or_quad(double rho) const {
  switch (kind) {
    case Kind::kConstant:
      return 1.0 - rho;
    case Kind::kStandard: {
      // ∫_ρ^1 (α+1)(1-t²)^α dt = (α+1) 2^α Σ_k C(α,k)(-1/2)^k (1-ρ)^{α+k+1}/(α+k+1)
      // (binomial expansion of (1 - v/2)^α with v = 1-t; |v/2| ≤ 1/2 so the
      // series converges geometrically).
      const double alpha = param;
      const double v = 1.0 - rho;
      double binom = 1.0;  // C(alpha, k)
      double vk = std::pow(v, alpha + 1.0);
      double sum = 0.0;
      for (int k = 0; k < 200; ++k) {
        const double term = binom * vk / (alpha + k + 1.0);
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum) && k > 4) break;
        binom *= -(alpha - k) / (2.0 * (k + 1.0));
        vk *= v;
      }
      return (alpha + 1.0) * std::pow(2.0, alpha) * sum;
    }
    case Kind::kWDerived:
      // Exact antiderivative: d/dρ[-ω̂^x(1-ρ)^{x-1}] equals the W profile.
      return std::pow(base->tail(rho), param) * std::pow(1.0 - rho, param - 1.0);
    case Kind::kOmegaPlus:
      // ∫_ρ^1 ω_+ = ω̂(ρ) - ρ ω_+(ρ) (Fubini); at ρ=0 this is just (ω_+)_0.
      if (rho == 0.0) return moment(0.0);
      return base->tail(rho) - rho * omega_plus_profile(rho);
    case Kind::kCustom:
    case Kind::kSamples:
      return tail_quad(rho);
  }
  return 0.0;
}

double RadialWeight::Impl::tail(double rho) const {
  check_rho(rho);
  std::lock_guard<std::mutex> lock(mu);
  auto it = tail_cache.find(rho);
  if (it != tail_cache.end()) return it->second;
  const double v = tail_closed_or_quad(rho);
  tail_cache.emplace(rho, v);
  return v;
}

double RadialWeight::Impl::moment_uncached(double x) const {
  switch (kind) {
    case Kind::kConstant:
      return 1.0 / (x + 1.0);
    case Kind::kStandard: {
      // (α+1)/2 · B((x+1)/2, α+1)
      const double alpha = param;
      const double a = 0.5 * (x + 1.0);
      const double b = alpha + 1.0;
      return 0.5 * (alpha + 1.0) *
             std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
    }
    case Kind::kWDerived: {
      const double xw = param;
      if (x == 0.0) return tail(0.0);
      if (base->kind == Kind::kConstant) {
        // Ŵ(s) = (1-s)^{2xw-1}, so W_x = x·B(x, 2xw) exactly.
        return x * std::exp(std::lgamma(x) + std::lgamma(2.0 * xw) -
                            std::lgamma(x + 2.0 * xw));
      }
      // Integration by parts: W_x = x ∫_0^1 s^{x-1} Ŵ(s) ds with Ŵ closed.
      // For x < 1 substitute s = u^k to remove the s^{x-1} endpoint blow-up.
      const auto what = [this](double s) { return tail_closed_or_quad(s); };
      if (x >= 1.0) {
        return x * adaptive_integrate(
                       [&](double s) {
                         return std::pow(s, x - 1.0) * (s < 1.0 ? what(s) : 0.0);
                       },
                       0.0, 1.0, 1e-12);
      }
      const double k = std::ceil(2.0 / x);
      return x * k *
             adaptive_integrate(
                 [&](double u) {
                   const double s = std::pow(u, k);
                   return std::pow(u, k * x - 1.0) * (s < 1.0 ? what(s) : 0.0);
                 },
                 0.0, 1.0, 1e-12);
    }
    case Kind::kOmegaPlus:
      // (ω_+)_x = ω_x / (x+1), exactly.
      return base->moment(x) / (x + 1.0);
    case Kind::kCustom:
    case Kind::kSamples:
      return adaptive_integrate(
          [this, x](double s) { return profile(s) * std::pow(s, x); }, 0.0, 1.0,
          1e-12);
  }
  return 0.0;
}

double RadialWeight::Impl::moment(double x) const {
  if (!(x >= 0.0)) {
    throw std::domain_error("moment order must be >= 0, got " +
                            std::to_string(x));
  }
  std::lock_guard<std::mutex> lock(mu);
  auto it = moment_cache.find(x);
  if (it != moment_cache.end()) return it->second;
  const double v = moment_uncached(x);
  moment_cache.emplace(x, v);
  return v;
}

RadialWeight::RadialWeight() : impl_(std::make_shared<Impl>()) {}

RadialWeight RadialWeight::constant() { return RadialWeight(); }

RadialWeight RadialWeight::standard(double alpha) {
  if (!(alpha > -1.0)) {
    throw std::domain_error("standard weight requires alpha > -1, got " +
                            std::to_string(alpha));
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::kStandard;
  impl->param = alpha;
  return RadialWeight(std::move(impl));
}

RadialWeight RadialWeight::w_derived(double x, const RadialWeight& base) {
  if (!(x >= 1.0)) {
    throw std::domain_error("w_derived requires x >= 1, got " +
                            std::to_string(x));
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::kWDerived;
  impl->param = x;
  impl->base = base.impl_;
  return RadialWeight(std::move(impl));
}

RadialWeight RadialWeight::omega_plus(const RadialWeight& base) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::kOmegaPlus;
  impl->base = base.impl_;
  return RadialWeight(std::move(impl));
}

RadialWeight RadialWeight::custom(std::function<double(double)> profile,
                                  std::string label) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::kCustom;
  impl->profile_fn = std::move(profile);
  impl->label = std::move(label);
  return RadialWeight(std::move(impl));
}

RadialWeight RadialWeight::from_samples(
    std::vector<std::pair<double, double>> samples, std::string source) {
  if (samples.empty()) {
    throw std::domain_error("from_samples requires at least one sample");
  }
  std::sort(samples.begin(), samples.end());
  for (const auto& [rho, value] : samples) {
    if (!(rho >= 0.0) || rho > 1.0 || !(value >= 0.0)) {
      throw std::domain_error("weight samples must have rho in [0,1] and "
                              "nonnegative values");
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::kSamples;
  impl->samples = std::move(samples);
  impl->source = std::move(source);
  return RadialWeight(std::move(impl));
}

double RadialWeight::profile(double rho) const { return impl_->profile(rho); }
double RadialWeight::tail(double rho) const { return impl_->tail(rho); }
double RadialWeight::tail_by_quadrature(double rho) const {
  check_rho(rho);
  return impl_->tail_quad(rho);
}
double RadialWeight::moment(double x) const { return impl_->moment(x); }

double RadialWeight::sigma(std::size_t n) const {
  {
    std::lock_guard<std::mutex> lock(impl_->mu);
    if (n < impl_->sigma_cache.size() && impl_->sigma_cache[n] >= 0.0) {
      return impl_->sigma_cache[n];
    }
  }
  const double v = 2.0 * impl_->moment(2.0 * static_cast<double>(n) + 1.0);
  std::lock_guard<std::mutex> lock(impl_->mu);
  auto& cache = impl_->sigma_cache;
  if (cache.size() <= n) cache.resize(n + 1, -1.0);  // -1 marks "not computed"
  cache[n] = v;
  return cache[n];
}

std::string RadialWeight::describe() const {
  switch (impl_->kind) {
    case Kind::kConstant:
      return "kind=const";
    case Kind::kStandard:
      return "kind=standard alpha=" + format_double(impl_->param);
    case Kind::kWDerived:
      return "kind=wderived x=" + format_double(impl_->param) + " base=(" +
             RadialWeight(impl_->base).describe() + ")";
    case Kind::kOmegaPlus:
      return "kind=omegaplus base=(" + RadialWeight(impl_->base).describe() +
             ")";
    case Kind::kCustom:
      return "kind=custom label=" + impl_->label;
    case Kind::kSamples:
      return impl_->source.empty()
                 ? std::string("kind=custom samples=<inline>")
                 : "kind=custom samples=" + impl_->source;
  }
  return "kind=const";
}

RadialWeight::Kind RadialWeight::kind() const { return impl_->kind; }
double RadialWeight::param() const { return impl_->param; }

bool RadialWeight::has_base() const { return impl_->base != nullptr; }

RadialWeight RadialWeight::base_weight() const {
  if (!impl_->base) {
    throw std::domain_error("weight " + describe() + " has no base weight");
  }
  return RadialWeight(impl_->base);
}

const std::vector<std::pair<double, double>>* RadialWeight::samples() const {
  return impl_->kind == Kind::kSamples ? &impl_->samples : nullptr;
}
const std::string& RadialWeight::source() const { return impl_->source; }

// ----- doubling classifiers ---------------------------------------------------

std::vector<double> default_rho_grid() {
  std::vector<double> grid;
  grid.reserve(81);
  for (int k = 0; k <= 80; ++k) grid.push_back(1.0 - std::exp2(-0.25 * k));
  return grid;
}

namespace {

constexpr double kTailFloor = 1e-280;

// Split a grid into "last decade" (1-ρ within 10x of the deepest point) and
// the earlier part.
std::size_t last_decade_start(const std::vector<double>& grid) {
  const double deepest = 1.0 - grid.back();
  const double cutoff = 10.0 * deepest;
  std::size_t i = grid.size();
  while (i > 0 && 1.0 - grid[i - 1] <= cutoff) --i;
  return i;
}

}  // namespace

DoublingReport upper_doubling_report(const RadialWeight& w,
                                     std::vector<double> grid) {
  if (grid.empty()) grid = default_rho_grid();
  std::sort(grid.begin(), grid.end());
  if (grid.back() < 0.999) {
    throw std::domain_error(
        "upper_doubling_report: grid must contain points >= 0.999");
  }
  DoublingReport rep;
  rep.grid = grid;
  const std::size_t split = last_decade_start(grid);
  double max_early = 0.0, max_late = 0.0, max_all = 0.0;
  bool late_invalid = false;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double rho = grid[i];
    const double t0 = w.tail(rho);
    const double t1 = w.tail(0.5 * (1.0 + rho));
    const bool valid = t0 >= kTailFloor && t1 >= kTailFloor;
    if (!valid) {
      // Tail underflow deep in the grid: the ratio is effectively unbounded
      // there, so the weight cannot be certified upper-doubling.
      if (i >= split) late_invalid = true;
      continue;
    }
    const double ratio = t0 / t1;
    max_all = std::max(max_all, ratio);
    if (i >= split) {
      max_late = std::max(max_late, ratio);
    } else {
      max_early = std::max(max_early, ratio);
    }
  }
  rep.upper_constant = max_all;
  rep.is_upper = !late_invalid && max_early > 0.0 && max_late > 0.0 &&
                 max_late <= 1.05 * max_early;
  return rep;
}

DoublingReport lower_doubling_report(const RadialWeight& w,
                                     std::vector<double> k_candidates,
                                     std::vector<double> grid) {
  if (grid.empty()) grid = default_rho_grid();
  if (k_candidates.empty()) k_candidates = {1.5, 2.0, 4.0, 8.0};
  std::sort(grid.begin(), grid.end());
  DoublingReport rep;
  rep.grid = grid;
  double best_c = 0.0, best_k = 0.0;
  for (double K : k_candidates) {
    if (!(K > 1.0)) {
      throw std::domain_error("lower doubling candidates require K > 1");
    }
    double min_ratio = std::numeric_limits<double>::infinity();
    for (double rho : grid) {
      const double t0 = w.tail(rho);
      const double t1 = w.tail(1.0 - (1.0 - rho) / K);
      if (t0 < kTailFloor || t1 < kTailFloor) continue;
      min_ratio = std::min(min_ratio, t0 / t1);
    }
    if (std::isfinite(min_ratio) && min_ratio > best_c) {
      best_c = min_ratio;
      best_k = K;
    }
  }
  rep.lower_C = best_c;
  rep.lower_K = best_k;
  rep.is_lower = best_c > 1.0 + 1e-3;
  return rep;
}

double growth_exponent(const RadialWeight& w, std::vector<double> grid) {
  if (grid.empty()) grid = default_rho_grid();
  std::sort(grid.begin(), grid.end());
  const DoublingReport upper = upper_doubling_report(w, grid);
  if (!upper.is_upper) {
    throw ClassificationError(
        "growth_exponent: weight fails the upper-doubling check (ratio "
        "constant " +
        std::to_string(upper.upper_constant) + " is not grid-stable)");
  }
  std::vector<double> tails;
  tails.reserve(grid.size());
  for (double rho : grid) tails.push_back(w.tail(rho));
  for (int step = 1; step <= 64; ++step) {
    const double gamma = 0.25 * step;
    bool ok = true;
    double prefix_max = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (tails[i] < kTailFloor) continue;
      const double f = tails[i] / std::pow(1.0 - grid[i], gamma);
      if (prefix_max > 1.05 * f) {
        ok = false;
        break;
      }
      prefix_max = std::max(prefix_max, f);
    }
    if (ok) return gamma;
  }
  throw ClassificationError(
      "growth_exponent: no exponent on the ladder {0.25,...,16} makes "
      "tail(ρ)/(1-ρ)^γ almost increasing for weight " +
      w.describe());
}

}  // namespace hankel
