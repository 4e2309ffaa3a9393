// Copyright (c) 2026 the hankelkit authors
// SPDX-License-Identifier: Apache-2.0
//
// C boundary: every entry point validates its arguments, forwards to the C++
// core, and converts exceptions into status codes plus a thread-local
// message. No exception escapes.
#include "hankel/hankel_c.h"

#include <cstring>
#include <exception>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hankel/descriptors.hpp"
#include "hankel/errors.hpp"
#include "hankel/hankelnorm.hpp"
#include "hankel/measures.hpp"
#include "hankel/norms.hpp"
#include "hankel/operators.hpp"
#include "hankel/series.hpp"
#include "hankel/suites.hpp"
#include "hankel/weights.hpp"

struct hk_weight {
  hankel::RadialWeight w;
};
struct hk_series {
  hankel::TaylorSeries s;
};
struct hk_measure {
  hankel::ComplexMeasure m;
};

namespace {

thread_local std::string g_last_error;

void set_error(std::string msg) { g_last_error = std::move(msg); }

template <typename Fn>
hk_status guarded(Fn&& fn) noexcept {
  try {
    g_last_error.clear();
    return fn();
  } catch (const hankel::ParseError& e) {
    set_error(e.what());
    return HK_ERR_PARSE;
  } catch (const hankel::UnsupportedInputError& e) {
    set_error(e.what());
    return HK_ERR_UNSUPPORTED;
  } catch (const hankel::ClassificationError& e) {
    set_error(e.what());
    return HK_ERR_CLASSIFICATION;
  } catch (const hankel::ToleranceError& e) {
    set_error(e.what());
    return HK_ERR_TOLERANCE;
  } catch (const hankel::NonConvergenceError& e) {
    set_error(e.what());
    return HK_ERR_NONCONVERGENCE;
  } catch (const std::domain_error& e) {
    set_error(e.what());
    return HK_ERR_DOMAIN;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return HK_ERR_DOMAIN;
  } catch (const std::filesystem::filesystem_error& e) {
    set_error(e.what());
    return HK_ERR_IO;
  } catch (const std::exception& e) {
    set_error(e.what());
    return HK_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return HK_ERR_INTERNAL;
  }
}

hk_status invalid(const char* what) {
  set_error(std::string("invalid argument: ") + what);
  return HK_ERR_INVALID;
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hankel::Complex to_c(double re, double im) { return {re, im}; }

hk_status store_series(hankel::TaylorSeries s, hk_series** out) {
  *out = new hk_series{std::move(s)};
  return HK_OK;
}

std::vector<std::string> split_statements(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (const char c : text) {
    if (c == ';' || c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  lines.push_back(cur);
  return lines;
}

const hankel::ConfigSection* find_measure_section(const hankel::Config& cfg,
                                                  const std::string& name) {
  if (const auto* s = cfg.find_section("measure " + name)) return s;
  return cfg.find_section(name);
}

// Layered request resolution: suite defaults < [suite] config section < the
// explicit fields of hk_suite_options.
hankel::SuiteRequest build_request(const char* suite,
                                   const hk_suite_options* opt) {
  hankel::SuiteRequest req;
  req.suite = suite;
  req.config_hash = hankel::fnv1a64("");

  if (opt != nullptr && opt->config_path != nullptr) {
    const hankel::Config cfg = hankel::parse_config_file(opt->config_path);
    req.config_hash = hankel::fnv1a64(cfg.text);
    const std::string base_dir =
        std::filesystem::path(opt->config_path).parent_path().string();

    if (const hankel::ConfigSection* s = cfg.find_section(suite)) {
      if (const auto v = s->find("omega")) req.omega = cfg.weight(*v);
      if (const auto v = s->find("p")) req.p = std::stod(*v);
      if (const auto v = s->find("q")) req.q = std::stod(*v);
      if (const auto v = s->find("trunc"))
        req.n_ladder = hankel::parse_size_list(*v);
      if (const auto v = s->find("seed")) req.seed = std::stoull(*v);
      if (const auto v = s->find("corpus")) {
        req.corpus_explicit = true;
        std::string cur;
        std::vector<std::string> names;
        for (const char c : *v + " ") {
          if (c == ' ' || c == '\t' || c == ',') {
            if (!cur.empty()) names.push_back(cur);
            cur.clear();
          } else {
            cur.push_back(c);
          }
        }
        for (const std::string& n : names) {
          const hankel::ConfigSection* ms = find_measure_section(cfg, n);
          if (ms == nullptr) {
            throw hankel::ParseError(cfg.source + ": corpus entry '" + n +
                                     "' has no [measure " + n + "] section");
          }
          req.corpus.push_back(cfg.measure(*ms, base_dir));
        }
      }
    }
    if (!req.corpus_explicit) {
      const auto sections = cfg.sections_with_prefix("measure ");
      if (!sections.empty()) {
        req.corpus_explicit = true;
        for (const auto* ms : sections)
          req.corpus.push_back(cfg.measure(*ms, base_dir));
      }
    }
  }

  if (opt != nullptr) {
    if (opt->trunc != nullptr) req.n_ladder = hankel::parse_size_list(opt->trunc);
    if (opt->p > 0.0) req.p = opt->p;
    if (opt->q > 0.0) req.q = opt->q;
    if (opt->has_seed != 0) req.seed = opt->seed;
  }
  return req;
}

}  // namespace

extern "C" {

const char* hk_version(void) { return hankel::kToolVersion; }

const char* hk_last_error(void) { return g_last_error.c_str(); }

void hk_string_free(char* s) { delete[] s; }

/* ---- weights ---- */

hk_status hk_weight_parse(const char* descriptor, hk_weight** out) {
  if (descriptor == nullptr || out == nullptr) return invalid("null pointer");
  return guarded([&] {
    *out = new hk_weight{hankel::parse_weight(descriptor)};
    return HK_OK;
  });
}

void hk_weight_free(hk_weight* w) { delete w; }

hk_status hk_weight_describe(const hk_weight* w, char** out) {
  if (w == nullptr || out == nullptr) return invalid("null pointer");
  return guarded([&] {
    *out = dup_string(w->w.describe());
    return HK_OK;
  });
}

hk_status hk_weight_profile(const hk_weight* w, double rho, double* out) {
  if (w == nullptr || out == nullptr) return invalid("null pointer");
  return guarded([&] {
    *out = w->w.profile(rho);
    return HK_OK;
  });
}

hk_status hk_weight_tail(const hk_weight* w, double rho, double* out) {
  if (w == nullptr || out == nullptr) return invalid("null pointer");
  return guarded([&] {
    *out = w->w.tail(rho);
    return HK_OK;
  });
}

hk_status hk_weight_tail_quadrature(const hk_weight* w, double rho,
                                    double* out) {
  if (w == nullptr || out == nullptr) return invalid("null pointer");
  return guarded([&] {
    *out = w->w.tail_by_quadrature(rho);
    return HK_OK;
  });
}

hk_status hk_weight_moment(const hk_weight* w, double x, double* out) {
  if (w == nullptr || out == nullptr) return invalid("null pointer");
  return guarded([&] {
    *out = w->w.moment(x);
    return HK_OK;
  });
}

hk_status hk_weight_sigma(const hk_weight* w, size_t n, double* out) {
  if (w == nullptr || out == nullptr) return invalid("null pointer");
  return guarded([&] {
    *out = w->w.sigma(n);
    return HK_OK;
  });
}

hk_status hk_weight_upper_doubling(const hk_weight* w, int* is_upper,
                                   double* constant) {
  if (w == nullptr || is_upper == nullptr || constant == nullptr)
    return invalid("null pointer");
  return guarded([&] {
    const hankel::DoublingReport rep = hankel::upper_doubling_report(w->w);
    *is_upper = rep.is_upper ? 1 : 0;
    *constant = rep.upper_constant;
    return HK_OK;
  });
}

hk_status hk_weight_lower_doubling(const hk_weight* w, int* is_lower,
                                   double* k, double* c) {
  if (w == nullptr || is_lower == nullptr || k == nullptr || c == nullptr)
    return invalid("null pointer");
  return guarded([&] {
    const hankel::DoublingReport rep = hankel::lower_doubling_report(w->w);
    *is_lower = rep.is_lower ? 1 : 0;
    *k = rep.lower_K;
    *c = rep.lower_C;
    return HK_OK;
  });
}

hk_status hk_weight_growth_exponent(const hk_weight* w, double* gamma) {
  if (w == nullptr || gamma == nullptr) return invalid("null pointer");
  return guarded([&] {
    *gamma = hankel::growth_exponent(w->w);
    return HK_OK;
  });
}

/* ---- series ---- */

hk_status hk_series_create(const double* re, const double* im, size_t n,
                           hk_series** out) {
  if (re == nullptr || out == nullptr) return invalid("null pointer");
  return guarded([&] {
    std::vector<hankel::Complex> c(n);
    for (size_t i = 0; i < n; ++i) c[i] = {re[i], im != nullptr ? im[i] : 0.0};
    return store_series(hankel::TaylorSeries(std::move(c)), out);
  });
}

hk_status hk_series_monomial(size_t n, double re, double im, hk_series** out) {
  if (out == nullptr) return invalid("null pointer");
  return guarded([&] {
    return store_series(hankel::TaylorSeries::monomial(n, to_c(re, im)), out);
  });
}

void hk_series_free(hk_series* s) { delete s; }

hk_status hk_series_size(const hk_series* s, size_t* out) {
  if (s == nullptr || out == nullptr) return invalid("null pointer");
  *out = s->s.size();
  return HK_OK;
}

hk_status hk_series_coeff(const hk_series* s, size_t n, double* re,
                          double* im) {
  if (s == nullptr || re == nullptr || im == nullptr)
    return invalid("null pointer");
  const hankel::Complex c = s->s.at(n);
  *re = c.real();
  *im = c.imag();
  return HK_OK;
}

hk_status hk_series_evaluate(const hk_series* s, double zre, double zim,
                             double* re, double* im) {
  if (s == nullptr || re == nullptr || im == nullptr)
    return invalid("null pointer");
  return guarded([&] {
    const hankel::Complex v = s->s.evaluate(to_c(zre, zim));
    *re = v.real();
    *im = v.imag();
    return HK_OK;
  });
}

hk_status hk_series_read_csv(const char* path, hk_series** out) {
  if (path == nullptr || out == nullptr) return invalid("null pointer");
  return guarded(
      [&] { return store_series(hankel::read_series_csv_file(path), out); });
}

hk_status hk_series_write_csv(const char* path, const hk_series* s) {
  if (path == nullptr || s == nullptr) return invalid("null pointer");
  return guarded([&] {
    hankel::write_series_csv_file(path, s->s);
    return HK_OK;
  });
}

/* ---- measures ---- */

hk_status hk_measure_create(hk_measure** out) {
  if (out == nullptr) return invalid("null pointer");
  *out = new hk_measure{};
  return HK_OK;
}

void hk_measure_free(hk_measure* m) { delete m; }

hk_status hk_measure_add_atom(hk_measure* m, double zre, double zim,
                              double cre, double cim) {
  if (m == nullptr) return invalid("null pointer");
  return guarded([&] {
    m->m.add_atom(to_c(zre, zim), to_c(cre, cim));
    return HK_OK;
  });
}

hk_status hk_measure_set_density(hk_measure* m, const hk_series* h,
                                 const hk_weight* base) {
  if (m == nullptr || h == nullptr || base == nullptr)
    return invalid("null pointer");
  return guarded([&] {
    m->m.set_density(h->s, base->w);
    return HK_OK;
  });
}

hk_status hk_measure_scale(hk_measure* m, double re, double im) {
  if (m == nullptr) return invalid("null pointer");
  return guarded([&] {
    m->m = m->m.scaled(to_c(re, im));
    return HK_OK;
  });
}

hk_status hk_measure_moment(const hk_measure* m, size_t k, double* re,
                            double* im) {
  if (m == nullptr || re == nullptr || im == nullptr)
    return invalid("null pointer");
  return guarded([&] {
    const hankel::Complex v = m->m.moment(k);
    *re = v.real();
    *im = v.imag();
    return HK_OK;
  });
}

hk_status hk_measure_parse(const char* text, const char* base_dir,
                           hk_measure** out) {
  if (text == nullptr || out == nullptr) return invalid("null pointer");
  return guarded([&] {
    *out = new hk_measure{hankel::parse_measure_block(
        split_statements(text), base_dir != nullptr ? base_dir : "")};
    return HK_OK;
  });
}

hk_status hk_measure_from_config(const char* config_path, const char* section,
                                 hk_measure** out) {
  if (config_path == nullptr || section == nullptr || out == nullptr)
    return invalid("null pointer");
  return guarded([&] {
    const hankel::Config cfg = hankel::parse_config_file(config_path);
    const hankel::ConfigSection* s = find_measure_section(cfg, section);
    if (s == nullptr) {
      throw hankel::ParseError(cfg.source + ": no [measure " +
                               std::string(section) + "] section");
    }
    const std::string base_dir =
        std::filesystem::path(config_path).parent_path().string();
    *out = new hk_measure{cfg.measure(*s, base_dir)};
    return HK_OK;
  });
}

/* ---- kernels, projections, fractional derivatives ---- */

hk_status hk_kernel(const hk_weight* w, double are, double aim, size_t n_max,
                    hk_series** out) {
  if (w == nullptr || out == nullptr) return invalid("null pointer");
  return guarded([&] {
    return store_series(hankel::kernel(w->w, to_c(are, aim), n_max), out);
  });
}

hk_status hk_project(const hk_weight* w, const hk_measure* mu, int conjugated,
                     size_t n_max, hk_series** out) {
  if (w == nullptr || mu == nullptr || out == nullptr)
    return invalid("null pointer");
  return guarded([&] {
    return store_series(
        hankel::project(w->w, mu->m, conjugated != 0, n_max), out);
  });
}

hk_status hk_frac_r(const hk_weight* omega, const hk_weight* nu,
                    const hk_series* f, hk_series** out) {
  if (omega == nullptr || nu == nullptr || f == nullptr || out == nullptr)
    return invalid("null pointer");
  return guarded(
      [&] { return store_series(hankel::frac_R(omega->w, nu->w, f->s), out); });
}

hk_status hk_d_upper(const hk_weight* w, const hk_series* f, hk_series** out) {
  if (w == nullptr || f == nullptr || out == nullptr)
    return invalid("null pointer");
  return guarded(
      [&] { return store_series(hankel::d_upper(w->w, f->s), out); });
}

hk_status hk_d_lower(const hk_weight* w, const hk_series* f, hk_series** out) {
  if (w == nullptr || f == nullptr || out == nullptr)
    return invalid("null pointer");
  return guarded(
      [&] { return store_series(hankel::d_lower(w->w, f->s), out); });
}

hk_status hk_hankel_apply(const hk_measure* mu, const hk_weight* w,
                          const hk_series* f, size_t n_max, hk_series** out) {
  if (mu == nullptr || w == nullptr || f == nullptr || out == nullptr)
    return invalid("null pointer");
  return guarded([&] {
    return store_series(
        hankel::hankel_operator_apply(mu->m, w->w, f->s, n_max), out);
  });
}

hk_status hk_form_eval(const hk_measure* mu, const hk_series* f,
                       const hk_series* g, double* re, double* im) {
  if (mu == nullptr || f == nullptr || g == nullptr || re == nullptr ||
      im == nullptr)
    return invalid("null pointer");
  return guarded([&] {
    const hankel::Complex v = hankel::hankel_form_eval(mu->m, f->s, g->s);
    *re = v.real();
    *im = v.imag();
    return HK_OK;
  });
}

hk_status hk_residual(const hk_series* f, const hk_measure* mu,
                      const hk_weight* w, double rho, double* out) {
  if (f == nullptr || mu == nullptr || w == nullptr || out == nullptr)
    return invalid("null pointer");
  return guarded([&] {
    *out = hankel::dilated_projection_residual(f->s, mu->m, w->w, rho);
    return HK_OK;
  });
}

/* ---- norms and pairings ---- */

hk_status hk_bergman_norm(const hk_series* f, const hk_weight* w, double p,
                          double* out) {
  if (f == nullptr || w == nullptr || out == nullptr)
    return invalid("null pointer");
  return guarded([&] {
    *out = hankel::bergman_norm(f->s, w->w, p);
    return HK_OK;
  });
}

hk_status hk_inner_product(const hk_series* f, const hk_series* g,
                           const hk_weight* w, double* re, double* im) {
  if (f == nullptr || g == nullptr || w == nullptr || re == nullptr ||
      im == nullptr)
    return invalid("null pointer");
  return guarded([&] {
    const hankel::Complex v = hankel::inner_product(f->s, g->s, w->w);
    *re = v.real();
    *im = v.imag();
    return HK_OK;
  });
}

hk_status hk_bloch_norm(const hk_series* f, double* value, double* at_re,
                        double* at_im) {
  if (f == nullptr || value == nullptr) return invalid("null pointer");
  return guarded([&] {
    const hankel::BlochReport rep = hankel::bloch_norm(f->s);
    *value = rep.value;
    if (at_re != nullptr) *at_re = rep.at.real();
    if (at_im != nullptr) *at_im = rep.at.imag();
    return HK_OK;
  });
}

hk_status hk_garsia_bmo(const hk_series* f, double* out) {
  if (f == nullptr || out == nullptr) return invalid("null pointer");
  return guarded([&] {
    *out = hankel::garsia_bmo(f->s);
    return HK_OK;
  });
}

hk_status hk_bmoa_infty_norm(const hk_series* f, const hk_weight* w,
                             double* out) {
  if (f == nullptr || w == nullptr || out == nullptr)
    return invalid("null pointer");
  return guarded([&] {
    *out = hankel::bmoa_infty_norm(f->s, w->w);
    return HK_OK;
  });
}

hk_status hk_d_omega_bmoa_norm(const hk_series* g, const hk_weight* w,
                               double* out) {
  if (g == nullptr || w == nullptr || out == nullptr)
    return invalid("null pointer");
  return guarded([&] {
    *out = hankel::d_omega_bmoa_norm(g->s, w->w);
    return HK_OK;
  });
}

hk_status hk_pairing(const hk_series* f, const hk_series* g,
                     const hk_weight* w, double rho, double* sum_re,
                     double* sum_im, double* quad_re, double* quad_im) {
  if (f == nullptr || g == nullptr || w == nullptr || sum_re == nullptr ||
      sum_im == nullptr || quad_re == nullptr || quad_im == nullptr)
    return invalid("null pointer");
  return guarded([&] {
    const hankel::PairingResult pr =
        hankel::pairing_omega_omega(f->s, g->s, w->w, rho);
    *sum_re = pr.sum_form.real();
    *sum_im = pr.sum_form.imag();
    *quad_re = pr.quadrature_form.real();
    *quad_im = pr.quadrature_form.imag();
    return HK_OK;
  });
}

hk_status hk_frac_bloch_sup(const hk_series* f, const hk_weight* omega,
                            const hk_weight* nu, double* out) {
  if (f == nullptr || omega == nullptr || nu == nullptr || out == nullptr)
    return invalid("null pointer");
  return guarded([&] {
    *out = hankel::frac_bloch_sup(f->s, omega->w, nu->w);
    return HK_OK;
  });
}

hk_status hk_bfrac_condition(const hk_weight* omega, const hk_weight* nu,
                             int* holds, double* sup_ratio,
                             double* last_decade_ratio) {
  if (omega == nullptr || nu == nullptr || holds == nullptr)
    return invalid("null pointer");
  return guarded([&] {
    const hankel::BfracReport rep = hankel::bfrac_condition(omega->w, nu->w);
    *holds = rep.holds ? 1 : 0;
    if (sup_ratio != nullptr) *sup_ratio = rep.sup_ratio;
    if (last_decade_ratio != nullptr)
      *last_decade_ratio = rep.last_decade_ratio;
    return HK_OK;
  });
}

hk_status hk_kernel_norm_comparison(const hk_weight* omega,
                                    const hk_weight* nu, double p,
                                    const double* ladder, size_t ladder_len,
                                    double* rows) {
  if (omega == nullptr || nu == nullptr || ladder == nullptr ||
      rows == nullptr)
    return invalid("null pointer");
  if (ladder_len == 0) return invalid("empty ladder");
  return guarded([&] {
    const std::vector<double> zl(ladder, ladder + ladder_len);
    const std::vector<hankel::KernelNormRow> table =
        hankel::kernel_norm_comparison(omega->w, nu->w, p, zl);
    for (size_t i = 0; i < table.size(); ++i) {
      rows[7 * i + 0] = table[i].z;
      rows[7 * i + 1] = static_cast<double>(table[i].trunc);
      rows[7 * i + 2] = table[i].lhs_p;
      rows[7 * i + 3] = table[i].rhs;
      rows[7 * i + 4] = table[i].ratio;
      rows[7 * i + 5] = table[i].rhs2;
      rows[7 * i + 6] = table[i].ratio2;
    }
    return HK_OK;
  });
}

/* ---- Hankel norm estimates, detectors, factorization ---- */

hk_status hk_form_norm_22(const hk_measure* mu, const hk_weight* w, size_t n,
                          double* value) {
  if (mu == nullptr || w == nullptr || value == nullptr)
    return invalid("null pointer");
  return guarded([&] {
    const hankel::HankelFormSpec spec{mu->m, w->w, 2.0, 2.0};
    *value = hankel::form_norm_22(spec, n).value;
    return HK_OK;
  });
}

hk_status hk_form_norm_pq(const hk_measure* mu, const hk_weight* w, double p,
                          double q, size_t n, unsigned long long seed,
                          double* value) {
  if (mu == nullptr || w == nullptr || value == nullptr)
    return invalid("null pointer");
  return guarded([&] {
    const hankel::HankelFormSpec spec{mu->m, w->w, p, q};
    hankel::AscentOptions opts;
    opts.seed = seed;
    *value = hankel::form_norm_pq(spec, n, opts).value;
    return HK_OK;
  });
}

hk_status hk_dual_norm(const hk_measure* mu, const hk_weight* w, double p,
                       double q, size_t n, double* value) {
  if (mu == nullptr || w == nullptr || value == nullptr)
    return invalid("null pointer");
  return guarded([&] {
    const hankel::HankelFormSpec spec{mu->m, w->w, p, q};
    *value = hankel::dual_norm(spec, n);
    return HK_OK;
  });
}

hk_status hk_operator_norm_pq(const hk_measure* mu, const hk_weight* w,
                              double p, double q, size_t n,
                              unsigned long long seed, double* value) {
  if (mu == nullptr || w == nullptr || value == nullptr)
    return invalid("null pointer");
  return guarded([&] {
    const hankel::HankelFormSpec spec{mu->m, w->w, p, q};
    hankel::AscentOptions opts;
    opts.seed = seed;
    *value = hankel::operator_norm_pq(spec, n, opts).value;
    return HK_OK;
  });
}

hk_status hk_hankel_measure_detector(const hk_measure* mu, const hk_weight* w,
                                     double p, double beta, double* value,
                                     double* at_re, double* at_im,
                                     int* divergent) {
  if (mu == nullptr || w == nullptr || value == nullptr)
    return invalid("null pointer");
  return guarded([&] {
    const hankel::DetectorReport rep =
        hankel::hankel_measure_detector(mu->m, w->w, p, beta);
    *value = rep.value;
    if (at_re != nullptr) *at_re = rep.at.real();
    if (at_im != nullptr) *at_im = rep.at.imag();
    if (divergent != nullptr) *divergent = rep.divergent ? 1 : 0;
    return HK_OK;
  });
}

hk_status hk_standard_criterion(const hk_measure* mu, double alpha, double t,
                                double* value, double* at_re, double* at_im,
                                int* divergent) {
  if (mu == nullptr || value == nullptr)
    return invalid("null pointer");
  return guarded([&] {
    const hankel::DetectorReport rep =
        hankel::standard_criterion(mu->m, alpha, t);
    *value = rep.value;
    if (at_re != nullptr) *at_re = rep.at.real();
    if (at_im != nullptr) *at_im = rep.at.imag();
    if (divergent != nullptr) *divergent = rep.divergent ? 1 : 0;
    return HK_OK;
  });
}

hk_status hk_factor_zero_free(const hk_series* big_f, double r, double p,
                              double q, size_t n, hk_series** f,
                              hk_series** g) {
  if (big_f == nullptr || f == nullptr || g == nullptr)
    return invalid("null pointer");
  return guarded([&] {
    auto [fs, gs] = hankel::factor_zero_free(big_f->s, r, p, q, n);
    *f = new hk_series{std::move(fs)};
    *g = new hk_series{std::move(gs)};
    return HK_OK;
  });
}

/* ---- suites ---- */

hk_status hk_run_suite(const char* suite, const hk_suite_options* options,
                       int* pass, char** verdict_json) {
  if (suite == nullptr || pass == nullptr) return invalid("null pointer");
  return guarded([&] {
    const hankel::SuiteRequest req = build_request(suite, options);
    const hankel::SuiteResult res = hankel::run_suite(req);
    if (options != nullptr && options->out_dir != nullptr) {
      hankel::write_suite_artifacts(res, req, options->out_dir);
    }
    *pass = res.pass() ? 1 : 0;
    if (verdict_json != nullptr) {
      *verdict_json = dup_string(hankel::suite_verdict_json(res, req));
    }
    return HK_OK;
  });
}

} /* extern "C" */
