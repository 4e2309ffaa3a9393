// Copyright (c) 2026 the hankelkit authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Uses only the C interface (hankel_c.h): verify
// runs a suite and prints its JSON verdict; compute dispatches one operation
// and prints the value followed by a '#' provenance line.
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hankel/hankel_c.h"

namespace {

constexpr int kExitFail = 1;   // suite ran; verdict is fail
constexpr int kExitError = 2;  // usage, parse, or computation error

struct WeightDeleter {
  void operator()(hk_weight* w) const { hk_weight_free(w); }
};
struct SeriesDeleter {
  void operator()(hk_series* s) const { hk_series_free(s); }
};
struct MeasureDeleter {
  void operator()(hk_measure* m) const { hk_measure_free(m); }
};
using WeightPtr = std::unique_ptr<hk_weight, WeightDeleter>;
using SeriesPtr = std::unique_ptr<hk_series, SeriesDeleter>;
using MeasurePtr = std::unique_ptr<hk_measure, MeasureDeleter>;

[[noreturn]] void die(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  std::exit(kExitError);
}

void require_ok(hk_status st, const std::string& what) {
  if (st != HK_OK) die(what + ": " + hk_last_error());
}

// "0.5" or "0.5:0.25" -> (re, im).
std::pair<double, double> parse_complex(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) return {std::stod(text), 0.0};
    return {std::stod(text.substr(0, colon)),
            std::stod(text.substr(colon + 1))};
  } catch (const std::exception&) {
    die("cannot parse complex value '" + text + "' (want re or re:im)");
  }
}

// Series inputs: "z<N>" monomial, "@path.csv" coefficient file, or a comma
// list of coefficients "1,0,0.5" with complex entries as "re:im".
SeriesPtr parse_series(const std::string& text, const std::string& flag) {
  hk_series* s = nullptr;
  if (text.size() >= 2 && text[0] == 'z' &&
      std::isdigit(static_cast<unsigned char>(text[1]))) {
    bool digits = true;
    for (std::size_t i = 1; i < text.size(); ++i) {
      digits = digits && std::isdigit(static_cast<unsigned char>(text[i]));
    }
    if (digits) {
      require_ok(
          hk_series_monomial(std::stoul(text.substr(1)), 1.0, 0.0, &s), flag);
      return SeriesPtr(s);
    }
  }
  if (!text.empty() && text[0] == '@') {
    require_ok(hk_series_read_csv(text.c_str() + 1, &s), flag);
    return SeriesPtr(s);
  }
  std::vector<double> re, im;
  std::string cur;
  const auto flush = [&] {
    if (cur.empty()) die(flag + ": empty coefficient in '" + text + "'");
    const auto [r, i] = parse_complex(cur);
    re.push_back(r);
    im.push_back(i);
    cur.clear();
  };
  for (const char c : text) {
    if (c == ',') {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  flush();
  require_ok(hk_series_create(re.data(), im.data(), re.size(), &s), flag);
  return SeriesPtr(s);
}

WeightPtr parse_weight_arg(const std::string& descriptor,
                           const std::string& flag) {
  hk_weight* w = nullptr;
  require_ok(hk_weight_parse(descriptor.c_str(), &w), flag);
  return WeightPtr(w);
}

// "@name" resolves [measure name] in --config; anything else is an inline
// block of ';'-separated statements.
MeasurePtr parse_measure_arg(const std::string& text,
                             const std::string& config) {
  hk_measure* m = nullptr;
  if (!text.empty() && text[0] == '@') {
    if (config.empty())
      die("--measure @" + text.substr(1) + " needs --config");
    require_ok(
        hk_measure_from_config(config.c_str(), text.c_str() + 1, &m),
        "--measure");
  } else {
    require_ok(hk_measure_parse(text.c_str(), nullptr, &m), "--measure");
  }
  return MeasurePtr(m);
}

void print_value(double v) { std::printf("%.12g\n", v); }

void print_complex(double re, double im) {
  if (im == 0.0) {
    std::printf("%.12g\n", re);
  } else {
    std::printf("%.12g %+.12gi\n", re, im);
  }
}

void provenance(const std::string& detail) {
  std::printf("# tool=%s %s\n", hk_version(), detail.c_str());
}

void print_series(const hk_series* s, const std::string& out_path) {
  if (!out_path.empty()) {
    require_ok(hk_series_write_csv(out_path.c_str(), s), "--out");
    std::printf("wrote %s\n", out_path.c_str());
    return;
  }
  size_t n = 0;
  hk_series_size(s, &n);
  const size_t head = n < 8 ? n : 8;
  for (size_t k = 0; k < head; ++k) {
    double re = 0.0, im = 0.0;
    hk_series_coeff(s, k, &re, &im);
    std::printf("[%zu] %.12g %+.12gi\n", k, re, im);
  }
  if (head < n) std::printf("... (%zu coefficients; --out FILE for all)\n", n);
}

struct ComputeArgs {
  std::string weight = "const";
  std::string omega = "const";
  std::string nu = "const";
  std::string f, g, measure, config, out;
  std::string a = "0";
  double rho = 0.5, x = 1.0, p = 2.0, q = 2.0;
  double alpha = 1.0, t = 1.0, beta = 1.0, r = 1.0;
  std::size_t n = 0;
  std::size_t trunc = 64;
  std::uint64_t seed = 20260825ull;
  bool raw = false;
};

int run_compute(const std::string& op, const ComputeArgs& args) {
  const auto weight = [&] { return parse_weight_arg(args.weight, "--weight"); };
  const auto omega = [&] { return parse_weight_arg(args.omega, "--omega"); };
  const auto nu = [&] { return parse_weight_arg(args.nu, "--nu"); };
  const auto fser = [&] {
    if (args.f.empty()) die("compute " + op + " needs --f");
    return parse_series(args.f, "--f");
  };
  const auto gser = [&] {
    if (args.g.empty()) die("compute " + op + " needs --g");
    return parse_series(args.g, "--g");
  };
  const auto meas = [&] {
    if (args.measure.empty()) die("compute " + op + " needs --measure");
    return parse_measure_arg(args.measure, args.config);
  };

  if (op == "profile") {
    const auto w = weight();
    double v = 0.0;
    require_ok(hk_weight_profile(w.get(), args.rho, &v), op);
    print_value(v);
    provenance("op=profile weight=" + args.weight +
               " rho=" + std::to_string(args.rho));
  } else if (op == "tail") {
    const auto w = weight();
    double v = 0.0;
    require_ok(hk_weight_tail(w.get(), args.rho, &v), op);
    print_value(v);
    provenance("op=tail weight=" + args.weight +
               " rho=" + std::to_string(args.rho) + " (closed form or 1e-10)");
  } else if (op == "moment") {
    const auto w = weight();
    double v = 0.0;
    require_ok(hk_weight_moment(w.get(), args.x, &v), op);
    print_value(v);
    provenance("op=moment weight=" + args.weight +
               " x=" + std::to_string(args.x) + " (closed form or 1e-12)");
  } else if (op == "sigma") {
    const auto w = weight();
    double v = 0.0;
    require_ok(hk_weight_sigma(w.get(), args.n, &v), op);
    print_value(v);
    provenance("op=sigma weight=" + args.weight + " n=" + std::to_string(args.n));
  } else if (op == "doubling") {
    const auto w = weight();
    int up = 0, low = 0;
    double c = 0.0, k = 0.0, kc = 0.0;
    require_ok(hk_weight_upper_doubling(w.get(), &up, &c), op);
    require_ok(hk_weight_lower_doubling(w.get(), &low, &k, &kc), op);
    std::printf("upper=%d C=%.12g lower=%d K=%.12g C=%.12g\n", up, c, low, k,
                kc);
    provenance("op=doubling weight=" + args.weight + " grid=1-2^{-k/4}");
  } else if (op == "growth") {
    const auto w = weight();
    double v = 0.0;
    require_ok(hk_weight_growth_exponent(w.get(), &v), op);
    print_value(v);
    provenance("op=growth weight=" + args.weight + " ladder=0.25..16");
  } else if (op == "evaluate") {
    const auto f = fser();
    const auto [are, aim] = parse_complex(args.a);
    double re = 0.0, im = 0.0;
    require_ok(hk_series_evaluate(f.get(), are, aim, &re, &im), op);
    print_complex(re, im);
    provenance("op=evaluate a=" + args.a);
  } else if (op == "kernel") {
    const auto w = weight();
    const auto [are, aim] = parse_complex(args.a);
    hk_series* s = nullptr;
    require_ok(hk_kernel(w.get(), are, aim, args.trunc, &s), op);
    SeriesPtr sp(s);
    print_series(s, args.out);
    provenance("op=kernel weight=" + args.weight + " a=" + args.a +
               " trunc=" + std::to_string(args.trunc));
  } else if (op == "project") {
    const auto w = weight();
    const auto m = meas();
    hk_series* s = nullptr;
    require_ok(
        hk_project(w.get(), m.get(), args.raw ? 0 : 1, args.trunc, &s), op);
    SeriesPtr sp(s);
    print_series(s, args.out);
    provenance(std::string("op=project conjugated=") +
               (args.raw ? "no" : "yes") + " weight=" + args.weight +
               " trunc=" + std::to_string(args.trunc));
  } else if (op == "bergman") {
    const auto f = fser();
    const auto w = weight();
    double v = 0.0;
    require_ok(hk_bergman_norm(f.get(), w.get(), args.p, &v), op);
    print_value(v);
    provenance("op=bergman weight=" + args.weight +
               " p=" + std::to_string(args.p) + " quad=default");
  } else if (op == "inner") {
    const auto f = fser();
    const auto g = gser();
    const auto w = weight();
    double re = 0.0, im = 0.0;
    require_ok(hk_inner_product(f.get(), g.get(), w.get(), &re, &im), op);
    print_complex(re, im);
    provenance("op=inner weight=" + args.weight + " quad=default");
  } else if (op == "bloch") {
    const auto f = fser();
    double v = 0.0, ar = 0.0, ai = 0.0;
    require_ok(hk_bloch_norm(f.get(), &v, &ar, &ai), op);
    print_value(v);
    provenance("op=bloch at=" + std::to_string(ar) + ":" + std::to_string(ai) +
               " grid=default");
  } else if (op == "garsia") {
    const auto f = fser();
    double v = 0.0;
    require_ok(hk_garsia_bmo(f.get(), &v), op);
    print_value(v);
    provenance("op=garsia grid=default");
  } else if (op == "bmoa") {
    const auto f = fser();
    const auto w = weight();
    double v = 0.0;
    require_ok(hk_bmoa_infty_norm(f.get(), w.get(), &v), op);
    print_value(v);
    provenance("op=bmoa weight=" + args.weight + " grid=default");
  } else if (op == "dbmoa") {
    const auto f = fser();
    const auto w = weight();
    double v = 0.0;
    require_ok(hk_d_omega_bmoa_norm(f.get(), w.get(), &v), op);
    print_value(v);
    provenance("op=dbmoa weight=" + args.weight + " grid=default");
  } else if (op == "pairing") {
    const auto f = fser();
    const auto g = gser();
    const auto w = weight();
    double sr = 0.0, si = 0.0, qr = 0.0, qi = 0.0;
    require_ok(
        hk_pairing(f.get(), g.get(), w.get(), args.rho, &sr, &si, &qr, &qi),
        op);
    std::printf("sum %.12g %+.12gi\nquadrature %.12g %+.12gi\n", sr, si, qr,
                qi);
    provenance("op=pairing weight=" + args.weight +
               " rho=" + std::to_string(args.rho));
  } else if (op == "fracbloch") {
    const auto f = fser();
    const auto ow = omega();
    const auto nw = nu();
    double v = 0.0;
    require_ok(hk_frac_bloch_sup(f.get(), ow.get(), nw.get(), &v), op);
    print_value(v);
    provenance("op=fracbloch omega=" + args.omega + " nu=" + args.nu);
  } else if (op == "bfrac") {
    const auto ow = omega();
    const auto nw = nu();
    int holds = 0;
    double sup = 0.0, last = 0.0;
    require_ok(hk_bfrac_condition(ow.get(), nw.get(), &holds, &sup, &last),
               op);
    std::printf("holds=%d sup_ratio=%.12g last_decade_ratio=%.12g\n", holds,
                sup, last);
    provenance("op=bfrac omega=" + args.omega + " nu=" + args.nu);
  } else if (op == "kernelnorms") {
    const auto ow = omega();
    const auto nw = nu();
    const std::vector<double> ladder = {0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99};
    std::vector<double> rows(7 * ladder.size(), 0.0);
    require_ok(hk_kernel_norm_comparison(ow.get(), nw.get(), args.p,
                                         ladder.data(), ladder.size(),
                                         rows.data()),
               op);
    std::printf("z,trunc,lhs_p,rhs,ratio,rhs2,ratio2\n");
    for (std::size_t i = 0; i < ladder.size(); ++i) {
      std::printf("%.12g,%d,%.12g,%.12g,%.12g,%.12g,%.12g\n", rows[7 * i],
                  static_cast<int>(rows[7 * i + 1]), rows[7 * i + 2],
                  rows[7 * i + 3], rows[7 * i + 4], rows[7 * i + 5],
                  rows[7 * i + 6]);
    }
    provenance("op=kernelnorms omega=" + args.omega + " nu=" + args.nu +
               " p=" + std::to_string(args.p));
  } else if (op == "fracr" || op == "dupper" || op == "dlower") {
    const auto f = fser();
    hk_series* s = nullptr;
    if (op == "fracr") {
      const auto ow = omega();
      const auto nw = nu();
      require_ok(hk_frac_r(ow.get(), nw.get(), f.get(), &s), op);
    } else {
      const auto w = weight();
      require_ok(op == "dupper" ? hk_d_upper(w.get(), f.get(), &s)
                                : hk_d_lower(w.get(), f.get(), &s),
                 op);
    }
    SeriesPtr sp(s);
    print_series(s, args.out);
    provenance("op=" + op + " (coefficient-exact)");
  } else if (op == "formeval") {
    const auto m = meas();
    const auto f = fser();
    const auto g = gser();
    double re = 0.0, im = 0.0;
    require_ok(hk_form_eval(m.get(), f.get(), g.get(), &re, &im), op);
    print_complex(re, im);
    provenance("op=formeval (moment-exact)");
  } else if (op == "apply") {
    const auto m = meas();
    const auto w = weight();
    const auto f = fser();
    hk_series* s = nullptr;
    require_ok(hk_hankel_apply(m.get(), w.get(), f.get(), args.trunc, &s), op);
    SeriesPtr sp(s);
    print_series(s, args.out);
    provenance("op=apply weight=" + args.weight +
               " trunc=" + std::to_string(args.trunc));
  } else if (op == "residual") {
    const auto f = fser();
    const auto m = meas();
    const auto w = weight();
    double v = 0.0;
    require_ok(hk_residual(f.get(), m.get(), w.get(), args.rho, &v), op);
    print_value(v);
    provenance("op=residual weight=" + args.weight +
               " rho=" + std::to_string(args.rho) + " quad=default");
  } else if (op == "form22") {
    const auto m = meas();
    const auto w = weight();
    double v = 0.0;
    require_ok(hk_form_norm_22(m.get(), w.get(), args.trunc, &v), op);
    print_value(v);
    provenance("op=form22 weight=" + args.weight +
               " trunc=" + std::to_string(args.trunc) +
               " (power iteration, rayleigh tol 1e-8)");
  } else if (op == "formpq") {
    const auto m = meas();
    const auto w = weight();
    double v = 0.0;
    require_ok(hk_form_norm_pq(m.get(), w.get(), args.p, args.q, args.trunc,
                               args.seed, &v),
               op);
    print_value(v);
    provenance("op=formpq p=" + std::to_string(args.p) +
               " q=" + std::to_string(args.q) +
               " trunc=" + std::to_string(args.trunc) +
               " seed=" + std::to_string(args.seed) +
               " (ascent lower bound, 8 restarts x 200 steps)");
  } else if (op == "dualnorm") {
    const auto m = meas();
    const auto w = weight();
    double v = 0.0;
    require_ok(
        hk_dual_norm(m.get(), w.get(), args.p, args.q, args.trunc, &v), op);
    print_value(v);
    provenance("op=dualnorm p=" + std::to_string(args.p) +
               " q=" + std::to_string(args.q) +
               " trunc=" + std::to_string(args.trunc));
  } else if (op == "opnorm") {
    const auto m = meas();
    const auto w = weight();
    double v = 0.0;
    require_ok(hk_operator_norm_pq(m.get(), w.get(), args.p, args.q,
                                   args.trunc, args.seed, &v),
               op);
    print_value(v);
    provenance("op=opnorm p=" + std::to_string(args.p) +
               " q=" + std::to_string(args.q) +
               " trunc=" + std::to_string(args.trunc) +
               " seed=" + std::to_string(args.seed) + " (ascent lower bound)");
  } else if (op == "detector") {
    const auto m = meas();
    const auto w = weight();
    double v = 0.0, ar = 0.0, ai = 0.0;
    int div = 0;
    require_ok(hk_hankel_measure_detector(m.get(), w.get(), args.p, args.beta,
                                          &v, &ar, &ai, &div),
               op);
    std::printf("value=%.12g at=%.12g:%.12g divergent=%d\n", v, ar, ai, div);
    provenance("op=detector p=" + std::to_string(args.p) +
               " beta=" + std::to_string(args.beta) + " grid=default");
  } else if (op == "criterion") {
    const auto m = meas();
    double v = 0.0, ar = 0.0, ai = 0.0;
    int div = 0;
    require_ok(hk_standard_criterion(m.get(), args.alpha, args.t, &v, &ar,
                                     &ai, &div),
               op);
    std::printf("value=%.12g at=%.12g:%.12g divergent=%d\n", v, ar, ai, div);
    provenance("op=criterion alpha=" + std::to_string(args.alpha) +
               " t=" + std::to_string(args.t) + " grid=default");
  } else if (op == "factor") {
    const auto big_f = fser();
    hk_series *fs = nullptr, *gs = nullptr;
    require_ok(hk_factor_zero_free(big_f.get(), args.r, args.p, args.q,
                                   args.trunc, &fs, &gs),
               op);
    SeriesPtr fp(fs), gp(gs);
    std::printf("f:\n");
    print_series(fs, args.out.empty() ? "" : args.out + ".f.csv");
    std::printf("g:\n");
    print_series(gs, args.out.empty() ? "" : args.out + ".g.csv");
    provenance("op=factor r=" + std::to_string(args.r) +
               " p=" + std::to_string(args.p) + " q=" + std::to_string(args.q) +
               " trunc=" + std::to_string(args.trunc));
  } else {
    std::cerr << "unknown op '" << op << "'\nusage: hankel compute <op> ...\n"
              << "ops: profile tail moment sigma doubling growth evaluate\n"
              << "     kernel project bergman inner bloch garsia bmoa dbmoa\n"
              << "     pairing fracbloch bfrac kernelnorms fracr dupper\n"
              << "     dlower formeval apply residual form22 formpq dualnorm\n"
              << "     opnorm detector criterion factor\n";
    return kExitError;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hankel: Hankel forms, operators, and measures on weighted "
               "Bergman spaces"};
  app.require_subcommand(1);

  // verify ------------------------------------------------------------------
  std::string suite, config, out_dir, trunc;
  double popt = 0.0, qopt = 0.0;
  std::uint64_t seed = 0;
  bool seed_set = false;
  CLI::App* verify = app.add_subcommand(
      "verify", "run a verification suite and print its JSON verdict");
  verify->add_option("suite", suite,
                     "identities | duality | kernel-norms | theorem1 | "
                     "theorem2 | hankel-measure | standard-criterion")
      ->required();
  verify->add_option("--config", config, "scenario config file");
  verify->add_option("--out", out_dir, "artifact directory (CSV + JSON)");
  verify->add_option("--trunc", trunc, "truncation ladder, e.g. 16,32,64");
  verify->add_option("--p", popt, "first exponent");
  verify->add_option("--q", qopt, "second exponent");
  verify->add_option("--seed", seed, "ascent restart seed")
      ->each([&](const std::string&) { seed_set = true; });

  // compute -----------------------------------------------------------------
  std::string op;
  ComputeArgs args;
  CLI::App* compute =
      app.add_subcommand("compute", "run one operation and print the value");
  compute->add_option("op", op, "operation name (see 'compute help')")
      ->required();
  compute->add_option("--weight", args.weight, "weight descriptor");
  compute->add_option("--omega", args.omega, "first weight descriptor");
  compute->add_option("--nu", args.nu, "second weight descriptor");
  compute->add_option("--f", args.f, "series: z<N>, @file.csv, or c0,c1,...");
  compute->add_option("--g", args.g, "second series");
  compute->add_option("--measure", args.measure,
                      "inline 'atom re im re im; ...' or @section with "
                      "--config");
  compute->add_option("--config", args.config, "config file for @references");
  compute->add_option("--out", args.out, "write series output to CSV");
  compute->add_option("--a", args.a, "point, re or re:im");
  compute->add_option("--rho", args.rho, "radial parameter");
  compute->add_option("--x", args.x, "moment exponent");
  compute->add_option("--n", args.n, "coefficient index");
  compute->add_option("--p", args.p, "exponent p");
  compute->add_option("--q", args.q, "exponent q");
  compute->add_option("--alpha", args.alpha, "standard-weight parameter");
  compute->add_option("--t", args.t, "criterion parameter t > 0");
  compute->add_option("--beta", args.beta, "detector parameter beta");
  compute->add_option("--r", args.r, "factorization exponent r");
  compute->add_option("--trunc", args.trunc, "truncation degree");
  compute->add_option("--seed", args.seed, "ascent restart seed");
  compute->add_flag("--raw", args.raw,
                    "project the measure itself, not its conjugate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitError;
  }

  if (verify->parsed()) {
    hk_suite_options opt = {};
    opt.config_path = config.empty() ? nullptr : config.c_str();
    opt.out_dir = out_dir.empty() ? nullptr : out_dir.c_str();
    opt.trunc = trunc.empty() ? nullptr : trunc.c_str();
    opt.p = popt;
    opt.q = qopt;
    opt.seed = seed;
    opt.has_seed = seed_set ? 1 : 0;
    int pass = 0;
    char* verdict = nullptr;
    const hk_status st = hk_run_suite(suite.c_str(), &opt, &pass, &verdict);
    if (st != HK_OK) die(std::string("verify ") + suite + ": " + hk_last_error());
    std::fputs(verdict, stdout);
    hk_string_free(verdict);
    return pass ? 0 : kExitFail;
  }
  return run_compute(op, args);
}
