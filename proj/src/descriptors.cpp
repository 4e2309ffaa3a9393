// Copyright (c) 2026 the hankelkit authors
// SPDX-License-Identifier: Apache-2.0
#include "hankel/descriptors.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hankel/errors.hpp"

namespace hankel {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_double(std::string_view token, const std::string& where) {
  const std::string buf(trim(token));
  if (buf.empty()) throw ParseError(where + ": expected a number, got nothing");
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size()) {
    throw ParseError(where + ": not a number: '" + buf + "'");
  }
  return v;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Split a long-form descriptor into key=value tokens; a value opening with
// '(' runs to its balancing ')', so nested base=(...) descriptors survive.
std::vector<std::pair<std::string, std::string>> descriptor_tokens(
    std::string_view text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    if (i >= text.size()) break;
    const std::size_t eq = text.find('=', i);
    if (eq == std::string_view::npos) {
      throw ParseError("weight descriptor: expected key=value, got '" +
                       std::string(text.substr(i)) + "'");
    }
    const std::string key(trim(text.substr(i, eq - i)));
    std::size_t j = eq + 1;
    std::string value;
    if (j < text.size() && text[j] == '(') {
      int depth = 0;
      const std::size_t open = j;
      for (; j < text.size(); ++j) {
        if (text[j] == '(') ++depth;
        if (text[j] == ')' && --depth == 0) {
          ++j;
          break;
        }
      }
      if (depth != 0) {
        throw ParseError("weight descriptor: unbalanced parentheses in '" +
                         std::string(text) + "'");
      }
      value = std::string(text.substr(open + 1, j - open - 2));
    } else {
      const std::size_t end = text.find(' ', j);
      value = std::string(
          text.substr(j, end == std::string_view::npos ? end : end - j));
      j = end == std::string_view::npos ? text.size() : end;
    }
    out.emplace_back(key, value);
    i = j;
  }
  return out;
}

RadialWeight weight_from_samples_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ParseError("cannot open samples csv: " + path);
  std::vector<std::pair<double, double>> samples;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::string row(t);
    for (auto& c : row) {
      if (c == ',') c = ' ';
    }
    const std::vector<std::string> cols = split_ws(row);
    if (lineno == 1 && !cols.empty() &&
        !(std::isdigit(static_cast<unsigned char>(cols[0][0])) ||
          cols[0][0] == '-' || cols[0][0] == '+' || cols[0][0] == '.')) {
      continue;  // header row
    }
    if (cols.size() != 2) {
      throw ParseError(path + ":" + std::to_string(lineno) +
                       ": expected two columns (rho, value)");
    }
    const std::string where = path + ":" + std::to_string(lineno);
    samples.emplace_back(parse_double(cols[0], where),
                         parse_double(cols[1], where));
  }
  if (samples.empty()) {
    throw ParseError(path + ": no samples");
  }
  return RadialWeight::from_samples(std::move(samples), path);
}

RadialWeight parse_weight_impl(std::string_view text, int depth) {
  if (depth > 16) {
    throw ParseError("weight descriptor nested too deeply: '" +
                     std::string(text) + "'");
  }
  const std::string_view t = trim(text);
  if (t.empty()) throw ParseError("empty weight descriptor");

  if (t.substr(0, 5) != "kind=") {
    // Shorthand forms.
    const std::size_t colon = t.find(':');
    const std::string head(t.substr(0, colon));
    const std::string_view rest =
        colon == std::string_view::npos ? std::string_view{} : t.substr(colon + 1);
    if (head == "const" || head == "constant") {
      if (!rest.empty()) {
        throw ParseError("weight shorthand 'const' takes no parameter");
      }
      return RadialWeight::constant();
    }
    if (head == "standard") {
      return RadialWeight::standard(
          parse_double(rest, "weight shorthand standard:<alpha>"));
    }
    if (head == "wderived") {
      const std::size_t c2 = rest.find(':');
      if (c2 == std::string_view::npos) {
        throw ParseError("weight shorthand wderived:<x>:<base> is incomplete: '" +
                         std::string(t) + "'");
      }
      const double x =
          parse_double(rest.substr(0, c2), "weight shorthand wderived:<x>");
      return RadialWeight::w_derived(
          x, parse_weight_impl(rest.substr(c2 + 1), depth + 1));
    }
    if (head == "omegaplus") {
      return RadialWeight::omega_plus(parse_weight_impl(rest, depth + 1));
    }
    if (head == "samples") {
      return weight_from_samples_csv(std::string(rest));
    }
    throw ParseError("unknown weight descriptor: '" + std::string(t) + "'");
  }

  // Long form.
  const auto tokens = descriptor_tokens(t);
  std::string kind, alpha, x, base, samples, label;
  for (const auto& [k, v] : tokens) {
    if (k == "kind") {
      kind = v;
    } else if (k == "alpha") {
      alpha = v;
    } else if (k == "x") {
      x = v;
    } else if (k == "base") {
      base = v;
    } else if (k == "samples") {
      samples = v;
    } else if (k == "label") {
      label = v;
    } else {
      throw ParseError("unknown weight descriptor key '" + k + "' in '" +
                       std::string(t) + "'");
    }
  }
  if (kind == "const" || kind == "constant") return RadialWeight::constant();
  if (kind == "standard") {
    if (alpha.empty()) {
      throw ParseError("kind=standard needs alpha=<value>");
    }
    return RadialWeight::standard(parse_double(alpha, "kind=standard alpha"));
  }
  if (kind == "wderived") {
    if (x.empty() || base.empty()) {
      throw ParseError("kind=wderived needs x=<value> and base=(...)");
    }
    return RadialWeight::w_derived(parse_double(x, "kind=wderived x"),
                                   parse_weight_impl(base, depth + 1));
  }
  if (kind == "omegaplus") {
    if (base.empty()) throw ParseError("kind=omegaplus needs base=(...)");
    return RadialWeight::omega_plus(parse_weight_impl(base, depth + 1));
  }
  if (kind == "custom") {
    if (samples.empty() || samples == "<inline>") {
      throw ParseError(
          "kind=custom is only parseable with samples=<csv-path>; a "
          "function-backed custom weight cannot be reconstructed" +
          (label.empty() ? std::string() : " (label=" + label + ")"));
    }
    return weight_from_samples_csv(samples);
  }
  throw ParseError("unknown weight kind '" + kind + "' in '" + std::string(t) +
                   "'");
}

std::string resolve_path(const std::string& path, const std::string& base_dir) {
  if (base_dir.empty() || std::filesystem::path(path).is_absolute()) {
    return path;
  }
  return (std::filesystem::path(base_dir) / path).string();
}

// Parses "weight=<descriptor> coeffs=<csv-path>".  The descriptor may contain
// spaces, so the value runs to the " coeffs=" marker.
std::pair<std::string, std::string> split_density_args(std::string_view rest,
                                                       const std::string& where) {
  const std::string_view t = trim(rest);
  if (t.substr(0, 7) != "weight=") {
    throw ParseError(where + ": density line must start with weight=");
  }
  const std::size_t marker = t.find(" coeffs=");
  if (marker == std::string_view::npos) {
    throw ParseError(where + ": density line is missing coeffs=<csv-path>");
  }
  const std::string descriptor(trim(t.substr(7, marker - 7)));
  const std::string coeffs(trim(t.substr(marker + 8)));
  if (descriptor.empty()) throw ParseError(where + ": empty weight descriptor");
  if (coeffs.empty()) throw ParseError(where + ": empty coeffs path");
  return {descriptor, coeffs};
}

}  // namespace

RadialWeight parse_weight(std::string_view text) {
  return parse_weight_impl(text, 0);
}

std::string serialize_weight(const RadialWeight& w) { return w.describe(); }

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_series_csv(std::ostream& os, const TaylorSeries& f) {
  os << "n,re,im\n";
  for (std::size_t n = 0; n < f.size(); ++n) {
    const Complex c = f.at(n);
    os << n << ',' << format_g17(c.real()) << ',' << format_g17(c.imag())
       << '\n';
  }
}

void write_series_csv_file(const std::string& path, const TaylorSeries& f) {
  std::ofstream os(path);
  if (!os) throw ParseError("cannot open for writing: " + path);
  write_series_csv(os, f);
}

TaylorSeries read_series_csv(std::istream& is, const std::string& name) {
  std::vector<Complex> coeffs;
  std::vector<bool> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::string row(t);
    for (auto& c : row) {
      if (c == ',') c = ' ';
    }
    const std::vector<std::string> cols = split_ws(row);
    if (!cols.empty() && cols[0] == "n") continue;  // header
    const std::string where = name + ":" + std::to_string(lineno);
    if (cols.size() != 3) {
      throw ParseError(where + ": expected three columns (n, re, im)");
    }
    const double nd = parse_double(cols[0], where);
    if (nd < 0 || nd != std::floor(nd) || nd > 1e7) {
      throw ParseError(where + ": bad coefficient index '" + cols[0] + "'");
    }
    const std::size_t n = static_cast<std::size_t>(nd);
    if (n >= coeffs.size()) {
      coeffs.resize(n + 1, Complex{0.0, 0.0});
      seen.resize(n + 1, false);
    }
    if (seen[n]) {
      throw ParseError(where + ": duplicate coefficient index " + cols[0]);
    }
    seen[n] = true;
    coeffs[n] = Complex(parse_double(cols[1], where), parse_double(cols[2], where));
  }
  return TaylorSeries(std::move(coeffs));
}

TaylorSeries read_series_csv_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ParseError("cannot open series csv: " + path);
  return read_series_csv(is, path);
}

ComplexMeasure parse_measure_block(const std::vector<std::string>& lines,
                                   const std::string& base_dir) {
  ComplexMeasure mu;
  bool have_density = false;
  int lineno = 0;
  for (const auto& raw : lines) {
    ++lineno;
    const std::string_view t = trim(raw);
    if (t.empty() || t.front() == '#') continue;
    const std::string where = "measure block line " + std::to_string(lineno);
    if (t.substr(0, 5) == "atom ") {
      const std::vector<std::string> cols = split_ws(t.substr(5));
      if (cols.size() != 4) {
        throw ParseError(where + ": atom needs re(z) im(z) re(c) im(c)");
      }
      mu.add_atom(Complex(parse_double(cols[0], where), parse_double(cols[1], where)),
                  Complex(parse_double(cols[2], where), parse_double(cols[3], where)));
    } else if (t.substr(0, 8) == "density ") {
      if (have_density) {
        throw ParseError(where + ": at most one density line per measure");
      }
      have_density = true;
      const auto [descriptor, coeffs] = split_density_args(t.substr(8), where);
      mu.set_density(read_series_csv_file(resolve_path(coeffs, base_dir)),
                     parse_weight(descriptor));
    } else {
      throw ParseError(where + ": expected 'atom' or 'density', got '" +
                       std::string(t.substr(0, 16)) + "...'");
    }
  }
  return mu;
}

std::vector<std::string> serialize_measure_block(const ComplexMeasure& mu,
                                                 const std::string& coeffs_path) {
  std::vector<std::string> lines;
  for (const auto& atom : mu.atoms()) {
    lines.push_back("atom " + format_g17(atom.z.real()) + ' ' +
                    format_g17(atom.z.imag()) + ' ' + format_g17(atom.mass.real()) +
                    ' ' + format_g17(atom.mass.imag()));
  }
  if (mu.density()) {
    write_series_csv_file(coeffs_path, mu.density()->h);
    lines.push_back("density weight=" + mu.density()->base.describe() +
                    " coeffs=" + coeffs_path);
  }
  return lines;
}

std::optional<std::string> ConfigSection::find(const std::string& key) const {
  for (const auto& [k, v] : entries) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::string ConfigSection::require(const std::string& key) const {
  const auto v = find(key);
  if (!v) {
    throw ParseError("section [" + name + "] is missing key '" + key + "'");
  }
  return *v;
}

double ConfigSection::require_double(const std::string& key) const {
  return parse_double(require(key), "section [" + name + "] key '" + key + "'");
}

std::vector<std::string> ConfigSection::all(const std::string& key) const {
  std::vector<std::string> out;
  for (const auto& [k, v] : entries) {
    if (k == key) out.push_back(v);
  }
  return out;
}

const ConfigSection* Config::find_section(const std::string& name) const {
  for (const auto& s : sections) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

std::vector<const ConfigSection*> Config::sections_with_prefix(
    const std::string& prefix) const {
  std::vector<const ConfigSection*> out;
  for (const auto& s : sections) {
    if (s.name.substr(0, prefix.size()) == prefix) out.push_back(&s);
  }
  return out;
}

RadialWeight Config::weight(const std::string& name_or_descriptor) const {
  const std::string key(trim(name_or_descriptor));
  if (const ConfigSection* s = find_section("weight " + key)) {
    const std::string kind = s->require("kind");
    if (kind == "const" || kind == "constant") return RadialWeight::constant();
    if (kind == "standard") {
      return RadialWeight::standard(s->require_double("alpha"));
    }
    if (kind == "wderived") {
      return RadialWeight::w_derived(s->require_double("x"),
                                     weight(s->require("base")));
    }
    if (kind == "omegaplus") return RadialWeight::omega_plus(weight(s->require("base")));
    if (kind == "custom") {
      std::string dir;
      if (!source.empty()) {
        dir = std::filesystem::path(source).parent_path().string();
      }
      return weight_from_samples_csv(resolve_path(s->require("samples"), dir));
    }
    throw ParseError(source + ":" + std::to_string(s->line) +
                     ": unknown weight kind '" + kind + "'");
  }
  return parse_weight(key);
}

ComplexMeasure Config::measure(const ConfigSection& section,
                               const std::string& base_dir) const {
  ComplexMeasure mu;
  bool have_density = false;
  for (std::size_t i = 0; i < section.entries.size(); ++i) {
    const auto& [k, v] = section.entries[i];
    const std::string where =
        source + ":" + std::to_string(section.entry_lines[i]);
    if (k == "atom") {
      const std::vector<std::string> cols = split_ws(v);
      if (cols.size() != 4) {
        throw ParseError(where + ": atom needs re(z) im(z) re(c) im(c)");
      }
      mu.add_atom(Complex(parse_double(cols[0], where), parse_double(cols[1], where)),
                  Complex(parse_double(cols[2], where), parse_double(cols[3], where)));
    } else if (k == "density") {
      if (have_density) {
        throw ParseError(where + ": at most one density line per measure");
      }
      have_density = true;
      const auto [descriptor, coeffs] = split_density_args(v, where);
      // The descriptor may name a [weight <name>] section.
      const RadialWeight base = weight(descriptor);
      mu.set_density(read_series_csv_file(resolve_path(coeffs, base_dir)), base);
    } else {
      throw ParseError(where + ": unknown measure key '" + k + "'");
    }
  }
  return mu;
}

Config parse_config(std::istream& is, const std::string& name) {
  Config cfg;
  cfg.source = name;
  std::ostringstream raw;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    raw << line << '\n';
    const std::string_view t = trim(line);
    if (t.empty() || t.front() == '#' || t.front() == ';') continue;
    if (t.front() == '[') {
      if (t.back() != ']') {
        throw ParseError(name + ":" + std::to_string(lineno) +
                         ": unterminated section header '" + std::string(t) +
                         "'");
      }
      ConfigSection s;
      s.name = std::string(trim(t.substr(1, t.size() - 2)));
      s.line = lineno;
      if (s.name.empty()) {
        throw ParseError(name + ":" + std::to_string(lineno) +
                         ": empty section name");
      }
      cfg.sections.push_back(std::move(s));
      continue;
    }
    const std::size_t eq = t.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(name + ":" + std::to_string(lineno) +
                       ": expected 'key = value', got '" + std::string(t) + "'");
    }
    if (cfg.sections.empty()) {
      throw ParseError(name + ":" + std::to_string(lineno) +
                       ": key outside any [section]");
    }
    const std::string key(trim(t.substr(0, eq)));
    const std::string value(trim(t.substr(eq + 1)));
    if (key.empty()) {
      throw ParseError(name + ":" + std::to_string(lineno) + ": empty key");
    }
    cfg.sections.back().entries.emplace_back(key, value);
    cfg.sections.back().entry_lines.push_back(lineno);
  }
  cfg.text = raw.str();
  return cfg;
}

Config parse_config_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ParseError("cannot open config file: " + path);
  return parse_config(is, path);
}

std::vector<std::size_t> parse_size_list(std::string_view text) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  const std::string buf(text);
  while (start <= buf.size()) {
    std::size_t comma = buf.find(',', start);
    if (comma == std::string::npos) comma = buf.size();
    const std::string item(trim(std::string_view(buf).substr(start, comma - start)));
    if (item.empty()) {
      throw ParseError("size list has an empty item: '" + buf + "'");
    }
    char* end = nullptr;
    const unsigned long long v = std::strtoull(item.c_str(), &end, 10);
    if (end != item.c_str() + item.size() || v == 0) {
      throw ParseError("size list item is not a positive integer: '" + item +
                       "'");
    }
    out.push_back(static_cast<std::size_t>(v));
    if (comma == buf.size()) break;
    start = comma + 1;
  }
  return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (const char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace hankel
