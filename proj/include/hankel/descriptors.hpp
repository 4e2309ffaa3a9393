// Copyright (c) 2026 the hankelkit authors
// SPDX-License-Identifier: Apache-2.0
//
// Plain-text forms of the toolkit's value types: weight descriptors, measure
// blocks, series CSV files, and the sectioned key = value config format used
// by the command-line runner.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hankel/measures.hpp"
#include "hankel/series.hpp"
#include "hankel/weights.hpp"

namespace hankel {

// ---------------------------------------------------------------------------
// Weight descriptors.
//
// Long form (what RadialWeight::describe() emits):
//   kind=const
//   kind=standard alpha=1
//   kind=wderived x=2 base=(kind=const)
//   kind=omegaplus base=(kind=standard alpha=0.5)
//   kind=custom samples=<csv-path>           (two columns: rho, value)
// Shorthand (CLI-friendly):
//   const | standard:<alpha> | wderived:<x>:<base> | omegaplus:<base>
//   | samples:<csv-path>
// ---------------------------------------------------------------------------
RadialWeight parse_weight(std::string_view text);
std::string serialize_weight(const RadialWeight& w);

// ---------------------------------------------------------------------------
// Series CSV: header "n,re,im", one row per coefficient, %.17g formatting so
// a write/read round trip is bit-exact.
// ---------------------------------------------------------------------------
void write_series_csv(std::ostream& os, const TaylorSeries& f);
void write_series_csv_file(const std::string& path, const TaylorSeries& f);
TaylorSeries read_series_csv(std::istream& is, const std::string& name);
TaylorSeries read_series_csv_file(const std::string& path);

// ---------------------------------------------------------------------------
// Measure blocks:
//   atom re(z) im(z) re(c) im(c)
//   density weight=<descriptor> coeffs=<csv-path>
// Relative csv paths resolve against base_dir ("" = current directory).
// serialize_measure_block writes the density coefficients to coeffs_path.
// ---------------------------------------------------------------------------
ComplexMeasure parse_measure_block(const std::vector<std::string>& lines,
                                   const std::string& base_dir);
std::vector<std::string> serialize_measure_block(const ComplexMeasure& mu,
                                                 const std::string& coeffs_path);

// ---------------------------------------------------------------------------
// Config files: INI-like sections of key = value lines.
//
//   # comment
//   [suite]
//   trunc = 16,32,64
//   [weight omega]
//   kind = standard
//   alpha = 1
//   [measure m1]
//   atom = 0.5 0 1 0
//   density = weight=omega coeffs=h.csv
//
// Keys may repeat within a section (used for atom lines).  Weight values may
// reference a named [weight <name>] section or hold an inline descriptor.
// All diagnostics carry <source>:<line>.
// ---------------------------------------------------------------------------
struct ConfigSection {
  std::string name;     // e.g. "suite", "weight omega", "measure m1"
  int line = 0;         // 1-based line of the [header]
  std::vector<std::pair<std::string, std::string>> entries;
  std::vector<int> entry_lines;

  // First value for key, if present.
  std::optional<std::string> find(const std::string& key) const;
  // Required lookups throw ParseError naming the section and key.
  std::string require(const std::string& key) const;
  double require_double(const std::string& key) const;
  // All values for a repeated key, in file order.
  std::vector<std::string> all(const std::string& key) const;
};

struct Config {
  std::string source;  // file name used in diagnostics
  std::string text;    // raw bytes, hashed into artifacts
  std::vector<ConfigSection> sections;

  const ConfigSection* find_section(const std::string& name) const;
  std::vector<const ConfigSection*> sections_with_prefix(
      const std::string& prefix) const;

  // Resolve a weight by section reference (`omega` -> [weight omega]) or by
  // inline descriptor text.
  RadialWeight weight(const std::string& name_or_descriptor) const;
  // Build the measure described by a [measure ...] section; csv paths
  // resolve against base_dir.
  ComplexMeasure measure(const ConfigSection& section,
                         const std::string& base_dir) const;
};

Config parse_config(std::istream& is, const std::string& name);
Config parse_config_file(const std::string& path);

// "16,32,64" -> {16, 32, 64}; rejects empty and non-numeric items.
std::vector<std::size_t> parse_size_list(std::string_view text);

// FNV-1a 64-bit hash; artifacts embed fnv1a64(config.text).
std::uint64_t fnv1a64(std::string_view bytes);

// %.17g formatting used across all artifacts.
std::string format_g17(double v);

}  // namespace hankel
