// Copyright (c) 2026 the hankelkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace hankel {

// A quadrature or iteration failed to reach the requested tolerance; the
// achieved bound is carried so callers can decide whether to accept anyway.
class ToleranceError : public std::runtime_error {
 public:
  ToleranceError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}
  double achieved() const { return achieved_; }

 private:
  double achieved_;
};

// A weight failed a classification step (e.g. no exponent on the ladder
// certifies almost-increasing growth, or a doubling prerequisite is missing).
class ClassificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input is structurally valid but outside what the algorithm supports
// (e.g. a factorization target that vanishes on the closed disk).
class UnsupportedInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An iterative solver ran out of iterations; the last two iterates are kept
// so the caller can inspect the stall.
class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, double last, double second_last)
      : std::runtime_error(what), last_(last), second_last_(second_last) {}
  double last() const { return last_; }
  double second_last() const { return second_last_; }

 private:
  double last_;
  double second_last_;
};

// Malformed textual input (descriptors, config files, CSV payloads).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hankel
