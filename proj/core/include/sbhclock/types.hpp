// Copyright 2026 The sbhclock Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SBHCLOCK_TYPES_HPP_
#define SBHCLOCK_TYPES_HPP_

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace sbhclock {

using Complex = std::complex<double>;

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter violates a documented precondition (wrong sign, wrong range,
/// inconsistent sizes).  Thrown before any computation starts.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A point lies outside the chart the operation is defined on (unit disk,
/// upper half plane, exterior region).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A basis cutoff is too small for the requested tolerance.  Carries the
/// smallest cutoff that would satisfy it.
class TruncationError : public Error {
 public:
  TruncationError(const std::string& what, int required_cutoff)
      : Error(what), required_cutoff_(required_cutoff) {}
  int required_cutoff() const { return required_cutoff_; }

 private:
  int required_cutoff_;
};

/// An iterative scheme failed to converge or produced a non-finite value.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// The requested weight parameter has no normalizable resolution measure.
class UnsupportedMeasureError : public Error {
 public:
  using Error::Error;
};

/// Point of the open unit disk.  The invariant |xi| < 1 is checked once at
/// construction; everything downstream may rely on it.
class DiskPoint {
 public:
  DiskPoint() : xi_(0.0, 0.0) {}
  explicit DiskPoint(Complex xi) : xi_(xi) {
    if (!(std::abs(xi) < 1.0)) {
      throw DomainError("DiskPoint: |xi| must be < 1, got |xi| = " +
                        std::to_string(std::abs(xi)));
    }
  }
  DiskPoint(double re, double im) : DiskPoint(Complex(re, im)) {}

  Complex value() const { return xi_; }
  double abs2() const { return std::norm(xi_); }

 private:
  Complex xi_;
};

/// Point of the upper half plane in clock coordinates (v, w), w > 0.
class HalfPlanePoint {
 public:
  HalfPlanePoint(double v, double w) : v_(v), w_(w) {
    if (!(w > 0.0) || !std::isfinite(v) || !std::isfinite(w)) {
      throw DomainError("HalfPlanePoint: requires finite v and w > 0, got w = " +
                        std::to_string(w));
    }
  }

  double v() const { return v_; }
  double w() const { return w_; }

 private:
  double v_;
  double w_;
};

}  // namespace sbhclock

#endif  // SBHCLOCK_TYPES_HPP_
