#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace charvar {

using Complex = std::complex<double>;

enum class Errc {
  NonFinite,
  DegenerateLeadingCoefficient,
  NonConvergence,
  SingularMatrix,
  PreconditionViolated,
  InconsistentS0,
  TraceMismatch,
  ConstraintViolated,
  SmallS123,
  FactorizationFailure,
  TypeIIViolated,
  S44Mismatch,
  DegenerateCharacter,
  ExcludedParameter,
  InvalidArgument,
};

const char* errc_name(Errc code) noexcept;

/// Execution policy for the batch kernels. Serial is the reference
/// implementation; both produce identical results for the same seed.
enum class Exec { Serial, Parallel };

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline bool is_finite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline Complex require_finite(Complex z, const char* what) {
  if (!is_finite(z)) throw Error(Errc::NonFinite, what);
  return z;
}

/// A polynomial identity evaluated numerically, together with the magnitude
/// of the largest term that went into it. Terms are accumulated with `+=`
/// and `-=`; `normalized()` divides by max(1, largest term) so residuals are
/// comparable across widely varying parameter magnitudes.
class Residual {
 public:
  Residual() = default;
  Residual(Complex value, double scale) : value_(value), scale_(scale) {}

  Residual& operator+=(Complex term) {
    value_ += term;
    scale_ = std::max(scale_, std::abs(term));
    return *this;
  }
  Residual& operator-=(Complex term) {
    value_ -= term;
    scale_ = std::max(scale_, std::abs(term));
    return *this;
  }

  Complex value() const noexcept { return value_; }
  double scale() const noexcept { return scale_; }
  double magnitude() const noexcept { return std::abs(value_); }
  double normalized() const noexcept { return std::abs(value_) / std::max(1.0, scale_); }

 private:
  Complex value_{0.0, 0.0};
  double scale_ = 0.0;
};

/// Complex value carrying an upper bound on the summed magnitude of the
/// monomials it was built from. Writing a polynomial identity in Tracked
/// arithmetic yields both its value and a cancellation-aware scale.
struct Tracked {
  Complex v{0.0};
  double m = 0.0;

  Tracked() = default;
  Tracked(Complex value) : v(value), m(std::abs(value)) {}  // NOLINT(google-explicit-constructor)
  Tracked(double value) : v(value), m(std::abs(value)) {}   // NOLINT(google-explicit-constructor)
  Tracked(Complex value, double mag) : v(value), m(mag) {}

  friend Tracked operator+(const Tracked& a, const Tracked& b) { return {a.v + b.v, a.m + b.m}; }
  friend Tracked operator-(const Tracked& a, const Tracked& b) { return {a.v - b.v, a.m + b.m}; }
  friend Tracked operator*(const Tracked& a, const Tracked& b) { return {a.v * b.v, a.m * b.m}; }
  friend Tracked operator-(const Tracked& a) { return {-a.v, a.m}; }
  Tracked& operator+=(const Tracked& o) { return *this = *this + o; }
  Tracked& operator-=(const Tracked& o) { return *this = *this - o; }

  Residual residual() const { return Residual(v, m); }
};

}  // namespace charvar
