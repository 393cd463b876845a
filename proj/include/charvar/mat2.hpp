#pragma once

#include <span>

#include "charvar/core.hpp"

namespace charvar {

/// 2x2 complex matrix, row-major [[a, b], [c, d]].
struct Mat2 {
  Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

  static constexpr Mat2 identity() { return Mat2{1.0, 0.0, 0.0, 1.0}; }
  static constexpr Mat2 zero() { return Mat2{0.0, 0.0, 0.0, 0.0}; }
  static constexpr Mat2 scalar(Complex s) { return Mat2{s, 0.0, 0.0, s}; }

  Complex trace() const noexcept { return a + d; }
  Complex det() const noexcept { return a * d - b * c; }
  /// Largest entry magnitude.
  double norm() const noexcept;
  /// Adjugate; x + adj(x) = tr(x) e.
  Mat2 adjugate() const noexcept { return Mat2{d, -b, -c, a}; }

  Mat2& operator+=(const Mat2& o) noexcept;
  Mat2& operator-=(const Mat2& o) noexcept;
  Mat2& operator*=(Complex s) noexcept;

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 operator+(Mat2 x, const Mat2& y) noexcept;
Mat2 operator-(Mat2 x, const Mat2& y) noexcept;
Mat2 operator-(const Mat2& x) noexcept;
Mat2 operator*(const Mat2& x, const Mat2& y) noexcept;
Mat2 operator*(Complex s, Mat2 x) noexcept;

Mat2 mul(const Mat2& x, const Mat2& y) noexcept;
/// Throws SingularMatrix when |det| <= 1e-14.
Mat2 inverse(const Mat2& x);
inline Complex trace(const Mat2& x) noexcept { return x.trace(); }
inline Complex det(const Mat2& x) noexcept { return x.det(); }

/// max |x_ij - y_ij|
double distance(const Mat2& x, const Mat2& y) noexcept;

/// Traceless 2x2 matrix (an element of M_0).
class TracelessMat2 {
 public:
  static constexpr double kTraceTol = 1e-12;

  /// Throws InvalidArgument unless |tr m| <= 1e-12 max(1, |m|).
  explicit TracelessMat2(const Mat2& m);

  const Mat2& mat() const noexcept { return m_; }
  operator const Mat2&() const noexcept { return m_; }

 private:
  struct Unchecked {};
  TracelessMat2(const Mat2& m, Unchecked) : m_(m) {}
  friend TracelessMat2 traceless_part(const Mat2& x) noexcept;
  Mat2 m_;
};

/// x - (tr x / 2) e
TracelessMat2 traceless_part(const Mat2& x) noexcept;

/// Element of G(t) = { x in SL(2,C) : tr x = t }.
class GtElement {
 public:
  static constexpr double kDetTol = 1e-10;

  /// Validates |det - 1| <= 1e-10 max(1, |m|^2); t is taken from the trace.
  explicit GtElement(const Mat2& m);

  const Mat2& mat() const noexcept { return m_; }
  Complex t() const noexcept { return m_.trace(); }
  operator const Mat2&() const noexcept { return m_; }

 private:
  Mat2 m_;
};

/// x^2 - t x + e (Cayley-Hamilton); vanishes on G(t).
Mat2 ch_residual(const GtElement& x) noexcept;
/// xyx - (tr(xy) x + y - t e); vanishes for x, y in G(t).
Mat2 xyx_expand(const GtElement& x, const GtElement& y) noexcept;
/// uv + vu - tr(uv) e; vanishes for traceless u, v.
Mat2 anticommutator_residual(const TracelessMat2& u, const TracelessMat2& v) noexcept;
/// tr(uvw): trilinear, alternating, zero iff u, v, w are linearly dependent.
Complex triple_trace(const TracelessMat2& u, const TracelessMat2& v, const TracelessMat2& w) noexcept;

/// True when |offdiag| and |a - d| are <= 1e-12 |m|.
bool is_scalar(const Mat2& m) noexcept;

/// Brute-force reducibility test: enumerate eigenvectors of the first
/// non-scalar matrix and check each candidate for invariance under all of
/// them (angle threshold 1e-8). An all-scalar list is reducible.
bool has_common_eigenvector(std::span<const Mat2> ms);

/// Trace criterion for a pair in G(t): irreducible iff tr(xy) is not in
/// {2, t^2 - 2} (tolerance 1e-9 max(1, |tr(xy)|)).
bool is_irreducible_pair(const GtElement& x, const GtElement& y) noexcept;

enum class Lemma25Conclusion { Commuting, Equal, Inverse };

struct Lemma25Report {
  Lemma25Conclusion conclusion;
  int epsilon;               // +1 when s13 = s0, -1 when s13 = -s0
  double commutator;         // |x1 x3 - x3 x1| / scale
  double power_distance;     // |x3 - x1^eps| / scale, 0 when t = +-2
  bool holds;                // every asserted conclusion is within tolerance
};

/// Checks that an irreducible triple with s123 = 0 and s13 = eps s0 has
/// x1 x3 = x3 x1, and x3 = x1^eps when t is away from +-2.
/// Throws PreconditionViolated when the hypotheses fail numerically.
Lemma25Report lemma25_apply(const GtElement& x1, const GtElement& x2, const GtElement& x3);

const char* to_string(Lemma25Conclusion c) noexcept;

}  // namespace charvar
