#pragma once

#include <array>

#include "charvar/core.hpp"
#include "charvar/quadruple.hpp"

namespace charvar {

/// Trace coordinates of a character of the free group on x1..x4 restricted
/// to G(t)^4. Slot order: t; t12, t23, t34, t14; t13, t24; t123, t124, t134, t234.
struct TraceVector {
  Complex t, t12, t23, t34, t14, t13, t24, t123, t124, t134, t234;

  static constexpr std::array<const char*, 11> kNames{
      "t", "t12", "t23", "t34", "t14", "t13", "t24", "t123", "t124", "t134", "t234"};

  std::array<Complex, 11> as_array() const noexcept;
  static TraceVector from_array(const std::array<Complex, 11>& a) noexcept;

  /// t_ij for i != j in 1..4 (order irrelevant); t_ii = t^2 - 2.
  Complex pair(int i, int j) const;
  /// t_ijk for distinct i, j, k with i < j < k.
  Complex triple(int i, int j, int k) const;

  /// max_k |a_k - b_k|
  friend double max_deviation(const TraceVector& a, const TraceVector& b) noexcept;
  /// max_k |a_k|
  double max_abs() const noexcept;
};

/// Traces of products of traceless parts: s0 = t^2/2 - 2, s_ij, s_ijk.
struct SCoords {
  Complex s0, s12, s23, s34, s14, s13, s24, s123, s124, s134, s234;

  /// s_ij with s_ii = s0; symmetric.
  Complex s(int i, int j) const;
  /// s_ijk for distinct indices in any order (alternating in its arguments).
  Complex s3(int i, int j, int k) const;
  double max_abs() const noexcept;
};

/// Gram matrices of the traceless parts under (u, v) -> tr(uv).
struct GramData {
  using Sym3 = std::array<std::array<Complex, 3>, 3>;
  using Sym4 = std::array<std::array<Complex, 4>, 4>;
  Sym3 S123, S124, S134, S234;
  Sym4 Sdiamond;
};

SCoords s_from_t(const TraceVector& v) noexcept;
/// Inverse of s_from_t; throws InconsistentS0 unless s0 = t^2/2 - 2 within 1e-9.
TraceVector t_from_s(const SCoords& s, Complex t);

GramData gram(const SCoords& s) noexcept;
/// 3x3 Gram block for sorted index triple (i, j, k).
GramData::Sym3 gram3(const SCoords& s, int i, int j, int k) noexcept;

/// The index triples 123, 124, 134, 234 in that order.
inline constexpr std::array<std::array<int, 3>, 4> kTriples{{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}};

/// 2 s_I s_J + det(s_{i_a j_b}) for I, J over kTriples, row-major (16 values).
std::array<Residual, 16> typeI_residuals(const SCoords& s) noexcept;
/// s_i1 s234 - s_i2 s134 + s_i3 s124 - s_i4 s123, i = 1..4.
std::array<Residual, 4> typeII_residuals(const SCoords& s) noexcept;
/// det of the 4x4 Gram matrix S_diamond.
Residual det_Sdiamond(const SCoords& s) noexcept;

/// Necessary conditions for r_i = r_{i+1} at the trace level:
/// for positions 1..4, (tr0, tr1 - tr2, tr1 + tr2). Position k uses the
/// subscripts shifted by k - 1.
std::array<Residual, 12> trace_equation_residuals(const TraceVector& v) noexcept;
/// The redundant equation tr(r_i x_{i+1} x_i) = tr(r_{i+1} x_{i+1} x_i), positions 1..4.
std::array<Residual, 4> tr3_residuals(const TraceVector& v) noexcept;

/// Quarter turn x_i -> x_{i+1}: the value stored under subscripts I moves to
/// subscripts I + 1. rotate applied four times is the identity.
TraceVector rotate(const TraceVector& v) noexcept;
/// rotate applied k times (k taken mod 4).
TraceVector rotate(const TraceVector& v, int k) noexcept;

/// The eleven traces computed by matrix products.
TraceVector trace_vector_of(const Quadruple& q) noexcept;

/// Largest normalized value in a residual list.
template <std::size_t N>
double max_normalized(const std::array<Residual, N>& rs) noexcept {
  double m = 0.0;
  for (const Residual& r : rs) m = std::max(m, r.normalized());
  return m;
}

}  // namespace charvar
