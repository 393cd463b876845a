#pragma once

#include <array>
#include <optional>
#include <string>

#include "charvar/mat2.hpp"
#include "charvar/quadruple.hpp"
#include "charvar/tracealg.hpp"

namespace charvar {

/// Fixed basis of M_0. Under (u, v) -> tr(uv) its Gram matrix is
/// diag(2, 2, -2), and tr(e1 e2 e3) = -2.
struct TracelessBasis {
  static constexpr Mat2 e1{1.0, 0.0, 0.0, -1.0};
  static constexpr Mat2 e2{0.0, 1.0, 1.0, 0.0};
  static constexpr Mat2 e3{0.0, 1.0, -1.0, 0.0};
};

using Triple = std::array<Mat2, 3>;

/// Realizes (x1, x2, x3) in G(t)^3 with tr(u_i u_j) = S_ij and
/// tr(u1 u2 u3) = s123, u_i the traceless parts. Requires S_ii = s0,
/// |s123| > 1e-9 and 2 s123^2 + det S = 0 (within 1e-8 scale).
Triple realize_triple(Complex t, const GramData::Sym3& S, Complex s123);

/// Unique x4 in G(t) whose traceless part is
/// (s234 u1 - s134 u2 + s124 u3) / s123, for a realized triple.
/// Checks the four type II equalities and s44 = s0.
Mat2 extend_to_quadruple(const Triple& triple, Complex s14, Complex s24, Complex s34,
                         Complex s124, Complex s134, Complex s234);

/// Canonical pair x1 = [[k, 1], [0, 1/k]], x2 = [[k, 0], [c, 1/k]] with
/// k + 1/k = t and tr(x1 x2) = t12_target.
std::pair<Mat2, Mat2> realize_pair(Complex t, Complex t12_target);

enum class RealizationPath {
  Triple123,
  Triple124,
  Triple134,
  Triple234,
  EqualDiagonals,     // x1 = x3, x2 = x4
  EqualAdjacent23,    // x2 = x3, x4 = x1
  EqualAdjacent12,    // x1 = x2, x3 = x4
};

const char* to_string(RealizationPath p) noexcept;

struct Realization {
  Quadruple quadruple;
  RealizationPath path;
  double deviation;  // max coordinate deviation of the realized traces, relative
};

/// Realizes a character given by its trace coordinates as a quadruple in
/// G(t)^4. Generic characters go through a triple with nonzero s_ijk
/// (largest |s_ijk| first); characters with all s_ijk = 0 go through the
/// equal-generator patterns. The realized traces must match within 1e-8
/// (relative to max(1, |v|)).
Realization realize_character(const TraceVector& v);

}  // namespace charvar
