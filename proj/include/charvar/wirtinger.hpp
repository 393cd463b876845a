#pragma once

#include <array>

#include "charvar/quadruple.hpp"

namespace charvar {

/// r_i = x_i x_{i+1} x_i^{-1} x_{i-1} x_i, subscripts mod 4. The quadruple
/// is a representation of the 8_18 group iff r1 = r2 = r3 = r4.
struct RelatorSet {
  std::array<Mat2, 4> r;
};

RelatorSet relators(const Quadruple& q);

struct RepresentationCheck {
  bool ok;
  double residual;  // max_{i<j} |r_i - r_j| / max(1, |r_1|), entrywise
};

RepresentationCheck is_representation(const Quadruple& q, double tol = 1e-7);

/// No common eigenvector among x1..x4.
bool is_irreducible(const Quadruple& q);

struct Lemma31Report {
  bool applicable;         // x_i and x_{i+1} commute
  double adjacent;         // |x_i - x_{i+1}| / scale
  double opposite;         // |x_{i-1} - x_{i+2}| / scale
  double trace_defect;     // |tr(x_i x_{i-1}) - 1|
  bool holds;
};

/// For an irreducible representation in which x_i commutes with x_{i+1}:
/// x_i = x_{i+1}, x_{i-1} = x_{i+2} and tr(x_i x_{i-1}) = 1 (tolerance 1e-8).
/// Throws PreconditionViolated for non-representations and reducible quadruples;
/// a non-commuting pair yields applicable = false.
Lemma31Report lemma31_check(const Quadruple& q, int i);

/// s1 s2 s1^{-1} s2 s1 - s2 s1 s2^{-1} s1 s2, the 4_1 relator.
Mat2 fig8_relator(const Mat2& s1, const Mat2& s2);

/// x1 = x3, x2 = x4 (within 1e-8 scale) and (x1, x2) satisfies the 4_1 relator.
bool factors_through_fig8(const Quadruple& q);

}  // namespace charvar
