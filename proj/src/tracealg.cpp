#include "charvar/tracealg.hpp"

#include <utility>

namespace charvar {

std::array<Complex, 11> TraceVector::as_array() const noexcept {
  return {t, t12, t23, t34, t14, t13, t24, t123, t124, t134, t234};
}

TraceVector TraceVector::from_array(const std::array<Complex, 11>& a) noexcept {
  return TraceVector{a[0], a[1], a[2], a[3], a[4], a[5], a[6], a[7], a[8], a[9], a[10]};
}

Complex TraceVector::pair(int i, int j) const {
  if (i > j) std::swap(i, j);
  switch (i * 10 + j) {
    case 11: case 22: case 33: case 44: return t * t - 2.0;
    case 12: return t12;
    case 23: return t23;
    case 34: return t34;
    case 14: return t14;
    case 13: return t13;
    case 24: return t24;
    default: throw Error(Errc::InvalidArgument, "bad pair index");
  }
}

Complex TraceVector::triple(int i, int j, int k) const {
  switch (i * 100 + j * 10 + k) {
    case 123: return t123;
    case 124: return t124;
    case 134: return t134;
    case 234: return t234;
    default: throw Error(Errc::InvalidArgument, "triple index must be sorted and distinct");
  }
}

double max_deviation(const TraceVector& a, const TraceVector& b) noexcept {
  const auto x = a.as_array();
  const auto y = b.as_array();
  double m = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) m = std::max(m, std::abs(x[k] - y[k]));
  return m;
}

double TraceVector::max_abs() const noexcept {
  double m = 0.0;
  for (Complex z : as_array()) m = std::max(m, std::abs(z));
  return m;
}

Complex SCoords::s(int i, int j) const {
  if (i == j) return s0;
  if (i > j) std::swap(i, j);
  switch (i * 10 + j) {
    case 12: return s12;
    case 23: return s23;
    case 34: return s34;
    case 14: return s14;
    case 13: return s13;
    case 24: return s24;
    default: throw Error(Errc::InvalidArgument, "bad pair index");
  }
}

Complex SCoords::s3(int i, int j, int k) const {
  if (i == j || j == k || i == k) return 0.0;
  int sign = 1;
  // Sort with a sign count; s_ijk is alternating.
  if (i > j) { std::swap(i, j); sign = -sign; }
  if (j > k) { std::swap(j, k); sign = -sign; }
  if (i > j) { std::swap(i, j); sign = -sign; }
  Complex v;
  switch (i * 100 + j * 10 + k) {
    case 123: v = s123; break;
    case 124: v = s124; break;
    case 134: v = s134; break;
    case 234: v = s234; break;
    default: throw Error(Errc::InvalidArgument, "bad triple index");
  }
  return static_cast<double>(sign) * v;
}

double SCoords::max_abs() const noexcept {
  double m = 0.0;
  for (Complex z : {s0, s12, s23, s34, s14, s13, s24, s123, s124, s134, s234}) m = std::max(m, std::abs(z));
  return m;
}

SCoords s_from_t(const TraceVector& v) noexcept {
  const Complex t = v.t;
  const Complex half_t2 = 0.5 * t * t;
  const Complex half_t3 = 0.5 * t * t * t;
  auto sijk = [&](Complex tijk, Complex tij, Complex tjk, Complex tik) {
    return tijk - 0.5 * t * (tij + tjk + tik) + half_t3;
  };
  SCoords s{};
  s.s0 = half_t2 - 2.0;
  s.s12 = v.t12 - half_t2;
  s.s23 = v.t23 - half_t2;
  s.s34 = v.t34 - half_t2;
  s.s14 = v.t14 - half_t2;
  s.s13 = v.t13 - half_t2;
  s.s24 = v.t24 - half_t2;
  s.s123 = sijk(v.t123, v.t12, v.t23, v.t13);
  s.s124 = sijk(v.t124, v.t12, v.t24, v.t14);
  s.s134 = sijk(v.t134, v.t13, v.t34, v.t14);
  s.s234 = sijk(v.t234, v.t23, v.t34, v.t24);
  return s;
}

TraceVector t_from_s(const SCoords& s, Complex t) {
  const Complex half_t2 = 0.5 * t * t;
  if (std::abs(s.s0 - (half_t2 - 2.0)) > 1e-9 * std::max(1.0, std::abs(half_t2)))
    throw Error(Errc::InconsistentS0, "s0 does not match t^2/2 - 2");
  TraceVector v{};
  v.t = t;
  v.t12 = s.s12 + half_t2;
  v.t23 = s.s23 + half_t2;
  v.t34 = s.s34 + half_t2;
  v.t14 = s.s14 + half_t2;
  v.t13 = s.s13 + half_t2;
  v.t24 = s.s24 + half_t2;
  const Complex half_t3 = 0.5 * t * t * t;
  auto tijk = [&](Complex sijk, Complex tij, Complex tjk, Complex tik) {
    return sijk + 0.5 * t * (tij + tjk + tik) - half_t3;
  };
  v.t123 = tijk(s.s123, v.t12, v.t23, v.t13);
  v.t124 = tijk(s.s124, v.t12, v.t24, v.t14);
  v.t134 = tijk(s.s134, v.t13, v.t34, v.t14);
  v.t234 = tijk(s.s234, v.t23, v.t34, v.t24);
  return v;
}

GramData::Sym3 gram3(const SCoords& s, int i, int j, int k) noexcept {
  const std::array<int, 3> idx{i, j, k};
  GramData::Sym3 m{};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) m[a][b] = s.s(idx[a], idx[b]);
  return m;
}

GramData gram(const SCoords& s) noexcept {
  GramData g{};
  g.S123 = gram3(s, 1, 2, 3);
  g.S124 = gram3(s, 1, 2, 4);
  g.S134 = gram3(s, 1, 3, 4);
  g.S234 = gram3(s, 2, 3, 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) g.Sdiamond[a][b] = s.s(a + 1, b + 1);
  return g;
}

namespace {

Tracked det3(const std::array<std::array<Tracked, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

std::array<Residual, 16> typeI_residuals(const SCoords& s) noexcept {
  std::array<Residual, 16> out;
  for (std::size_t p = 0; p < 4; ++p) {
    for (std::size_t q = 0; q < 4; ++q) {
      const auto& I = kTriples[p];
      const auto& J = kTriples[q];
      std::array<std::array<Tracked, 3>, 3> m;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) m[a][b] = Tracked(s.s(I[a], J[b]));
      const Tracked sI = s.s3(I[0], I[1], I[2]);
      const Tracked sJ = s.s3(J[0], J[1], J[2]);
      out[p * 4 + q] = (Tracked(2.0) * sI * sJ + det3(m)).residual();
    }
  }
  return out;
}

std::array<Residual, 4> typeII_residuals(const SCoords& s) noexcept {
  std::array<Residual, 4> out;
  for (int i = 1; i <= 4; ++i) {
    const Tracked r = Tracked(s.s(i, 1)) * s.s234 - Tracked(s.s(i, 2)) * s.s134 +
                      Tracked(s.s(i, 3)) * s.s124 - Tracked(s.s(i, 4)) * s.s123;
    out[i - 1] = r.residual();
  }
  return out;
}

Residual det_Sdiamond(const SCoords& s) noexcept {
  // Laplace expansion along the first two rows (products of 2x2 minors).
  std::array<std::array<Tracked, 4>, 4> m;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) m[a][b] = Tracked(s.s(a + 1, b + 1));
  auto minor = [&](int r0, int r1, int c0, int c1) {
    return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
  };
  const Tracked det = minor(0, 1, 0, 1) * minor(2, 3, 2, 3) - minor(0, 1, 0, 2) * minor(2, 3, 1, 3) +
                      minor(0, 1, 0, 3) * minor(2, 3, 1, 2) + minor(0, 1, 1, 2) * minor(2, 3, 0, 3) -
                      minor(0, 1, 1, 3) * minor(2, 3, 0, 2) + minor(0, 1, 2, 3) * minor(2, 3, 0, 1);
  return det.residual();
}

namespace {

// Residuals of tr(r1 a) = tr(r2 a) for a in {e, x1, x2, x2 x1}, in the
// combined forms (tr0, tr1 - tr2, tr1 + tr2) plus tr3, polynomial in the traces.
struct BaseEquations {
  Residual tr0, tr1_minus_tr2, tr1_plus_tr2, tr3;
};

BaseEquations base_equations(const TraceVector& v) noexcept {
  const Tracked t = v.t;
  const Tracked t2 = t * t;
  const Tracked one = 1.0, two = 2.0;
  const Tracked t12 = v.t12, t13 = v.t13, t14 = v.t14, t23 = v.t23, t24 = v.t24;
  const Tracked t123 = v.t123, t124 = v.t124;

  const Tracked d_triple = t124 - t123;
  const Tracked d_diag = t13 - t24;
  const Tracked d_side = t14 - t23;

  BaseEquations e;
  e.tr0 = ((t2 - one) * d_triple + t * d_diag - t * (t12 - one) * d_side).residual();
  e.tr1_minus_tr2 = (t * (t12 + t2 - two) * d_triple + (t12 + t2 - one) * d_diag -
                     (t12 * t12 + (t2 - one) * t12 - t2 - one) * d_side)
                        .residual();
  e.tr1_plus_tr2 = (t * (t2 - two - t12) * (t124 + t123) + (t12 + one - t2) * (t13 + t24) -
                    (one - t12 * t12 + (t2 - one) * t12 - t2) * (t14 + t23))
                       .residual();
  e.tr3 = (t2 * (t12 - one) * d_triple + t * (t12 - one) * d_diag -
           t * (t12 * t12 - t12 - one) * d_side)
              .residual();
  return e;
}

}  // namespace

std::array<Residual, 12> trace_equation_residuals(const TraceVector& v) noexcept {
  std::array<Residual, 12> out;
  for (int k = 0; k < 4; ++k) {
    // Position k + 1 reads the coordinates with subscripts shifted by k,
    // i.e. the inverse quarter turn applied k times.
    const BaseEquations e = base_equations(rotate(v, 4 - k));
    out[3 * k + 0] = e.tr0;
    out[3 * k + 1] = e.tr1_minus_tr2;
    out[3 * k + 2] = e.tr1_plus_tr2;
  }
  return out;
}

std::array<Residual, 4> tr3_residuals(const TraceVector& v) noexcept {
  std::array<Residual, 4> out;
  for (int k = 0; k < 4; ++k) out[k] = base_equations(rotate(v, 4 - k)).tr3;
  return out;
}

TraceVector rotate(const TraceVector& v) noexcept {
  TraceVector w{};
  w.t = v.t;
  w.t23 = v.t12;
  w.t34 = v.t23;
  w.t14 = v.t34;
  w.t12 = v.t14;
  w.t13 = v.t24;
  w.t24 = v.t13;
  w.t234 = v.t123;
  w.t134 = v.t234;
  w.t124 = v.t134;
  w.t123 = v.t124;
  return w;
}

TraceVector rotate(const TraceVector& v, int k) noexcept {
  TraceVector w = v;
  for (int i = 0; i < ((k % 4) + 4) % 4; ++i) w = rotate(w);
  return w;
}

TraceVector trace_vector_of(const Quadruple& q) noexcept {
  auto tr2 = [&](int i, int j) { return (q.x(i) * q.x(j)).trace(); };
  auto tr3 = [&](int i, int j, int k) { return (q.x(i) * q.x(j) * q.x(k)).trace(); };
  TraceVector v{};
  v.t = q.t();
  v.t12 = tr2(1, 2);
  v.t23 = tr2(2, 3);
  v.t34 = tr2(3, 4);
  v.t14 = tr2(1, 4);
  v.t13 = tr2(1, 3);
  v.t24 = tr2(2, 4);
  v.t123 = tr3(1, 2, 3);
  v.t124 = tr3(1, 2, 4);
  v.t134 = tr3(1, 3, 4);
  v.t234 = tr3(2, 3, 4);
  return v;
}

}  // namespace charvar
