#include "charvar/reconstruct.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "charvar/numfield.hpp"

namespace charvar {

Quadruple::Quadruple(const std::array<Mat2, 4>& xs) : xs_(xs), t_(xs[0].trace()) {
  for (const Mat2& x : xs_) {
    require_finite(x.a + x.b + x.c + x.d, "quadruple entry");
    const double n = std::max(1.0, x.norm());
    if (std::abs(x.det() - 1.0) > kTol * n * n)
      throw Error(Errc::InvalidArgument, "quadruple matrix is not in SL(2,C)");
    if (std::abs(x.trace() - t_) > kTol * n)
      throw Error(Errc::TraceMismatch, "quadruple matrices do not share a trace");
  }
}

double Quadruple::scale() const noexcept {
  double s = 1.0;
  for (const Mat2& x : xs_) s = std::max(s, x.norm());
  return s;
}

Quadruple Quadruple::conjugated(const Mat2& g) const {
  const Mat2 gi = inverse(g);
  std::array<Mat2, 4> ys;
  for (std::size_t i = 0; i < 4; ++i) ys[i] = g * xs_[i] * gi;
  return Quadruple(ys);
}

namespace {

using Vec3 = std::array<Complex, 3>;
using Mat3 = std::array<Vec3, 3>;

constexpr double kPivotTol = 1e-10;

double max_abs(const Mat3& m) {
  double s = 0.0;
  for (const auto& row : m)
    for (Complex z : row) s = std::max(s, std::abs(z));
  return s;
}

Complex quad_form(const Mat3& r, const Vec3& w) {
  Complex q = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) q += w[i] * r[i][j] * w[j];
  return q;
}

// Factors a complex symmetric S as sum_k m_k m_k^T (so S = M^T M with rows
// m_k) by repeated rank-one Wedderburn deflation R <- R - (Rw)(Rw)^T / (w^T R w).
// Candidate directions are e_p and e_p +- e_q; the one with largest |w^T R w|
// is taken, so zero diagonals (s0 = 0 at t = +-2) are handled.
Mat3 symmetric_factor(const Mat3& S) {
  const double thresh = kPivotTol * std::max(1e-300, max_abs(S));
  Mat3 R = S;
  Mat3 M{};
  std::vector<Vec3> candidates;
  for (int p = 0; p < 3; ++p) {
    Vec3 w{};
    w[p] = 1.0;
    candidates.push_back(w);
  }
  for (int p = 0; p < 3; ++p)
    for (int q = p + 1; q < 3; ++q)
      for (double sgn : {1.0, -1.0}) {
        Vec3 w{};
        w[p] = 1.0;
        w[q] = sgn;
        candidates.push_back(w);
      }

  for (int k = 0; k < 3; ++k) {
    const Vec3* best = nullptr;
    Complex best_q = 0.0;
    for (const Vec3& w : candidates) {
      const Complex q = quad_form(R, w);
      if (std::abs(q) > std::abs(best_q)) {
        best_q = q;
        best = &w;
      }
    }
    if (best == nullptr || std::abs(best_q) <= thresh)
      throw Error(Errc::FactorizationFailure, "Gram matrix is rank deficient");
    Vec3 rw{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) rw[i] += R[i][j] * (*best)[j];
    const Complex root = principal_sqrt(best_q);
    for (int i = 0; i < 3; ++i) M[k][i] = rw[i] / root;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) R[i][j] -= M[k][i] * M[k][j];
  }
  return M;
}

Complex det3(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Tracked tracked_det3(const GramData::Sym3& s) {
  std::array<std::array<Tracked, 3>, 3> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = s[i][j];
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

Triple realize_triple(Complex t, const GramData::Sym3& S, Complex s123) {
  const Complex s0 = 0.5 * t * t - 2.0;
  for (int i = 0; i < 3; ++i)
    if (std::abs(S[i][i] - s0) > 1e-9 * std::max(1.0, std::abs(s0)))
      throw Error(Errc::ConstraintViolated, "Gram diagonal differs from s0");
  if (std::abs(s123) <= 1e-9) throw Error(Errc::SmallS123, "s123 vanishes");
  const Residual constraint = (Tracked(2.0) * Tracked(s123) * Tracked(s123) + tracked_det3(S)).residual();
  if (constraint.normalized() > 1e-8)
    throw Error(Errc::ConstraintViolated, "2 s123^2 + det S != 0");

  Mat3 target{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) target[i][j] = 0.5 * (S[i][j] + S[j][i]);
  const Mat3 M = symmetric_factor(target);

  // A = N^{-1} M with N = diag(sqrt2, sqrt2, i sqrt2), so that A^T B A = S.
  const double r2 = std::sqrt(2.0);
  const std::array<Complex, 3> n{r2, r2, Complex(0.0, r2)};
  Mat3 A{};
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i) A[k][i] = M[k][i] / n[k];

  // tr(u1 u2 u3) = -2 det A; the two square roots of the constraint differ by sign.
  const Complex achieved = -2.0 * det3(A);
  if (std::abs(achieved - s123) > std::abs(achieved + s123))
    for (auto& row : A)
      for (Complex& z : row) z = -z;

  const std::array<Mat2, 3> basis{TracelessBasis::e1, TracelessBasis::e2, TracelessBasis::e3};
  Triple out;
  for (int i = 0; i < 3; ++i) {
    Mat2 u = Mat2::zero();
    for (int k = 0; k < 3; ++k) u += A[k][i] * basis[k];
    out[i] = u + Mat2::scalar(0.5 * t);
  }
  return out;
}

Mat2 extend_to_quadruple(const Triple& triple, Complex s14, Complex s24, Complex s34,
                         Complex s124, Complex s134, Complex s234) {
  const Complex t = triple[0].trace();
  const Complex s0 = 0.5 * t * t - 2.0;
  std::array<Mat2, 3> u;
  for (int i = 0; i < 3; ++i) u[i] = traceless_part(triple[i]).mat();
  const Complex s123 = (u[0] * u[1] * u[2]).trace();
  if (std::abs(s123) <= 1e-9) throw Error(Errc::SmallS123, "realized triple has s123 = 0");

  const std::array<Complex, 3> s_i4{s14, s24, s34};
  for (int i = 0; i < 3; ++i) {
    auto sij = [&](int j) { return Tracked((u[i] * u[j]).trace()); };
    const Residual r = (sij(0) * s234 - sij(1) * s134 + sij(2) * s124 - Tracked(s_i4[i]) * s123).residual();
    if (r.normalized() > 1e-8) throw Error(Errc::TypeIIViolated, "type II relation fails");
  }

  Mat2 u4 = (s234 / s123) * u[0];
  u4 -= (s134 / s123) * u[1];
  u4 += (s124 / s123) * u[2];
  const Complex s44 = (u4 * u4).trace();
  if (std::abs(s44 - s0) > 1e-8 * std::max({1.0, std::abs(s0), std::abs(s44)}))
    throw Error(Errc::S44Mismatch, "implied s44 differs from s0");
  return u4 + Mat2::scalar(0.5 * t);
}

std::pair<Mat2, Mat2> realize_pair(Complex t, Complex t12_target) {
  const Complex kappa = 0.5 * (t + principal_sqrt(t * t - 4.0));
  const Complex kinv = 1.0 / kappa;
  const Complex c = t12_target - t * t + 2.0;
  return {Mat2{kappa, 1.0, 0.0, kinv}, Mat2{kappa, 0.0, c, kinv}};
}

const char* to_string(RealizationPath p) noexcept {
  switch (p) {
    case RealizationPath::Triple123: return "triple123";
    case RealizationPath::Triple124: return "triple124";
    case RealizationPath::Triple134: return "triple134";
    case RealizationPath::Triple234: return "triple234";
    case RealizationPath::EqualDiagonals: return "x1=x3,x2=x4";
    case RealizationPath::EqualAdjacent23: return "x2=x3,x4=x1";
    case RealizationPath::EqualAdjacent12: return "x1=x2,x3=x4";
  }
  return "unknown";
}

namespace {

constexpr double kRoundTripTol = 1e-8;
constexpr double kDegenerateTol = 1e-7;

double relative_deviation(const Quadruple& q, const TraceVector& v) {
  return max_deviation(trace_vector_of(q), v) / std::max(1.0, v.max_abs());
}

Quadruple realize_with_triple(const TraceVector& v, const SCoords& s, std::size_t role) {
  const auto& idx = kTriples[role];
  const int a = idx[0], b = idx[1], c = idx[2];
  const int l = 10 - a - b - c;
  const Triple triple = realize_triple(v.t, gram3(s, a, b, c), s.s3(a, b, c));
  const Mat2 xl = extend_to_quadruple(triple, s.s(a, l), s.s(b, l), s.s(c, l),
                                      s.s3(a, b, l), s.s3(a, c, l), s.s3(b, c, l));
  std::array<Mat2, 4> xs;
  xs[a - 1] = triple[0];
  xs[b - 1] = triple[1];
  xs[c - 1] = triple[2];
  xs[l - 1] = xl;
  return Quadruple(xs);
}

}  // namespace

Realization realize_character(const TraceVector& v) {
  for (Complex z : v.as_array()) require_finite(z, "trace coordinate");
  const SCoords s = s_from_t(v);
  const double scale = std::max(1.0, s.max_abs());

  const std::array<Complex, 4> sijk{s.s123, s.s124, s.s134, s.s234};
  std::array<std::size_t, 4> order{0, 1, 2, 3};
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return std::abs(sijk[i]) > std::abs(sijk[j]); });

  std::optional<Error> first_error;
  for (std::size_t role : order) {
    if (std::abs(sijk[role]) <= kDegenerateTol * scale) break;
    try {
      Quadruple q = realize_with_triple(v, s, role);
      const double dev = relative_deviation(q, v);
      if (dev <= kRoundTripTol)
        return Realization{q, static_cast<RealizationPath>(role), dev};
      if (!first_error) first_error = Error(Errc::ConstraintViolated, "realized traces do not match");
    } catch (const Error& e) {
      if (!first_error) first_error = e;
    }
  }

  const Complex sq = v.t * v.t - 2.0;
  auto near = [&](Complex a, Complex b) {
    return std::abs(a - b) <= kDegenerateTol * std::max(1.0, std::abs(b));
  };
  auto attempt = [&](RealizationPath path) -> std::optional<Realization> {
    std::array<Mat2, 4> xs;
    if (path == RealizationPath::EqualDiagonals) {
      auto [p, q] = realize_pair(v.t, v.t12);
      xs = {p, q, p, q};
    } else if (path == RealizationPath::EqualAdjacent23) {
      auto [p, q] = realize_pair(v.t, v.t12);
      xs = {p, q, q, p};
    } else {
      auto [p, q] = realize_pair(v.t, v.t23);
      xs = {p, p, q, q};
    }
    Quadruple quad(xs);
    const double dev = relative_deviation(quad, v);
    if (dev <= kRoundTripTol) return Realization{quad, path, dev};
    return std::nullopt;
  };

  if (near(v.t13, sq) && near(v.t24, sq))
    if (auto r = attempt(RealizationPath::EqualDiagonals)) return *r;
  if (near(v.t23, sq) && near(v.t14, sq))
    if (auto r = attempt(RealizationPath::EqualAdjacent23)) return *r;
  if (near(v.t12, sq) && near(v.t34, sq))
    if (auto r = attempt(RealizationPath::EqualAdjacent12)) return *r;

  if (first_error) throw *first_error;
  throw Error(Errc::DegenerateCharacter, "all s_ijk vanish and no equal-generator pattern applies");
}

}  // namespace charvar
