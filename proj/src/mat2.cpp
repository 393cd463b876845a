#include "charvar/mat2.hpp"

#include <array>
#include <vector>

#include "charvar/numfield.hpp"

namespace charvar {

double Mat2::norm() const noexcept {
  return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
}

Mat2& Mat2::operator+=(const Mat2& o) noexcept {
  a += o.a; b += o.b; c += o.c; d += o.d;
  return *this;
}

Mat2& Mat2::operator-=(const Mat2& o) noexcept {
  a -= o.a; b -= o.b; c -= o.c; d -= o.d;
  return *this;
}

Mat2& Mat2::operator*=(Complex s) noexcept {
  a *= s; b *= s; c *= s; d *= s;
  return *this;
}

Mat2 operator+(Mat2 x, const Mat2& y) noexcept { return x += y; }
Mat2 operator-(Mat2 x, const Mat2& y) noexcept { return x -= y; }
Mat2 operator-(const Mat2& x) noexcept { return Mat2{-x.a, -x.b, -x.c, -x.d}; }
Mat2 operator*(Complex s, Mat2 x) noexcept { return x *= s; }

Mat2 operator*(const Mat2& x, const Mat2& y) noexcept {
  return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
              x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 mul(const Mat2& x, const Mat2& y) noexcept { return x * y; }

Mat2 inverse(const Mat2& x) {
  const Complex dt = x.det();
  if (std::abs(dt) <= 1e-14) throw Error(Errc::SingularMatrix, "determinant vanishes");
  Mat2 adj = x.adjugate();
  adj *= 1.0 / dt;
  return adj;
}

double distance(const Mat2& x, const Mat2& y) noexcept { return (x - y).norm(); }

TracelessMat2::TracelessMat2(const Mat2& m) : m_(m) {
  if (std::abs(m.trace()) > kTraceTol * std::max(1.0, m.norm()))
    throw Error(Errc::InvalidArgument, "matrix is not traceless");
}

TracelessMat2 traceless_part(const Mat2& x) noexcept {
  const Complex h = 0.5 * x.trace();
  return TracelessMat2(Mat2{x.a - h, x.b, x.c, x.d - h}, TracelessMat2::Unchecked{});
}

GtElement::GtElement(const Mat2& m) : m_(m) {
  const double n = std::max(1.0, m.norm());
  if (std::abs(m.det() - 1.0) > kDetTol * n * n)
    throw Error(Errc::InvalidArgument, "matrix is not in SL(2,C)");
}

Mat2 ch_residual(const GtElement& x) noexcept {
  const Mat2& m = x.mat();
  return m * m - x.t() * m + Mat2::identity();
}

Mat2 xyx_expand(const GtElement& x, const GtElement& y) noexcept {
  const Mat2& m = x.mat();
  const Mat2& n = y.mat();
  const Mat2 mn = m * n;
  return mn * m - (mn.trace() * m + n - x.t() * Mat2::identity());
}

Mat2 anticommutator_residual(const TracelessMat2& u, const TracelessMat2& v) noexcept {
  const Mat2 uv = u.mat() * v.mat();
  return uv + v.mat() * u.mat() - Mat2::scalar(uv.trace());
}

Complex triple_trace(const TracelessMat2& u, const TracelessMat2& v, const TracelessMat2& w) noexcept {
  return (u.mat() * v.mat() * w.mat()).trace();
}

bool is_scalar(const Mat2& m) noexcept {
  const double tol = 1e-12 * m.norm();
  return std::abs(m.b) <= tol && std::abs(m.c) <= tol && std::abs(m.a - m.d) <= tol;
}

namespace {

using Vec2 = std::array<Complex, 2>;

constexpr double kAngleTol = 1e-8;

double vnorm(const Vec2& v) { return std::hypot(std::abs(v[0]), std::abs(v[1])); }

// Null vector of m - lambda e, read off the row of larger norm.
Vec2 eigenvector(const Mat2& m, Complex lambda) {
  const Vec2 r1{m.a - lambda, m.b};
  const Vec2 r2{m.c, m.d - lambda};
  const Vec2& r = vnorm(r1) >= vnorm(r2) ? r1 : r2;
  Vec2 v{-r[1], r[0]};
  const double n = vnorm(v);
  if (n == 0.0) return {1.0, 0.0};
  return {v[0] / n, v[1] / n};
}

bool spans_invariant(const Mat2& y, const Vec2& xi) {
  const Vec2 w{y.a * xi[0] + y.b * xi[1], y.c * xi[0] + y.d * xi[1]};
  const double wn = vnorm(w);
  if (wn <= 1e-14 * std::max(1.0, y.norm())) return true;
  const double cross = std::abs(xi[0] * w[1] - xi[1] * w[0]);
  return cross <= kAngleTol * wn * vnorm(xi);
}

}  // namespace

bool has_common_eigenvector(std::span<const Mat2> ms) {
  const Mat2* pivot = nullptr;
  for (const Mat2& m : ms)
    if (!is_scalar(m)) {
      pivot = &m;
      break;
    }
  if (pivot == nullptr) return true;

  const Complex tr = pivot->trace();
  const Complex disc = principal_sqrt(tr * tr - 4.0 * pivot->det());
  const std::array<Complex, 2> lambdas{0.5 * (tr + disc), 0.5 * (tr - disc)};
  for (Complex lambda : lambdas) {
    const Vec2 xi = eigenvector(*pivot, lambda);
    bool common = true;
    for (const Mat2& m : ms)
      if (!spans_invariant(m, xi)) {
        common = false;
        break;
      }
    if (common) return true;
  }
  return false;
}

bool is_irreducible_pair(const GtElement& x, const GtElement& y) noexcept {
  const Complex t = x.t();
  const Complex v = (x.mat() * y.mat()).trace();
  const double tol = 1e-9 * std::max(1.0, std::abs(v));
  return std::abs(v - 2.0) > tol && std::abs(v - (t * t - 2.0)) > tol;
}

const char* to_string(Lemma25Conclusion c) noexcept {
  switch (c) {
    case Lemma25Conclusion::Commuting: return "commuting";
    case Lemma25Conclusion::Equal: return "equal";
    case Lemma25Conclusion::Inverse: return "inverse";
  }
  return "unknown";
}

Lemma25Report lemma25_apply(const GtElement& x1, const GtElement& x2, const GtElement& x3) {
  const Complex t = x1.t();
  const double scale = std::max({1.0, x1.mat().norm(), x2.mat().norm(), x3.mat().norm()});
  const double tol = 1e-9 * scale * scale;
  if (std::abs(x2.t() - t) > tol || std::abs(x3.t() - t) > tol)
    throw Error(Errc::PreconditionViolated, "matrices do not share a trace");

  const std::array<Mat2, 3> triple{x1.mat(), x2.mat(), x3.mat()};
  if (has_common_eigenvector(triple))
    throw Error(Errc::PreconditionViolated, "triple is reducible");

  const TracelessMat2 u1 = traceless_part(x1), u2 = traceless_part(x2), u3 = traceless_part(x3);
  const double tol3 = tol * scale;
  if (std::abs(triple_trace(u1, u2, u3)) > tol3)
    throw Error(Errc::PreconditionViolated, "s123 does not vanish");

  const Complex s0 = 0.5 * t * t - 2.0;
  const Complex s13 = (u1.mat() * u3.mat()).trace();
  int eps = 0;
  if (std::abs(s13 - s0) <= tol) eps = 1;
  else if (std::abs(s13 + s0) <= tol) eps = -1;
  else throw Error(Errc::PreconditionViolated, "s13 is not +-s0");

  Lemma25Report report{};
  report.epsilon = eps;
  const Mat2 p = x1.mat() * x3.mat();
  const Mat2 q = x3.mat() * x1.mat();
  report.commutator = distance(p, q) / (scale * scale);

  const bool parabolic = std::abs(t - 2.0) <= 1e-6 || std::abs(t + 2.0) <= 1e-6;
  if (parabolic) {
    report.conclusion = Lemma25Conclusion::Commuting;
    report.power_distance = 0.0;
  } else {
    const Mat2 target = eps == 1 ? x1.mat() : inverse(x1.mat());
    report.conclusion = eps == 1 ? Lemma25Conclusion::Equal : Lemma25Conclusion::Inverse;
    report.power_distance = distance(x3.mat(), target) / scale;
  }
  report.holds = report.commutator <= 1e-9 && report.power_distance <= 1e-9;
  return report;
}

}  // namespace charvar
