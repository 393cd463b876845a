#include "charvar/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace charvar {

const char* to_string(ComponentId id) noexcept {
  switch (id) {
    case ComponentId::X11: return "X11";
    case ComponentId::X12: return "X12";
    case ComponentId::X21: return "X21";
    case ComponentId::X22: return "X22";
    case ComponentId::X3: return "X3";
    case ComponentId::X4: return "X4";
    case ComponentId::X51: return "X51";
    case ComponentId::X52: return "X52";
    case ComponentId::X61: return "X61";
    case ComponentId::X62: return "X62";
  }
  return "?";
}

std::optional<ComponentId> parse_component(std::string_view name) noexcept {
  for (ComponentId id : kAllComponents)
    if (name == to_string(id)) return id;
  return std::nullopt;
}

ComponentId rotation_partner(ComponentId id) noexcept {
  switch (id) {
    case ComponentId::X11: return ComponentId::X12;
    case ComponentId::X12: return ComponentId::X11;
    case ComponentId::X21: return ComponentId::X22;
    case ComponentId::X22: return ComponentId::X21;
    case ComponentId::X51: return ComponentId::X52;
    case ComponentId::X52: return ComponentId::X51;
    case ComponentId::X61: return ComponentId::X62;
    case ComponentId::X62: return ComponentId::X61;
    default: return id;
  }
}

Complex ComponentSample::param(std::string_view name) const {
  for (const Param& p : params)
    if (p.name == name) return p.value;
  throw Error(Errc::InvalidArgument, "no parameter named " + std::string(name));
}

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

// Components stored as the image of their partner under rotate.
bool is_rotated(ComponentId id) noexcept {
  return id == ComponentId::X12 || id == ComponentId::X22 || id == ComponentId::X52 ||
         id == ComponentId::X62;
}

bool near(Complex a, Complex b, double margin) noexcept { return std::abs(a - b) < margin; }

bool alpha_family_admissible(Complex t, double m) noexcept {
  const Complex alpha = t * t - 1.0;
  if (std::abs(t) < m) return false;
  for (double bad : {0.0, 2.0, 4.0, 2.0 + 2.0 * kSqrt2, 2.0 - 2.0 * kSqrt2})
    if (near(alpha, bad, m)) return false;
  return true;
}

TraceVector make_vector(Complex t, std::array<Complex, 10> rest) {
  return TraceVector{t,       rest[0], rest[1], rest[2], rest[3], rest[4],
                     rest[5], rest[6], rest[7], rest[8], rest[9]};
}

std::vector<ComponentSample> sample_x11(Complex t) {
  const Complex a = t * t - 1.0;
  std::vector<ComponentSample> out;
  const auto [m1, m2] = solve_quadratic(1.0, a * a - 4.0 * a, 4.0 * a * a - a * a * a);
  for (Complex mu : {m1, m2}) {
    const auto [x1, x2] = solve_quadratic(1.0, -mu, 2.0 * mu / a + a - 4.0);
    for (Complex x : {x1, x2}) {
      const Complex tau = (a * a - 3.0 * a + 4.0 / a) * mu - a * a * a + 4.0 * a * a - 7.0;
      const Complex sig1 = (a - 3.0 + 1.0 / a) * mu - a * a + 4.0 * a - 2.0 + mu * x / a;
      const Complex sig2 = (1.0 / a + 1.0) * mu - 2.0 - mu * x / a;
      const TraceVector v = make_vector(
          t, {x + 1.0, mu + 1.0 - x, mu + 1.0 - x, x + 1.0, 1.0, tau, t * mu / a, t * sig1, t * mu / a, t * sig2});
      out.push_back({ComponentId::X11, static_cast<int>(out.size()),
                     {{"t", t}, {"alpha", a}, {"mu", mu}, {"x", x}}, v});
    }
  }
  return out;
}

std::vector<ComponentSample> sample_x21(Complex t) {
  const Complex a = t * t - 1.0;
  std::vector<ComponentSample> out;
  const auto [z1, z2] = solve_quadratic(1.0, -a, a);
  for (Complex z : {z1, z2}) {
    const auto [g1, g2] = solve_quadratic(1.0, (a - 2.0) * z * z - 2.0 * z, z * z);
    for (Complex g : {g1, g2}) {
      const Complex p = t + t * z * g / a;
      const Complex q = t + t * z * z * z / (a * g);
      const TraceVector v =
          make_vector(t, {g + a - 1.0, z + 1.0, z * z / g + a - 1.0, z + 1.0, 1.0, 1.0, p, p, q, q});
      out.push_back({ComponentId::X21, static_cast<int>(out.size()),
                     {{"t", t}, {"alpha", a}, {"z", z}, {"gamma", g}}, v});
    }
  }
  return out;
}

std::vector<ComponentSample> sample_x3(Complex t) {
  const Complex t2 = t * t;
  std::vector<ComponentSample> out;
  const auto [u1, u2] = solve_quadratic(1.0, -(t2 + 1.0), 2.0 * t2 - 1.0);
  for (Complex u : {u1, u2}) {
    const Complex w = t * u - t;
    const TraceVector v = make_vector(t, {u, u, u, u, t2 - 2.0, t2 - 2.0, w, w, w, w});
    out.push_back({ComponentId::X3, static_cast<int>(out.size()), {{"t", t}, {"u", u}}, v});
  }
  return out;
}

// Polynomials in u, lowest degree first.
using UPoly = std::vector<Complex>;

UPoly poly_mul(const UPoly& p, const UPoly& q) {
  UPoly r(p.size() + q.size() - 1, 0.0);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

UPoly poly_add(UPoly p, const UPoly& q) {
  if (q.size() > p.size()) p.resize(q.size(), 0.0);
  for (std::size_t i = 0; i < q.size(); ++i) p[i] += q[i];
  return p;
}

// t^2 times the eta-quadratic after substituting t eta = u^2 + u - t^2 + 1.
PolyLE4 x4_eliminant(Complex t) {
  const Complex t2 = t * t;
  const UPoly P{1.0 - t2, 1.0, 1.0};
  UPoly r = poly_mul(P, P);
  r = poly_add(r, poly_mul({t2 * (t2 + 4.0), -2.0 * t2}, P));
  r = poly_add(r, {t2 * (t2 * t2 + 4.0 * t2 - 6.0), -5.0 * t2 * t2});
  std::reverse(r.begin(), r.end());
  return PolyLE4(r);
}

struct X4Residual {
  Complex f1, f2;
};

X4Residual x4_system(Complex t, Complex u, Complex eta) {
  const Complex t2 = t * t;
  return {t * eta - (u * u + u - t2 + 1.0),
          eta * eta + t * (t2 + 4.0 - 2.0 * u) * eta - 5.0 * t2 * u + t2 * t2 + 4.0 * t2 - 6.0};
}

// Newton on the two X4 equations; used near t = 0 where eta = P(u)/t is unusable.
std::pair<Complex, Complex> x4_newton(Complex t, Complex u, Complex eta) {
  for (int it = 0; it < 60; ++it) {
    const X4Residual f = x4_system(t, u, eta);
    const Complex j11 = -(2.0 * u + 1.0), j12 = t;
    const Complex j21 = -2.0 * t * eta - 5.0 * t * t, j22 = 2.0 * eta + t * (t * t + 4.0 - 2.0 * u);
    const Complex d = j11 * j22 - j12 * j21;
    if (std::abs(d) < 1e-300) throw Error(Errc::NonConvergence, "singular X4 Jacobian");
    const Complex du = (f.f1 * j22 - j12 * f.f2) / d;
    const Complex de = (j11 * f.f2 - j21 * f.f1) / d;
    u -= du;
    eta -= de;
    if (std::abs(du) + std::abs(de) < 1e-15 * (1.0 + std::abs(u) + std::abs(eta))) break;
  }
  const X4Residual f = x4_system(t, u, eta);
  if (std::abs(f.f1) + std::abs(f.f2) > 1e-10)
    throw Error(Errc::NonConvergence, "X4 Newton did not converge");
  return {u, eta};
}

std::vector<ComponentSample> sample_x4(Complex t) {
  std::vector<std::pair<Complex, Complex>> points;
  if (std::abs(t) <= kSamplerMargin) {
    const double r3 = std::sqrt(3.0), r6 = std::sqrt(6.0);
    for (Complex u0 : {Complex(-0.5, 0.5 * r3), Complex(-0.5, -0.5 * r3)})
      for (double e0 : {r6, -r6}) points.push_back(x4_newton(t, u0, e0));
  } else {
    for (Complex u : solve_poly(x4_eliminant(t)))
      points.emplace_back(u, (u * u + u - t * t + 1.0) / t);
  }
  std::vector<ComponentSample> out;
  for (auto [u, eta] : points)
    out.push_back({ComponentId::X4, static_cast<int>(out.size()), {{"t", t}, {"u", u}, {"eta", eta}},
                   x4_vector(t, u, eta)});
  return out;
}

ComponentSample sample_x51(Complex t) {
  const Complex s = t * t - 2.0;
  return {ComponentId::X51, 0, {{"t", t}}, make_vector(t, {1.0, s, 1.0, s, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0})};
}

ComponentSample sample_x61(Complex t) {
  const Complex t2 = t * t;
  const Complex Q = 4.0 * t2 - 2.0 - t2 * t2;
  const Complex P = 3.0 * t - t2 * t;
  return {ComponentId::X61, 0, {{"t", t}}, make_vector(t, {1.0, 1.0, 1.0, 1.0, 1.0, Q, 0.0, P, 0.0, P})};
}

}  // namespace

TraceVector x4_vector(Complex t, Complex u, Complex eta) noexcept {
  const Complex d = 2.0 * u + 2.0 - t * t;
  return make_vector(t, {u, u, u, u, d, d, eta, eta, eta, eta});
}

bool admissible(ComponentId id, Complex t, double m) noexcept {
  const Complex t2 = t * t;
  switch (id) {
    case ComponentId::X11:
    case ComponentId::X12:
    case ComponentId::X21:
    case ComponentId::X22: return alpha_family_admissible(t, m);
    case ComponentId::X3: return !near(t2, 5.0, m);
    case ComponentId::X4:
    case ComponentId::X51:
    case ComponentId::X52: return !near(t2, 3.0, m);
    case ComponentId::X61:
    case ComponentId::X62: return !near(t2, 3.0, m) && std::abs(t) >= m;
  }
  return false;
}

std::vector<ComponentSample> sample_component(ComponentId id, Complex t) {
  require_finite(t, "t");
  if (!admissible(id, t))
    throw Error(Errc::ExcludedParameter, std::string("t is excluded for ") + to_string(id));
  if (is_rotated(id)) {
    std::vector<ComponentSample> out = sample_component(rotation_partner(id), t);
    for (ComponentSample& s : out) {
      s.id = id;
      s.vector = rotate(s.vector);
    }
    return out;
  }
  switch (id) {
    case ComponentId::X11: return sample_x11(t);
    case ComponentId::X21: return sample_x21(t);
    case ComponentId::X3: return sample_x3(t);
    case ComponentId::X4: return sample_x4(t);
    case ComponentId::X51: return {sample_x51(t)};
    case ComponentId::X61: return {sample_x61(t)};
    default: break;
  }
  throw Error(Errc::InvalidArgument, "unknown component");
}

namespace {

using T = Tracked;

void eq(std::vector<NamedResidual>& out, const char* name, const T& lhs, const T& rhs) {
  out.push_back({name, (lhs - rhs).residual()});
}

std::vector<NamedResidual> residuals_x11(const TraceVector& v) {
  const T t = v.t, a = t * t - 1.0;
  const T x = T(v.t12) - 1.0;
  const T mu = T(v.t12) + v.t23 - 2.0;
  std::vector<NamedResidual> r;
  eq(r, "t34=t23", v.t34, v.t23);
  eq(r, "t14=t12", v.t14, v.t12);
  eq(r, "t13=1", v.t13, 1.0);
  eq(r, "mu-quadratic", mu * mu + (a * a - a * 4.0) * mu + a * a * 4.0 - a * a * a, 0.0);
  eq(r, "x-quadratic", a * x * x - a * mu * x + mu * 2.0 + a * a - a * 4.0, 0.0);
  eq(r, "t24", a * v.t24, (a * a * a - a * a * 3.0 + 4.0) * mu - a * a * a * a + a * a * a * 4.0 - a * 7.0);
  eq(r, "t123", a * v.t123, t * mu);
  eq(r, "t134", a * v.t134, t * mu);
  eq(r, "t124", a * v.t124, t * ((a * a - a * 3.0 + 1.0) * mu - a * a * a + a * a * 4.0 - a * 2.0 + mu * x));
  eq(r, "t234", a * v.t234, t * ((a + 1.0) * mu - a * 2.0 - mu * x));
  return r;
}

std::vector<NamedResidual> residuals_x21(const TraceVector& v) {
  const T t = v.t, a = t * t - 1.0;
  const T z = T(v.t23) - 1.0;
  const T g = T(v.t12) - a + 1.0;
  std::vector<NamedResidual> r;
  eq(r, "t14=t23", v.t14, v.t23);
  eq(r, "t13=1", v.t13, 1.0);
  eq(r, "t24=1", v.t24, 1.0);
  eq(r, "z-quadratic", z * z - a * z + a, 0.0);
  eq(r, "gamma-quadratic", g * g + ((a - 2.0) * z * z - z * 2.0) * g + z * z, 0.0);
  eq(r, "t34", g * (T(v.t34) - a + 1.0), z * z);
  eq(r, "t123", a * v.t123, a * t + t * z * g);
  eq(r, "t124=t123", v.t124, v.t123);
  eq(r, "t134", a * g * v.t134, a * g * t + t * z * z * z);
  eq(r, "t234=t134", v.t234, v.t134);
  return r;
}

std::vector<NamedResidual> residuals_x3(const TraceVector& v) {
  const T t = v.t, u = v.t12;
  const T w = t * u - t;
  std::vector<NamedResidual> r;
  eq(r, "t23=u", v.t23, u);
  eq(r, "t34=u", v.t34, u);
  eq(r, "t14=u", v.t14, u);
  eq(r, "t13", v.t13, t * t - 2.0);
  eq(r, "t24", v.t24, t * t - 2.0);
  eq(r, "u-quadratic", u * u - (t * t + 1.0) * u + t * t * 2.0 - 1.0, 0.0);
  eq(r, "t123", v.t123, w);
  eq(r, "t124", v.t124, w);
  eq(r, "t134", v.t134, w);
  eq(r, "t234", v.t234, w);
  return r;
}

std::vector<NamedResidual> residuals_x4(const TraceVector& v) {
  const T t = v.t, u = v.t12, eta = v.t123;
  const T t2 = t * t;
  std::vector<NamedResidual> r;
  eq(r, "t23=u", v.t23, u);
  eq(r, "t34=u", v.t34, u);
  eq(r, "t14=u", v.t14, u);
  eq(r, "t13", v.t13, u * 2.0 + 2.0 - t2);
  eq(r, "t24=t13", v.t24, v.t13);
  eq(r, "t124=eta", v.t124, eta);
  eq(r, "t134=eta", v.t134, eta);
  eq(r, "t234=eta", v.t234, eta);
  eq(r, "t*eta", t * eta, u * u + u - t2 + 1.0);
  eq(r, "eta-quadratic",
     eta * eta + t * (t2 + 4.0 - u * 2.0) * eta - t2 * u * 5.0 + t2 * t2 + t2 * 4.0 - 6.0, 0.0);
  return r;
}

std::vector<NamedResidual> residuals_x51(const TraceVector& v) {
  const T t = v.t;
  std::vector<NamedResidual> r;
  eq(r, "t12=1", v.t12, 1.0);
  eq(r, "t23", v.t23, t * t - 2.0);
  eq(r, "t34=1", v.t34, 1.0);
  eq(r, "t14", v.t14, t * t - 2.0);
  eq(r, "t13=1", v.t13, 1.0);
  eq(r, "t24=1", v.t24, 1.0);
  eq(r, "t123=0", v.t123, 0.0);
  eq(r, "t124=0", v.t124, 0.0);
  eq(r, "t134=0", v.t134, 0.0);
  eq(r, "t234=0", v.t234, 0.0);
  return r;
}

std::vector<NamedResidual> residuals_x61(const TraceVector& v) {
  const T t = v.t, t2 = t * t;
  std::vector<NamedResidual> r;
  eq(r, "t12=1", v.t12, 1.0);
  eq(r, "t23=1", v.t23, 1.0);
  eq(r, "t34=1", v.t34, 1.0);
  eq(r, "t14=1", v.t14, 1.0);
  eq(r, "t13=1", v.t13, 1.0);
  eq(r, "t24", v.t24, t2 * 4.0 - 2.0 - t2 * t2);
  eq(r, "t123=0", v.t123, 0.0);
  eq(r, "t124", v.t124, t * 3.0 - t2 * t);
  eq(r, "t134=0", v.t134, 0.0);
  eq(r, "t234", v.t234, t * 3.0 - t2 * t);
  return r;
}

}  // namespace

std::vector<NamedResidual> membership_residual(ComponentId id, const TraceVector& v) {
  if (is_rotated(id)) return membership_residual(rotation_partner(id), rotate(v, 3));
  switch (id) {
    case ComponentId::X11: return residuals_x11(v);
    case ComponentId::X21: return residuals_x21(v);
    case ComponentId::X3: return residuals_x3(v);
    case ComponentId::X4: return residuals_x4(v);
    case ComponentId::X51: return residuals_x51(v);
    case ComponentId::X61: return residuals_x61(v);
    default: break;
  }
  return {};
}

double membership_max(ComponentId id, const TraceVector& v) {
  double m = 0.0;
  for (const NamedResidual& r : membership_residual(id, v)) m = std::max(m, r.value.normalized());
  return m;
}

std::optional<std::string> exclusion_violation(ComponentId id, const TraceVector& w, double m) {
  const TraceVector v = is_rotated(id) ? rotate(w, 3) : w;
  const ComponentId base = is_rotated(id) ? rotation_partner(id) : id;
  const Complex t2 = v.t * v.t;
  const Complex a = t2 - 1.0;
  switch (base) {
    case ComponentId::X11:
    case ComponentId::X21: {
      for (double bad : {0.0, 2.0, 4.0})
        if (near(a, bad, m)) return "alpha=" + std::to_string(static_cast<int>(bad));
      const Complex aux = base == ComponentId::X11 ? v.t12 + v.t23 - 2.0 : v.t23 - 1.0;
      const double aux_bad = base == ComponentId::X11 ? 2.0 * kSqrt2 : kSqrt2;
      for (double e : {1.0, -1.0})
        if (near(a, 2.0 + 2.0 * e * kSqrt2, m) && near(aux, e * aux_bad, m))
          return base == ComponentId::X11 ? "(alpha,mu)=(2+2e*sqrt2,2e*sqrt2)" : "(alpha,z)=(2+2e*sqrt2,e*sqrt2)";
      return std::nullopt;
    }
    case ComponentId::X3:
      if (near(t2, 5.0, m)) return "t^2=5";
      return std::nullopt;
    case ComponentId::X4:
      if (near(v.t12, 1.0, m)) return "u=1";
      return std::nullopt;
    default:
      if (near(t2, 3.0, m)) return "t^2=3";
      return std::nullopt;
  }
}

CensusReport enumerate_parabolic() {
  CensusReport rep;
  for (std::size_t k = 0; k < kAllComponents.size(); ++k) {
    std::vector<ComponentSample> kept;
    for (ComponentSample& s : sample_component(kAllComponents[k], 2.0)) {
      const bool dup = std::any_of(kept.begin(), kept.end(), [&](const ComponentSample& o) {
        return max_deviation(o.vector, s.vector) <= 1e-8;
      });
      if (!dup) kept.push_back(std::move(s));
    }
    rep.counts[k] = static_cast<int>(kept.size());
    rep.total += rep.counts[k];
    for (ComponentSample& s : kept) rep.samples.push_back(std::move(s));
  }
  return rep;
}

PolyLE4 excellent_quartic(Complex t) {
  const Complex t2 = t * t, t4 = t2 * t2;
  return PolyLE4({1.0, 2.0 - 2.0 * t2, t4 + 3.0, 2.0 - 2.0 * t4, 2.0 * t4 - 4.0 * t2 + 1.0});
}

std::vector<SpecialPoint> special_points() {
  std::vector<SpecialPoint> out;
  auto add = [&](std::string label, Complex t, Complex u, Complex eta) {
    out.push_back({std::move(label), t, u, eta, x4_vector(t, u, eta)});
  };
  auto add_with_eta = [&](const std::string& label, Complex t, Complex u) {
    add(label, t, u, (u * u + u - t * t + 1.0) / t);
  };
  const Complex I(0.0, 1.0);
  const double r2 = kSqrt2, r3 = std::sqrt(3.0), r5 = std::sqrt(5.0), r6 = std::sqrt(6.0);

  add("limit of hyperbolicity", 1.0 - r2, 1.0 - r2, -r2);

  for (double e : {1.0, -1.0}) {
    const Complex t = principal_sqrt(3.0 + 2.0 * e * r2);
    add(e > 0 ? "t^2=3+2sqrt2" : "t^2=3-2sqrt2", t, 1.0 + e * r2, (2.0 + e * r2) / t);
  }

  for (double e : {1.0, -1.0})
    for (double e2 : {1.0, -1.0}) add("t=0", 0.0, Complex(-0.5, 0.5 * e * r3), e2 * r6);

  for (Complex u : {Complex(std::sqrt(r5 - 2.0)), Complex(-std::sqrt(r5 - 2.0)),
                    I * std::sqrt(r5 + 2.0), -I * std::sqrt(r5 + 2.0)})
    add_with_eta("t^2=1", 1.0, u);

  for (double e : {1.0, -1.0}) add_with_eta("t^2=3", r3, Complex(1.0, e * r6));

  for (Complex u : {Complex(2.0 + std::sqrt(r5 - 2.0)), Complex(2.0 - std::sqrt(r5 - 2.0)),
                    2.0 + I * std::sqrt(r5 + 2.0), 2.0 - I * std::sqrt(r5 + 2.0)})
    add_with_eta("t^2=5", r5, u);

  for (double e : {1.0, -1.0}) {
    const double t2 = 3.0 + e * r5;
    add_with_eta(e > 0 ? "t^2=3+sqrt5" : "t^2=3-sqrt5", std::sqrt(t2), 0.5 * t2);
  }
  return out;
}

}  // namespace charvar
