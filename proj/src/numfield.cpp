#include "charvar/numfield.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace charvar {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NonFinite: return "NonFinite";
    case Errc::DegenerateLeadingCoefficient: return "DegenerateLeadingCoefficient";
    case Errc::NonConvergence: return "NonConvergence";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::InconsistentS0: return "InconsistentS0";
    case Errc::TraceMismatch: return "TraceMismatch";
    case Errc::ConstraintViolated: return "ConstraintViolated";
    case Errc::SmallS123: return "SmallS123";
    case Errc::FactorizationFailure: return "FactorizationFailure";
    case Errc::TypeIIViolated: return "TypeIIViolated";
    case Errc::S44Mismatch: return "S44Mismatch";
    case Errc::DegenerateCharacter: return "DegenerateCharacter";
    case Errc::ExcludedParameter: return "ExcludedParameter";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

PolyLE4::PolyLE4(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2 || coeffs_.size() > 5)
    throw Error(Errc::InvalidArgument, "polynomial degree must be between 1 and 4");
  for (Complex c : coeffs_) require_finite(c, "polynomial coefficient");
  if (std::abs(coeffs_.front()) <= kLeadingTol)
    throw Error(Errc::DegenerateLeadingCoefficient, "leading coefficient vanishes");
}

Complex PolyLE4::operator()(Complex z) const noexcept {
  Complex acc = 0.0;
  for (Complex c : coeffs_) acc = acc * z + c;
  return acc;
}

Complex PolyLE4::derivative(Complex z) const noexcept {
  Complex acc = 0.0;
  const int n = degree();
  for (int k = 0; k < n; ++k) acc = acc * z + coeffs_[k] * static_cast<double>(n - k);
  return acc;
}

PolyLE4 PolyLE4::monic() const {
  std::vector<Complex> out(coeffs_);
  const Complex lead = coeffs_.front();
  for (Complex& c : out) c /= lead;
  out.front() = 1.0;
  return PolyLE4(std::move(out));
}

double PolyLE4::max_coeff() const noexcept {
  double m = 0.0;
  for (Complex c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

double PolyLE4::normalized_residual(Complex z) const {
  const PolyLE4 m = monic();
  return std::abs(m(z)) / (1.0 + m.max_coeff());
}

std::pair<Complex, Complex> solve_quadratic(Complex a, Complex b, Complex c) {
  if (std::abs(a) <= PolyLE4::kLeadingTol)
    throw Error(Errc::DegenerateLeadingCoefficient, "quadratic with vanishing leading coefficient");
  Complex sq = principal_sqrt(b * b - 4.0 * a * c);
  // Pick the sign that avoids cancellation in -b -/+ sq.
  if ((std::conj(b) * sq).real() < 0.0) sq = -sq;
  const Complex q = -0.5 * (b + sq);
  if (q == Complex(0.0)) return {Complex(0.0), Complex(0.0)};
  const Complex z1 = q / a;
  const Complex z2 = c / q;
  return {require_finite(z1, "quadratic root"), require_finite(z2, "quadratic root")};
}

namespace {

constexpr double kDkStepTol = 1e-13;
constexpr int kDkMaxIter = 500;
constexpr double kRootResidualTol = 1e-9;
// Fixed rotation of the starting circle; irrational multiple of pi.
constexpr double kDkStartAngle = 0.4;

std::vector<Complex> durand_kerner(const PolyLE4& monic) {
  const int n = monic.degree();
  double radius = 1.0;
  for (int k = 1; k <= n; ++k) radius = std::max(radius, 1.0 + std::abs(monic.coeffs()[k]));
  std::vector<Complex> z(n);
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * M_PI * k / n + kDkStartAngle;
    z[k] = std::polar(radius, angle);
  }
  for (int iter = 0; iter < kDkMaxIter; ++iter) {
    double max_step = 0.0;
    for (int i = 0; i < n; ++i) {
      Complex denom = 1.0;
      for (int j = 0; j < n; ++j)
        if (j != i) denom *= (z[i] - z[j]);
      if (denom == Complex(0.0)) denom = Complex(1e-300, 0.0);
      const Complex step = monic(z[i]) / denom;
      z[i] -= step;
      max_step = std::max(max_step, std::abs(step) / std::max(1.0, std::abs(z[i])));
    }
    if (max_step <= kDkStepTol) break;
  }
  return z;
}

// A few guarded Newton steps; a step is kept only if it lowers |p|.
Complex polish(const PolyLE4& p, Complex z) {
  for (int k = 0; k < 3; ++k) {
    const Complex dp = p.derivative(z);
    if (std::abs(dp) < 1e-300) break;
    const Complex next = z - p(z) / dp;
    if (!is_finite(next) || std::abs(p(next)) >= std::abs(p(z))) break;
    z = next;
  }
  return z;
}

}  // namespace

std::vector<Complex> solve_poly(const PolyLE4& p) {
  const PolyLE4 m = p.monic();
  const auto& c = m.coeffs();
  std::vector<Complex> roots;
  switch (m.degree()) {
    case 1:
      roots = {-c[1]};
      break;
    case 2: {
      auto [z1, z2] = solve_quadratic(c[0], c[1], c[2]);
      roots = {z1, z2};
      break;
    }
    default:
      roots = durand_kerner(m);
      for (Complex& z : roots) z = polish(m, z);
      break;
  }
  for (Complex z : roots) {
    require_finite(z, "polynomial root");
    if (m.normalized_residual(z) > kRootResidualTol)
      throw Error(Errc::NonConvergence, "root residual above tolerance");
  }
  return roots;
}

std::vector<Complex> cluster_roots(std::span<const Complex> roots, double tol) {
  std::vector<Complex> reps;
  for (Complex z : roots) {
    const bool seen = std::any_of(reps.begin(), reps.end(),
                                  [&](Complex r) { return std::abs(r - z) <= tol; });
    if (!seen) reps.push_back(z);
  }
  return reps;
}

double multiset_distance(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size() || a.size() > 8) return std::numeric_limits<double>::infinity();
  std::vector<std::size_t> perm(b.size());
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[perm[i]]));
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return a.empty() ? 0.0 : best;
}

}  // namespace charvar
