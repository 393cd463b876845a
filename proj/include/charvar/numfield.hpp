#pragma once

#include <span>
#include <utility>
#include <vector>

#include "charvar/core.hpp"

namespace charvar {

/// Polynomial of degree 1..4 with complex coefficients, stored leading
/// coefficient first: {c_n, ..., c_1, c_0}.
class PolyLE4 {
 public:
  static constexpr double kLeadingTol = 1e-14;

  explicit PolyLE4(std::vector<Complex> coeffs);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
  Complex leading() const noexcept { return coeffs_.front(); }

  Complex operator()(Complex z) const noexcept;
  Complex derivative(Complex z) const noexcept;

  /// Divides through by the leading coefficient.
  PolyLE4 monic() const;
  /// Largest coefficient magnitude.
  double max_coeff() const noexcept;
  /// |p(z)| / (1 + max|coeff|), computed on the monic normalization.
  double normalized_residual(Complex z) const;

 private:
  std::vector<Complex> coeffs_;
};

/// Roots of a z^2 + b z + c, larger-magnitude root first. The second root is
/// recovered as c / (a z1) to avoid cancellation.
std::pair<Complex, Complex> solve_quadratic(Complex a, Complex b, Complex c);

/// All roots with multiplicity. Degree 1 and 2 are closed-form; degrees 3 and 4
/// use Durand-Kerner simultaneous iteration.
std::vector<Complex> solve_poly(const PolyLE4& p);

/// Groups points closer than `tol` and returns one representative per group
/// (the first encountered), preserving input order.
std::vector<Complex> cluster_roots(std::span<const Complex> roots, double tol = 1e-8);

/// Minimum over bijections of the maximum pairwise distance between two
/// multisets of equal size (at most 8 elements). Returns +inf on size mismatch.
double multiset_distance(std::span<const Complex> a, std::span<const Complex> b);

/// Principal square root; exposed so that branch choices are made in one place.
inline Complex principal_sqrt(Complex z) { return std::sqrt(z); }

}  // namespace charvar
