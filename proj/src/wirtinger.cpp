#include "charvar/wirtinger.hpp"

#include <algorithm>
#include <stdexcept>

namespace charvar {

namespace {

std::size_t slot(int i) { return static_cast<std::size_t>(((i - 1) % 4 + 4) % 4); }

}  // namespace

RelatorSet relators(const Quadruple& q) {
  const auto& x = q.matrices();
  RelatorSet out;
  for (int i = 1; i <= 4; ++i) {
    const Mat2& xi = x[slot(i)];
    out.r[slot(i)] = xi * x[slot(i + 1)] * inverse(xi) * x[slot(i - 1)] * xi;
  }
  return out;
}

RepresentationCheck is_representation(const Quadruple& q, double tol) {
  const RelatorSet rs = relators(q);
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) worst = std::max(worst, distance(rs.r[i], rs.r[j]));
  const double residual = worst / std::max(1.0, rs.r[0].norm());
  return {residual <= tol, residual};
}

bool is_irreducible(const Quadruple& q) {
  return !has_common_eigenvector(std::span<const Mat2>(q.matrices()));
}

Lemma31Report lemma31_check(const Quadruple& q, int i) {
  if (!is_representation(q).ok)
    throw Error(Errc::PreconditionViolated, "quadruple is not a representation");
  if (!is_irreducible(q)) throw Error(Errc::PreconditionViolated, "quadruple is reducible");

  const auto& x = q.matrices();
  const double scale = q.scale();
  const Mat2& xi = x[slot(i)];
  const Mat2& xn = x[slot(i + 1)];
  Lemma31Report rep{};
  rep.applicable = distance(xi * xn, xn * xi) <= 1e-9 * scale * scale;
  if (!rep.applicable) return rep;
  rep.adjacent = distance(xi, xn) / scale;
  rep.opposite = distance(x[slot(i - 1)], x[slot(i + 2)]) / scale;
  rep.trace_defect = std::abs((xi * x[slot(i - 1)]).trace() - 1.0);
  rep.holds = rep.adjacent <= 1e-8 && rep.opposite <= 1e-8 && rep.trace_defect <= 1e-8;
  return rep;
}

Mat2 fig8_relator(const Mat2& s1, const Mat2& s2) {
  return s1 * s2 * inverse(s1) * s2 * s1 - s2 * s1 * inverse(s2) * s1 * s2;
}

bool factors_through_fig8(const Quadruple& q) {
  const double scale = q.scale();
  if (distance(q.x(1), q.x(3)) > 1e-8 * scale || distance(q.x(2), q.x(4)) > 1e-8 * scale) return false;
  return fig8_relator(q.x(1), q.x(2)).norm() <= 1e-8 * std::max(1.0, std::pow(scale, 5));
}

}  // namespace charvar
