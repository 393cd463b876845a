#include <algorithm>

#include "charvar/numfield.hpp"
#include "helpers.hpp"

using namespace charvar;
using charvar::test::close;

TEST_SUITE("numfield") {
  TEST_CASE("quadratic: X3 census values at t = 2") {
    const auto [z1, z2] = solve_quadratic(1.0, -5.0, 7.0);
    const Complex r1(2.5, std::sqrt(3.0) / 2), r2 = std::conj(r1);
    CHECK(((close(z1, r1, 1e-14) && close(z2, r2, 1e-14)) || (close(z1, r2, 1e-14) && close(z2, r1, 1e-14))));
  }

  TEST_CASE("quadratic: factorable and double root") {
    const auto [a, b] = solve_quadratic(1.0, -1.0, 0.0);
    CHECK(std::min(std::abs(a), std::abs(b)) < 1e-15);
    CHECK(close(std::abs(a) > std::abs(b) ? a : b, 1.0, 1e-15));
    const auto [c, d] = solve_quadratic(1.0, -4.0, 4.0);
    CHECK(close(c, 2.0, 1e-7));
    CHECK(close(d, 2.0, 1e-7));
  }

  TEST_CASE("quadratic: larger root first, residual bound") {
    Rng rng = rng_stream(11, 0);
    for (int k = 0; k < 200; ++k) {
      const Complex a = random_annulus(rng, 0.1, 3), b = random_complex(rng, 50), c = random_complex(rng, 50);
      const auto [z1, z2] = solve_quadratic(a, b, c);
      CHECK(std::abs(z1) >= std::abs(z2) * (1 - 1e-12));
      const double bound = 1e-10 * std::max({1.0, std::abs(b), std::abs(c)});
      CHECK(std::abs(a * z1 * z1 + b * z1 + c) <= bound * std::max(1.0, std::abs(z1)));
      CHECK(std::abs(a * z2 * z2 + b * z2 + c) <= bound * std::max(1.0, std::abs(z2)));
    }
  }

  TEST_CASE("degenerate leading coefficient") {
    CHECK_THROWS_AS(solve_quadratic(1e-15, 1.0, 1.0), Error);
    CHECK_THROWS_AS(PolyLE4({0.0, 1.0, 2.0}), Error);
    CHECK_THROWS_AS(PolyLE4({1.0}), Error);
    CHECK_THROWS_AS(PolyLE4({1.0, 0.0, 0.0, 0.0, 0.0, 1.0}), Error);
  }

  TEST_CASE("parabolic X4 quartic") {
    const auto roots = solve_poly(PolyLE4({1.0, -6.0, 19.0, -30.0, 17.0}));
    const double r2 = std::sqrt(2.0);
    const std::vector<Complex> expected{
        (3.0 + std::sqrt(8 * r2 - 11)) / 2, (3.0 - std::sqrt(8 * r2 - 11)) / 2,
        Complex(1.5, std::sqrt(8 * r2 + 11) / 2), Complex(1.5, -std::sqrt(8 * r2 + 11) / 2)};
    CHECK(multiset_distance(roots, expected) <= 1e-12);
  }

  TEST_CASE("repeated roots") {
    const auto roots = solve_poly(PolyLE4({1.0, 0.0, -2.0, 0.0, 1.0}));
    CHECK(multiset_distance(roots, std::vector<Complex>{1.0, 1.0, -1.0, -1.0}) <= 1e-7);
  }

  TEST_CASE("random quartics from sampled roots, scale invariance") {
    Rng rng = rng_stream(12, 0);
    for (int k = 0; k < 200; ++k) {
      std::vector<Complex> r(4);
      for (Complex& z : r) z = random_complex(rng, 3.0);
      // Expand prod (u - r_i), leading first.
      std::vector<Complex> c{1.0};
      for (Complex z : r) {
        std::vector<Complex> n(c.size() + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i) {
          n[i] += c[i];
          n[i + 1] -= z * c[i];
        }
        c = n;
      }
      const PolyLE4 p(c);
      const auto roots = solve_poly(p);
      CHECK(multiset_distance(roots, r) <= 1e-8);
      for (Complex z : roots) CHECK(p.normalized_residual(z) <= 1e-9);

      const Complex s = random_annulus(rng, 0.5, 5.0);
      std::vector<Complex> cs = c;
      for (Complex& z : cs) z *= s;
      CHECK(multiset_distance(solve_poly(PolyLE4(cs)), roots) <= 1e-8);
    }
  }

  TEST_CASE("low degrees and clustering") {
    CHECK(close(solve_poly(PolyLE4({2.0, -4.0}))[0], 2.0, 1e-15));
    const auto cubic = solve_poly(PolyLE4({1.0, -6.0, 11.0, -6.0}));
    CHECK(multiset_distance(cubic, std::vector<Complex>{1.0, 2.0, 3.0}) <= 1e-10);
    const std::vector<Complex> pts{1.0, 1.0 + 1e-10, 2.0, Complex(2.0, 1e-9)};
    CHECK(cluster_roots(pts).size() == 2);
    CHECK(std::isinf(multiset_distance(pts, cubic)));
  }

  TEST_CASE("non-finite input rejected") {
    CHECK_THROWS_AS(require_finite(Complex(NAN, 0), "x"), Error);
    CHECK_THROWS_AS(solve_poly(PolyLE4({1.0, Complex(INFINITY, 0), 1.0})), Error);
  }
}
