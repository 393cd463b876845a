#include "charvar/batch.hpp"
#include "charvar/catalog.hpp"
#include "charvar/mat2.hpp"
#include "charvar/reconstruct.hpp"
#include "helpers.hpp"

using namespace charvar;
using charvar::test::close;

namespace {

const Mat2 E1 = TracelessBasis::e1, E2 = TracelessBasis::e2, E3 = TracelessBasis::e3;

TracelessMat2 random_traceless(Rng& rng) {
  const Complex a = random_complex(rng, 2.0);
  return TracelessMat2(Mat2{a, random_complex(rng, 2.0), random_complex(rng, 2.0), -a});
}

// det of the 4x4 matrix whose columns are the entries of e, x, y, xy.
Complex span_det(const Mat2& x, const Mat2& y) {
  const Mat2 e = Mat2::identity(), xy = x * y;
  const std::array<Mat2, 4> ms{e, x, y, xy};
  Complex m[4][4];
  for (int c = 0; c < 4; ++c) {
    m[0][c] = ms[c].a;
    m[1][c] = ms[c].b;
    m[2][c] = ms[c].c;
    m[3][c] = ms[c].d;
  }
  Complex det = 1.0;
  for (int i = 0; i < 4; ++i) {
    int p = i;
    for (int r = i + 1; r < 4; ++r)
      if (std::abs(m[r][i]) > std::abs(m[p][i])) p = r;
    if (std::abs(m[p][i]) == 0.0) return 0.0;
    if (p != i) {
      for (int c = 0; c < 4; ++c) std::swap(m[i][c], m[p][c]);
      det = -det;
    }
    det *= m[i][i];
    for (int r = i + 1; r < 4; ++r) {
      const Complex f = m[r][i] / m[i][i];
      for (int c = i; c < 4; ++c) m[r][c] -= f * m[i][c];
    }
  }
  return det;
}

}  // namespace

TEST_SUITE("mat2") {
  TEST_CASE("inverse") {
    CHECK(inverse(Mat2::identity()) == Mat2::identity());
    const Mat2 x{1.0, 1.0, 0.0, 1.0};
    CHECK(close(inverse(x), Mat2{1.0, -1.0, 0.0, 1.0}, 1e-15));
    CHECK_THROWS_AS(inverse(Mat2{1.0, 2.0, 2.0, 4.0}), Error);
    Rng rng = rng_stream(21, 0);
    for (int k = 0; k < 200; ++k) {
      const Complex t = random_complex(rng, 3.0);
      const Mat2 g = random_gt(rng, t);
      CHECK(close(g * inverse(g), Mat2::identity(), 1e-12 * g.norm() * g.norm()));
      CHECK(close(inverse(g), Mat2::scalar(t) - g, 1e-12 * g.norm() * g.norm()));
      CHECK(close(g + g.adjugate(), Mat2::scalar(t), 1e-14 * g.norm()));
    }
  }

  TEST_CASE("traceless part") {
    CHECK(traceless_part(Mat2::identity()).mat() == Mat2::zero());
    CHECK(traceless_part(Mat2{2.0, 1.0, 0.0, 0.0}).mat() == Mat2{1.0, 1.0, 0.0, -1.0});
    CHECK_THROWS_AS(TracelessMat2(Mat2{1.0, 0.0, 0.0, 0.0}), Error);
    Rng rng = rng_stream(22, 0);
    for (int k = 0; k < 100; ++k) {
      const Mat2 x = random_gt(rng, random_complex(rng, 3.0));
      const Mat2 u = traceless_part(x);
      CHECK(std::abs(u.trace()) <= 1e-12);
      CHECK(close(u + Mat2::scalar(0.5 * x.trace()), x, 1e-15 * std::max(1.0, x.norm())));
      const Complex s0 = 0.5 * x.trace() * x.trace() - 2.0;
      CHECK(close(u * u, Mat2::scalar(0.5 * s0), 1e-12 * std::max(1.0, x.norm() * x.norm())));
    }
  }

  TEST_CASE("Cayley-Hamilton and xyx expansion") {
    CHECK(ch_residual(GtElement(Mat2::identity())).norm() == 0.0);
    CHECK(ch_residual(GtElement(Mat2{0.0, 1.0, -1.0, 0.0})).norm() == 0.0);
    CHECK(xyx_expand(GtElement(Mat2::identity()), GtElement(Mat2::identity())).norm() == 0.0);
    CHECK_THROWS_AS(GtElement(Mat2{2.0, 0.0, 0.0, 2.0}), Error);
    Rng rng = rng_stream(23, 0);
    for (int k = 0; k < 300; ++k) {
      const Complex t = random_complex(rng, 3.0);
      const GtElement x(random_gt(rng, t)), y(random_gt(rng, t));
      const double n = std::max(x.mat().norm(), y.mat().norm());
      CHECK(ch_residual(x).norm() <= 1e-10 * (1 + n * n));
      CHECK(xyx_expand(x, y).norm() <= 1e-10 * (1 + n * n * n));
      CHECK(xyx_expand(x, x).norm() <= 1e-10 * (1 + n * n * n));
    }
  }

  TEST_CASE("anticommutator") {
    CHECK(anticommutator_residual(TracelessMat2(E1), TracelessMat2(E2)).norm() == 0.0);
    CHECK(anticommutator_residual(TracelessMat2(E3), TracelessMat2(E3)).norm() == 0.0);
    Rng rng = rng_stream(24, 0);
    for (int k = 0; k < 200; ++k) {
      const TracelessMat2 u = random_traceless(rng), v = random_traceless(rng);
      CHECK(anticommutator_residual(u, v).norm() <= 1e-12 * 16);
    }
  }

  TEST_CASE("triple trace: basis value, alternation, dependence") {
    const TracelessMat2 e1(E1), e2(E2), e3(E3);
    CHECK(triple_trace(e1, e2, e3) == Complex(-2.0));
    CHECK(triple_trace(e1, e1, e2) == Complex(0.0));
    Rng rng = rng_stream(25, 0);
    for (int k = 0; k < 200; ++k) {
      const TracelessMat2 u = random_traceless(rng), v = random_traceless(rng), w = random_traceless(rng);
      const Complex a = triple_trace(u, v, w);
      CHECK(close(triple_trace(v, u, w), -a, 1e-12 * std::max(1.0, std::abs(a))));
      CHECK(close(triple_trace(u, w, v), -a, 1e-12 * std::max(1.0, std::abs(a))));
      CHECK(close(triple_trace(w, v, u), -a, 1e-12 * std::max(1.0, std::abs(a))));
      const Complex c = random_complex(rng, 2.0);
      const TracelessMat2 lin(c * u.mat() + v.mat());
      CHECK(close(triple_trace(lin, w, e1), c * triple_trace(u, w, e1) + triple_trace(v, w, e1), 1e-10));
      const TracelessMat2 dep(2.0 * u.mat() + 3.0 * v.mat());
      CHECK(std::abs(triple_trace(u, v, dep)) <= 1e-10);
    }
  }

  TEST_CASE("common eigenvector") {
    const std::array<Mat2, 3> upper{Mat2{1.0, 2.0, 0.0, 3.0}, Mat2{4.0, 5.0, 0.0, 6.0}, Mat2{7.0, 0.0, 0.0, 1.0}};
    CHECK(has_common_eigenvector(upper));
    const std::array<Mat2, 2> pauli{E1, E2};
    CHECK_FALSE(has_common_eigenvector(pauli));
    const std::array<Mat2, 2> scalars{Mat2::scalar(2.0), Mat2::identity()};
    CHECK(has_common_eigenvector(scalars));
    // t = 0 pair with tr(xy) = 2.
    Rng rng = rng_stream(26, 0);
    Complex t = 0.0;
    auto [x, y] = random_reducible_pair(rng, t);
    const std::array<Mat2, 2> pair{x, y};
    CHECK(has_common_eigenvector(pair));
  }

  TEST_CASE("pair trace criterion agrees with the eigenvector test") {
    Rng rng = rng_stream(27, 0);
    for (int k = 0; k < 500; ++k) {
      const Complex t = random_complex(rng, 3.0);
      const Mat2 x = random_gt(rng, t), y = random_gt(rng, t);
      const std::array<Mat2, 2> pair{x, y};
      const bool irr = is_irreducible_pair(GtElement(x), GtElement(y));
      CHECK(irr == !has_common_eigenvector(pair));
      if (irr) {
        const double sc = std::max({1.0, x.norm(), y.norm()});
        CHECK(std::abs(span_det(x, y)) > 1e-10 * sc * sc * sc * sc);
      }
    }
    for (int k = 0; k < 100; ++k) {
      const Complex t = random_complex(rng, 3.0);
      const auto [x, y] = random_reducible_pair(rng, t);
      const std::array<Mat2, 2> pair{x, y};
      CHECK_FALSE(is_irreducible_pair(GtElement(x), GtElement(y)));
      CHECK(has_common_eigenvector(pair));
    }
    const Mat2 x = random_gt(rng, 0.7);
    CHECK_FALSE(is_irreducible_pair(GtElement(x), GtElement(x)));
    const auto [p, q] = realize_pair(2.0, 1.0);
    CHECK(is_irreducible_pair(GtElement(p), GtElement(q)));
  }

  TEST_CASE("common-conjugate triples") {
    const auto [a, b] = realize_pair(Complex(0.7, 0.2), Complex(-0.4, 1.1));
    const Lemma25Report eq = lemma25_apply(GtElement(a), GtElement(b), GtElement(a));
    CHECK(eq.conclusion == Lemma25Conclusion::Equal);
    CHECK(eq.epsilon == 1);
    CHECK(eq.holds);

    // tr(x^{-1}) = tr(x) in SL(2,C), so x1^{-1} lies in the same G(t).
    const auto [c, d] = realize_pair(1.0, Complex(0.3, -0.8));
    const Lemma25Report inv = lemma25_apply(GtElement(c), GtElement(d), GtElement(inverse(c)));
    CHECK(inv.conclusion == Lemma25Conclusion::Inverse);
    CHECK(inv.epsilon == -1);
    CHECK(inv.holds);

    const auto x3 = sample_component(ComponentId::X3, 3.0);
    for (const ComponentSample& s : x3) {
      const Quadruple q = realize_character(s.vector).quadruple;
      const Lemma25Report r = lemma25_apply(GtElement(q.x(1)), GtElement(q.x(2)), GtElement(q.x(3)));
      CHECK(r.holds);
      CHECK(r.conclusion == Lemma25Conclusion::Equal);
      CHECK(r.commutator <= 1e-9);
    }

    // Independent traceless parts: s123 != 0.
    const auto [e, f] = realize_pair(1.5, 0.2);
    const Mat2 h = realize_pair(1.5, 0.9).second;
    CHECK_THROWS_AS(lemma25_apply(GtElement(e), GtElement(f), GtElement(h)), Error);
  }
}
