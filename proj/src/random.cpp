#include "charvar/random.hpp"

#include <numbers>

namespace charvar {

Rng rng_stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

Complex random_annulus(Rng& rng, double lo, double hi) {
  std::uniform_real_distribution<double> mod(lo, hi), arg(0.0, 2.0 * std::numbers::pi);
  return std::polar(mod(rng), arg(rng));
}

Complex random_complex(Rng& rng, double r) {
  std::uniform_real_distribution<double> u(0.0, 1.0), arg(0.0, 2.0 * std::numbers::pi);
  return std::polar(r * std::sqrt(u(rng)), arg(rng));
}

Mat2 random_gt(Rng& rng, Complex t) {
  const Complex a = random_complex(rng, 1.5);
  const Complex b = random_annulus(rng, 0.5, 1.5);
  const Complex d = t - a;
  return Mat2{a, b, (a * d - 1.0) / b, d};
}

Mat2 random_sl2(Rng& rng) {
  for (;;) {
    const Complex a = random_complex(rng, 2.0), b = random_complex(rng, 2.0);
    const Complex c = random_complex(rng, 2.0);
    if (std::abs(a) < 0.5) continue;
    const Complex d = (1.0 + b * c) / a;
    if (std::abs(d) <= 2.0) return Mat2{a, b, c, d};
  }
}

Quadruple random_quadruple(Rng& rng, Complex t) {
  std::array<Mat2, 4> xs;
  for (Mat2& x : xs) x = random_gt(rng, t);
  return Quadruple(xs);
}

}  // namespace charvar
