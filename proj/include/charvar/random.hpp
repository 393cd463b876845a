#pragma once

#include <cstdint>
#include <random>

#include "charvar/mat2.hpp"
#include "charvar/quadruple.hpp"

namespace charvar {

using Rng = std::mt19937_64;

/// Independent stream for item `index` of a run seeded with `seed`.
Rng rng_stream(std::uint64_t seed, std::uint64_t index);

/// Uniform in the disk |z| <= r.
Complex random_complex(Rng& rng, double r);
/// Modulus uniform in [lo, hi], argument uniform.
Complex random_annulus(Rng& rng, double lo, double hi);
/// Random element of G(t) with entries of moderate size.
Mat2 random_gt(Rng& rng, Complex t);
/// Random element of SL(2,C) with entries of modulus <= 2.
Mat2 random_sl2(Rng& rng);
Quadruple random_quadruple(Rng& rng, Complex t);

}  // namespace charvar
