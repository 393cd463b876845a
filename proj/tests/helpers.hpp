#pragma once

#include <doctest.h>

#include "charvar/random.hpp"

namespace charvar::test {

inline bool close(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }

inline bool close(const Mat2& a, const Mat2& b, double tol) { return distance(a, b) <= tol; }

}  // namespace charvar::test
