#pragma once

#include <array>

#include "charvar/mat2.hpp"

namespace charvar {

/// Four elements of G(t) sharing the trace t: the images of the Wirtinger
/// generators x1..x4.
class Quadruple {
 public:
  static constexpr double kTol = 1e-9;

  /// Validates det = 1 and a common trace (relative tolerance 1e-9);
  /// throws TraceMismatch when the traces disagree.
  explicit Quadruple(const std::array<Mat2, 4>& xs);

  /// 1-based access, matching the generator subscripts.
  const Mat2& x(int i) const { return xs_.at(static_cast<std::size_t>(i - 1)); }
  const std::array<Mat2, 4>& matrices() const noexcept { return xs_; }
  Complex t() const noexcept { return t_; }
  double scale() const noexcept;

  /// Simultaneous conjugation g x_i g^{-1}.
  Quadruple conjugated(const Mat2& g) const;

 private:
  std::array<Mat2, 4> xs_;
  Complex t_;
};

}  // namespace charvar
