#pragma once

#include "gnm/polynomial.hpp"

namespace gnm {

/// [[w11, w12], [w21, w22]] with polynomial entries. `scale` is the expected
/// constant determinant for resolvent matrices (1 for plain products).
struct PolyMatrix2x2 {
  Polynomial w11, w12, w21, w22;
  Rational scale = 1;

  static PolyMatrix2x2 identity();
  [[nodiscard]] Polynomial det() const { return w11 * w22 - w12 * w21; }

  friend PolyMatrix2x2 operator*(const PolyMatrix2x2& a, const PolyMatrix2x2& b);
  friend bool operator==(const PolyMatrix2x2& a, const PolyMatrix2x2& b) {
    return a.w11 == b.w11 && a.w12 == b.w12 && a.w21 == b.w21 && a.w22 == b.w22;
  }
};

}  // namespace gnm
