#include "gnm/poly_matrix.hpp"

namespace gnm {

PolyMatrix2x2 PolyMatrix2x2::identity() {
  return {Polynomial::constant(1), Polynomial(), Polynomial(), Polynomial::constant(1), 1};
}

PolyMatrix2x2 operator*(const PolyMatrix2x2& a, const PolyMatrix2x2& b) {
  return {a.w11 * b.w11 + a.w12 * b.w21, a.w11 * b.w12 + a.w12 * b.w22,
          a.w21 * b.w11 + a.w22 * b.w21, a.w21 * b.w12 + a.w22 * b.w22, a.scale * b.scale};
}

}  // namespace gnm
