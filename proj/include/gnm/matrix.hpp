#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gnm/rational.hpp"

namespace gnm {

/// Small dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  [[nodiscard]] bool is_symmetric() const;
  [[nodiscard]] bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Determinant by fraction-free elimination with row pivoting.
Rational determinant(const Matrix& a);

/// Rank by exact row reduction.
std::size_t rank(const Matrix& a);

/// Unique solution of a square nonsingular system, or nullopt when singular.
std::optional<std::vector<Rational>> solve_linear(const Matrix& a, const std::vector<Rational>& b);

}  // namespace gnm
