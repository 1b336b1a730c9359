#pragma once

#include "pisot/rat.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace pisot {

/// Dense rectangular matrix of exact rationals, stored row-major.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  /// Throws InvalidArgument when the rows have unequal lengths.
  explicit RatMatrix(const std::vector<RatVec>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVec row(std::size_t r) const;
  bool is_square() const noexcept { return rows_ == cols_; }

  static RatMatrix identity(std::size_t n);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

RatVec operator*(const RatMatrix& a, const RatVec& x);

/// Exact solution of A x = b by Gaussian elimination (first nonzero pivot).
/// Returns nullopt when A is singular; there is no least-squares fallback.
std::optional<RatVec> solve_linear(const RatMatrix& a, const RatVec& b);

/// Inverse of a square matrix, nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& a);

Rat determinant(const RatMatrix& a);

/// Coefficients c_0..c_n of det(lambda I - A), lowest degree first.
std::vector<Rat> characteristic_polynomial(const RatMatrix& a);

} // namespace pisot
