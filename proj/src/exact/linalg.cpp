#include "pisot/linalg.hpp"

#include "pisot/error.hpp"

#include <utility>

namespace pisot {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(const std::vector<RatVec>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidArgument("RatMatrix rows have unequal lengths");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatVec RatMatrix::row(std::size_t r) const {
  return RatVec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatVec operator*(const RatMatrix& a, const RatVec& x) {
  if (x.size() != a.cols()) throw InvalidArgument("dimension mismatch in matrix-vector product");
  RatVec y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Rat s = 0;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(a(i, j)) != 0) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

namespace {

// Reduces [a | rhs] to reduced row echelon form in place. Returns false when
// the square part is singular.
bool gauss_jordan(RatMatrix& a, RatMatrix& rhs) {
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(a(piv, col)) == 0) ++piv;
    if (piv == n) return false;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      for (std::size_t j = 0; j < rhs.cols(); ++j) std::swap(rhs(piv, j), rhs(col, j));
    }
    const Rat inv = 1 / a(col, col);
    for (std::size_t j = col; j < n; ++j) a(col, j) *= inv;
    for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(col, j) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a(r, col)) == 0) continue;
      const Rat f = a(r, col);
      for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
      for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(r, j) -= f * rhs(col, j);
    }
  }
  return true;
}

} // namespace

std::optional<RatVec> solve_linear(const RatMatrix& a, const RatVec& b) {
  if (!a.is_square()) throw InvalidArgument("solve_linear needs a square matrix");
  if (b.size() != a.rows()) throw InvalidArgument("solve_linear: right-hand side has wrong length");
  RatMatrix work = a;
  RatMatrix rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  if (!gauss_jordan(work, rhs)) return std::nullopt;
  RatVec x(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) x[i] = rhs(i, 0);
  return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& a) {
  if (!a.is_square()) throw InvalidArgument("inverse needs a square matrix");
  RatMatrix work = a;
  RatMatrix inv = RatMatrix::identity(a.rows());
  if (!gauss_jordan(work, inv)) return std::nullopt;
  return inv;
}

Rat determinant(const RatMatrix& a) {
  if (!a.is_square()) throw InvalidArgument("determinant needs a square matrix");
  RatMatrix m = a;
  const std::size_t n = m.rows();
  Rat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(m(piv, col)) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(m(r, col)) == 0) continue;
      const Rat f = m(r, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(r, j) -= f * m(col, j);
    }
  }
  return det;
}

// Similarity reduction to upper Hessenberg form followed by the usual
// three-term expansion; O(n^3) field operations.
std::vector<Rat> characteristic_polynomial(const RatMatrix& a) {
  if (!a.is_square()) throw InvalidArgument("characteristic polynomial needs a square matrix");
  const std::size_t n = a.rows();
  RatMatrix h = a;
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && sgn(h(piv, m - 1)) == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(m, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, m));
    }
    const Rat t = h(m, m - 1);
    for (std::size_t i = m + 1; i < n; ++i) {
      if (sgn(h(i, m - 1)) == 0) continue;
      const Rat u = h(i, m - 1) / t;
      for (std::size_t j = 0; j < n; ++j) h(i, j) -= u * h(m, j);
      for (std::size_t r = 0; r < n; ++r) h(r, m) += u * h(r, i);
    }
  }
  // p[k] holds the characteristic polynomial of the leading k x k block.
  std::vector<std::vector<Rat>> p(n + 1);
  p[0] = {Rat(1)};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<Rat> cur(m + 1);
    for (std::size_t k = 0; k < m; ++k) {
      cur[k + 1] += p[m - 1][k];
      cur[k] -= h(m - 1, m - 1) * p[m - 1][k];
    }
    Rat t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t *= h(m - i, m - i - 1);
      if (sgn(t) == 0) break;
      const Rat f = t * h(m - i - 1, m - 1);
      if (sgn(f) == 0) continue;
      for (std::size_t k = 0; k < p[m - i - 1].size(); ++k) cur[k] -= f * p[m - i - 1][k];
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

} // namespace pisot
