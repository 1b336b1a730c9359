#include "pisot/lp.hpp"

#include "pisot/error.hpp"

#include <algorithm>
#include <limits>

namespace pisot {

namespace {

Rat row_dot(const RatMatrix& a, std::size_t r, const RatVec& z) {
  Rat s = 0;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (sgn(a(r, j)) != 0) s += a(r, j) * z[j];
  return s;
}

} // namespace

LpResult maximize_lp(const RatMatrix& a, const RatVec& b, const RatVec& c,
                     std::vector<std::size_t> basis) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m || c.size() != n || basis.size() != n)
    throw InvalidArgument("maximize_lp: inconsistent dimensions");
  for (auto i : basis)
    if (i >= m) throw InvalidArgument("maximize_lp: basis index out of range");

  std::vector<char> in_basis(m, 0);
  LpResult out;
  for (std::size_t iter = 0;; ++iter) {
    RatMatrix ab(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) ab(i, j) = a(basis[i], j);
    auto inv = inverse(ab);
    if (!inv) throw InvalidArgument("maximize_lp: singular basis");

    RatVec z(n);
    for (std::size_t j = 0; j < n; ++j) {
      Rat s = 0;
      for (std::size_t i = 0; i < n; ++i) s += (*inv)(j, i) * b[basis[i]];
      z[j] = s;
    }
    if (iter == 0) {
      for (std::size_t r = 0; r < m; ++r)
        if (row_dot(a, r, z) > b[r]) throw InvalidArgument("maximize_lp: infeasible starting basis");
    }

    // Multipliers: ab^T lambda = c.
    std::size_t leave = n;
    std::size_t leave_row = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < n; ++i) {
      Rat lambda = 0;
      for (std::size_t j = 0; j < n; ++j) lambda += (*inv)(j, i) * c[j];
      if (sgn(lambda) < 0 && basis[i] < leave_row) {
        leave = i;
        leave_row = basis[i];
      }
    }
    if (leave == n) {
      out.status = LpStatus::optimal;
      out.value = 0;
      for (std::size_t j = 0; j < n; ++j) out.value += c[j] * z[j];
      out.point = std::move(z);
      out.basis = std::move(basis);
      out.iterations = iter;
      return out;
    }

    // Edge direction: keep the other basic rows tight, relax row `leave`.
    RatVec dir(n);
    for (std::size_t j = 0; j < n; ++j) dir[j] = -(*inv)(j, leave);

    std::fill(in_basis.begin(), in_basis.end(), 0);
    for (auto i : basis) in_basis[i] = 1;
    std::size_t enter = m;
    Rat best_step;
    for (std::size_t r = 0; r < m; ++r) {
      if (in_basis[r]) continue;
      Rat rate = row_dot(a, r, dir);
      if (sgn(rate) <= 0) continue;
      Rat step = (b[r] - row_dot(a, r, z)) / rate;
      if (enter == m || step < best_step) {
        enter = r;
        best_step = step;
      }
    }
    if (enter == m) {
      out.status = LpStatus::unbounded;
      out.point = std::move(z);
      out.basis = std::move(basis);
      out.iterations = iter;
      return out;
    }
    basis[leave] = enter;
  }
}

} // namespace pisot
