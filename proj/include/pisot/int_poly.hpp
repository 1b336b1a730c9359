#pragma once

#include "pisot/poly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pisot {

/// Monic integer polynomial P(x) = x^d - a_1 x^{d-1} - ... - a_d, stored by
/// its coefficients a_1..a_d. The same vector drives the recurrence
/// x_n = a_1 x_{n-1} + ... + a_d x_{n-d}.
class IntPoly {
public:
  IntPoly() = default;
  /// Throws InvalidArgument on an empty list.
  explicit IntPoly(std::vector<std::int64_t> a);

  int degree() const noexcept { return static_cast<int>(a_.size()); }
  /// a_i for 1 <= i <= d.
  std::int64_t a(int i) const { return a_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<std::int64_t>& coeffs() const noexcept { return a_; }

  std::int64_t sum() const;
  std::int64_t abs_sum() const;
  /// Ordinary polynomial coefficients, lowest degree first.
  QPoly to_qpoly() const;
  /// Drops trailing zero coefficients, i.e. divides P by the largest power of x.
  IntPoly strip_trailing_zeros() const;
  std::string to_string() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
  std::vector<std::int64_t> a_;
};

/// The recurrence view of the same coefficient list.
using RecurrenceSpec = IntPoly;

} // namespace pisot
