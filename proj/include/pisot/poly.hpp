#pragma once

#include "pisot/rat.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace pisot {

/// Dense univariate polynomial with rational coefficients, lowest degree
/// first. The zero polynomial has no coefficients and degree -1.
class QPoly {
public:
  QPoly() = default;
  explicit QPoly(std::vector<Rat> coeffs);
  static QPoly monomial(const Rat& c, std::size_t power);
  /// x - r
  static QPoly linear_root(const Rat& r);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Rat>& coeffs() const noexcept { return c_; }
  /// Coefficient of x^k (zero beyond the degree).
  Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
  const Rat& lead() const { return c_.back(); }

  Rat operator()(const Rat& x) const;
  int sign_at(const Rat& x) const { return sgn((*this)(x)); }
  /// Sign of p(x) as x -> +inf (or -inf).
  int sign_at_infinity(bool negative) const;

  QPoly derivative() const;
  QPoly monic() const;
  /// x^deg p(1/x); defined for p(0) != 0 so the degree is preserved.
  QPoly reciprocal() const;
  /// p(-x)
  QPoly reflect() const;
  /// Multiplies by the positive constant making the coefficients coprime
  /// integers; signs and roots are unchanged.
  QPoly primitive() const;

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const Rat& s, const QPoly& a);
  QPoly operator-() const;
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  std::string to_string(char var = 'x') const;

private:
  void trim();
  std::vector<Rat> c_;
};

/// Euclidean division; throws InvalidArgument on a zero divisor.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
/// Monic gcd (zero when both inputs are zero).
QPoly gcd(const QPoly& a, const QPoly& b);
/// Exact quotient; throws InternalInconsistency when b does not divide a.
QPoly exact_div(const QPoly& a, const QPoly& b);

/// Yun's algorithm: returns (f_1, m_1), (f_2, m_2), ... with p = lead * prod f_i^m_i,
/// every f_i monic, squarefree and of positive degree.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p);

} // namespace pisot
