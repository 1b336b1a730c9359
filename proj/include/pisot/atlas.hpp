#pragma once

// Coefficient regions of small-degree Pisot numbers.

#include "pisot/bounds.hpp"
#include "pisot/int_poly.hpp"
#include "pisot/pisot.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace pisot {

using CoeffTuple = IntPoly;

/// Closed-form membership for degree 2: a2 > 0, a2 < a1 + 1, or a2 < 0, a2 > 1 - a1.
bool lambda2_member(std::int64_t a1, std::int64_t a2);
/// All members with a1_lo <= a1 <= a1_hi, ordered by (a1, a2).
std::vector<std::array<std::int64_t, 2>> enumerate_lambda2(std::int64_t a1_lo, std::int64_t a1_hi);

/// The printed three-inequality description of the degree-3 region, taken literally.
bool lambda3_literal(std::int64_t a1, std::int64_t a2, std::int64_t a3);

struct Lambda3Discrepancy {
  std::array<std::int64_t, 3> tuple;
  bool literal;  ///< value of lambda3_literal
  bool pisot;    ///< value of is_pisot
};

struct Lambda3Result {
  std::vector<std::array<std::int64_t, 3>> members;  ///< ordered by (a2, a3)
  std::vector<Lambda3Discrepancy> discrepancies;
};

/// Pisot tuples (a1, a2, a3) for fixed a1 within |a2| < 2 a1 + 5,
/// |a3| < a1 + 2, a3 != 0, decided by is_pisot; empty for a1 < 0.
Lambda3Result enumerate_lambda3(std::int64_t a1);

enum class Gamma { Gamma1, Gamma2, Gamma3 };
std::string to_string(Gamma g);

struct GammaClass {
  Gamma tag;
  Rat attained_value;
};

/// Gamma1: alternating-sum branch, Gamma2: sum branch, Gamma3: period-4
/// branch; ties go to the lowest index. Requires a Pisot cubic with even sum.
GammaClass gamma_class(const CoeffTuple& t);

enum class Exceptional { zero_bound, one_fifth, four_thirteenths, generic };
std::string to_string(Exceptional e);

/// Classification of a degree <= 4 tuple (padded with zeros) with even sum
/// by the equality systems on S = sum, T = a1 - a2 + a3 - a4,
/// A = a1 - a3, B = a2 - a4 + 1.
Exceptional exceptional_degree4(const CoeffTuple& t);

/// True when S in {0, 2} and T in {-2, 0}: the only tuples where the
/// period-1 and period-2 bounds both stay below 1/3.
bool in_small_sum_chain(const CoeffTuple& t);

/// Pisot tuples of exact degree d (a_d != 0) with a1 in [a1_lo, a1_hi],
/// inside the box implied by the root bounds, in lexicographic order.
std::vector<CoeffTuple> enumerate_pisot(int degree, std::int64_t a1_lo, std::int64_t a1_hi);

} // namespace pisot
