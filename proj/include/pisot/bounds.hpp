#pragma once

// Closed-form bounds and exact values of L(alpha).
//
// Provenance tags (stable strings, also used in JSON output):
//   odd-sum                  L = 1/2 when sum a_i is odd
//   length-bound             L <= S/(2S+2), S = sum |a_i|
//   period-1/2/4-cycle       closed-form periodic orbits (lower bounds)
//   cycle-search             best cycle from the kernel search
//   alternating-signs        a_i >= 0 for odd i, a_i <= 0 for even i
//   positive-coefficients    all a_i >= 1, d > 1, not the golden ratio
//   degree-1, degree-2       explicit degree 1 and 2 formulas
//   cubic-nonnegative-a3     a_3 >= 0 cubic formulas
//   cubic-negative-a3-case1  a_2 < 0, a_3 < 0 with the curve condition
//   cubic-negative-a3-case2  a_2 > 0, a_3 < 0 with the curve condition
//   maxmin-sup               sup of the torus max-min objective
//   certified-maxmin         sup matched by a periodic orbit or lower bound

#include "pisot/cycles.hpp"
#include "pisot/int_poly.hpp"
#include "pisot/maxmin.hpp"
#include "pisot/rat.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace pisot {

/// S/(2S+2) with S = sum |a_i|; 1/2 for an odd coefficient sum.
Rat upper_theorem1(const RecurrenceSpec& rec);

struct LowerBound {
  Rat value;
  int branch = 0;                 ///< 1, 2 or 3 (period 1, 2, 4); ties to the lowest
  std::array<Rat, 3> branches{};  ///< all three branch values
};

/// Max of the three periodic-orbit bounds. Vanishing denominators give 0.
/// Throws InvalidArgument for an odd coefficient sum.
LowerBound lower_theorem2(const RecurrenceSpec& rec);

struct TaggedValue {
  Rat value;
  std::string source;
  friend bool operator==(const TaggedValue&, const TaggedValue&) = default;
};

/// First applicable exact formula, in the order: odd sum, degree <= 2,
/// cubic formulas, alternating signs, positive coefficients. All applicable
/// formulas are evaluated and must agree (InternalInconsistency otherwise).
std::optional<TaggedValue> exact_formula(const RecurrenceSpec& rec);

/// Every applicable exact formula (for cross-checks).
std::vector<TaggedValue> applicable_formulas(const RecurrenceSpec& rec);

struct BoundOptions {
  std::vector<int> periods{1, 2, 3, 4, 6, 8};
  std::int64_t z_max = 40;
  bool cycle_search = true;
  bool exact = false;         ///< run the max-min search
  SearchOptions search;
};

struct BoundReport {
  IntPoly rec;  ///< after removing trailing zero coefficients
  TaggedValue lower;
  TaggedValue upper;
  std::optional<TaggedValue> exact;
  std::optional<ResidueCycle> lower_cycle;
  std::optional<MaxMinResult> search;
  std::vector<std::string> warnings;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

/// Assembles the report. The caller is responsible for the Pisot check.
/// Throws InternalInconsistency if lower > upper or an exact value falls
/// outside [lower, upper].
BoundReport bound_report(const RecurrenceSpec& rec, const BoundOptions& options = {});

struct PatternRow {
  std::string name;             ///< A1 .. H2
  std::array<int, 4> pattern;   ///< (l_j, l_{j+1}, l_{j+2}, l_{j+3})
  Int r;                        ///< |a1 l1 + a2 l2 + a3 l3 - l0|
  Int r_minus_u;
  Int r_minus_v;
};

/// The 16 sign patterns with U = a1 - a2 + a3 + 1 and V = a1 + a2 + a3 - 1.
std::vector<PatternRow> pattern_table(std::int64_t a1, std::int64_t a2, std::int64_t a3);

} // namespace pisot
