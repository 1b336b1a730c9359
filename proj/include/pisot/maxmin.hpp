#pragma once

// Torus max-min objective F(x) = min_i ||L_i(x)|| over the integer linear
// forms a recurrence induces on a window of d consecutive terms, and two
// exact maximizers:
//   maximize            vertex enumeration over (d+1)-subsets of forms
//   maximize_recurrence branch and bound over the integer parts of the
//                       iterated terms with an exact LP per node
// sup F bounds L(alpha) from above; an orbit reaching sup certifies it.

#include "pisot/cycles.hpp"
#include "pisot/int_poly.hpp"
#include "pisot/rat.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pisot {

struct LinearForm {
  std::vector<std::int64_t> coeffs;
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// Coordinate forms e_1..e_d followed by the forms of x_{n+d}, ...,
/// x_{n+d+K-1} in terms of the window (x_n, ..., x_{n+d-1}). Exact and
/// negated duplicates are dropped (first orientation kept), as are forms
/// that vanish identically.
std::vector<LinearForm> generate_forms(const RecurrenceSpec& rec, int depth);

/// min over forms of ||L(point)||.
Rat eval_F(const std::vector<LinearForm>& forms, const RatVec& point);

struct MaxMinResult {
  Rat sup_value = 0;
  std::vector<RatVec> witnesses;  ///< sorted, distinct, coordinates in [0,1)
  int depth_used = 0;
  bool certified_exact = false;
  std::optional<ResidueCycle> certificate;
  std::string method;
  std::int64_t nodes = 0;
  bool complete = true;  ///< false when a time budget stopped the search

  friend bool operator==(const MaxMinResult&, const MaxMinResult&) = default;
};

/// Exact sup by vertex enumeration. The forms must contain the coordinate
/// forms (InvalidArgument otherwise).
MaxMinResult maximize(const std::vector<LinearForm>& forms);

/// Exact sup of F for generate_forms(rec, depth), searching only regions
/// where F >= floor; floor must not exceed the sup (a proven lower bound
/// for L(alpha) qualifies). A positive time budget in seconds may stop the
/// search early, leaving complete = false.
MaxMinResult maximize_recurrence(const RecurrenceSpec& rec, int depth, const Rat& floor,
                                 double time_budget_s = 0);

/// Runs the orbit of every witness; a cycle whose min distance equals the
/// sup certifies it. Falls back to `known_cycle` when its bound equals the
/// sup.
MaxMinResult certify(const RecurrenceSpec& rec, MaxMinResult result,
                     const std::optional<ResidueCycle>& known_cycle = std::nullopt);

/// max of F over the points of (1/q)Z^d, 2 <= q <= Q.
Rat brute_force_sup(const std::vector<LinearForm>& forms, int q_max);

struct SearchOptions {
  int depth = 0;          ///< 0: 2d
  bool auto_depth = false;
  int max_depth = 24;
  double time_budget_s = 0;
};

/// Branch and bound plus certification. With auto_depth the depth grows by
/// one from `depth` (or from d when unset) until certified or max_depth.
MaxMinResult solve_maxmin(const RecurrenceSpec& rec, const Rat& floor, const SearchOptions& options,
                          const std::optional<ResidueCycle>& known_cycle = std::nullopt);

} // namespace pisot
