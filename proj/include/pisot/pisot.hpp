#pragma once

#include "pisot/int_poly.hpp"
#include "pisot/roots.hpp"

#include <optional>
#include <string>
#include <utility>

namespace pisot {

enum class PisotFailure {
  none,
  reducible,
  no_dominant_root,
  conjugate_on_or_outside_circle,
  zero_constant_term,
};

std::string to_string(PisotFailure f);
PisotFailure parse_pisot_failure(const std::string& s);

struct PisotReport {
  bool is_pisot = false;
  bool is_irreducible = false;
  /// False only for d > 4 inputs that fail the root conditions; there the
  /// library has no irreducibility test and is_irreducible is left false.
  bool irreducibility_known = true;
  /// Isolating interval [lo, hi] of the root > 1, present when is_pisot.
  std::optional<std::pair<Rat, Rat>> dominant_root_bracket;
  int roots_inside_disk_count = 0;
  int roots_on_circle_count = 0;
  int roots_outside_disk_count = 0;
  int real_roots_above_one = 0;
  PisotFailure failure_reason = PisotFailure::none;

  friend bool operator==(const PisotReport&, const PisotReport&) = default;
};

/// Exact Pisot test. A monic integer polynomial with a_d != 0, one real root
/// > 1 and every other root strictly inside the unit disk is irreducible (a
/// factor missing the large root would have a nonzero integer constant term
/// of modulus < 1), so for d > 4 irreducibility follows from the root count.
PisotReport is_pisot(const IntPoly& p, const Rat& bracket_width);

/// Rational-root test plus, for d = 4, a search for monic integer quadratic
/// factors. Throws UnsupportedDegree for d > 4.
bool is_irreducible_low_degree(const IntPoly& p);

/// The two inequalities of the classical Rouche-type sufficient condition,
/// evaluated literally. Not a Pisot oracle.
bool rouche_sufficient(const IntPoly& p);

enum class Family { T_even, T_odd, T_prime, T_doubleprime };

/// T_even(p) = T_{2p}, T_odd(p) = T_{2p+1}, T_prime(k) = T'_k (monic sign),
/// T_doubleprime = T'' (k ignored). Throws InvalidArgument for k = 0.
IntPoly small_pisot_family(Family kind, int k);

} // namespace pisot
