#pragma once

// Exact root location for rational polynomials: Sturm sequences on the real
// line and a Schur–Cohn count for the unit disk. No floating point.

#include "pisot/poly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace pisot {

std::vector<QPoly> sturm_sequence(const QPoly& p);

/// Number of distinct real roots in the half-open interval (lo, hi]; an
/// empty optional endpoint stands for -inf / +inf.
int count_real_roots(const QPoly& p, const std::optional<Rat>& lo, const std::optional<Rat>& hi);

struct DiskCount {
  int inside = 0;   ///< |z| < 1
  int on = 0;       ///< |z| = 1
  int outside = 0;  ///< |z| > 1
  friend bool operator==(const DiskCount&, const DiskCount&) = default;
};

/// Roots counted with multiplicity. Squarefree parts are split into the
/// factor shared with the reciprocal polynomial (unit-circle roots and
/// pairs z, 1/z) and a remainder handled by the Schur–Cohn Hermitian form,
/// whose inertia is read exactly off its characteristic polynomial.
DiskCount count_unit_disk(const QPoly& p);

/// Inertia (positive, negative) of the Schur–Cohn matrix of q. The positive
/// count equals the number of roots inside the unit disk whenever q and its
/// reciprocal are coprime. Exposed for testing.
std::pair<int, int> schur_cohn_inertia(const QPoly& q);

/// Shrinks an isolating interval [lo, hi] with sign(p(lo)) != sign(p(hi)) by
/// exact bisection until hi - lo <= width.
std::pair<Rat, Rat> refine_root(const QPoly& p, Rat lo, Rat hi, const Rat& width);

} // namespace pisot
