#pragma once

// Periodic sequences modulo 1 for x_n = a_1 x_{n-1} + ... + a_d x_{n-d}.
//
// A t-periodic sequence r_1/z, ..., r_t/z (mod 1) satisfies the recurrence
// iff r_i = sum_j s_{j,t} r_{i-j} (mod z) for every i, indices mod t, where
// s_{j,t} sums the a_i with i = j (mod t).

#include "pisot/int_poly.hpp"
#include "pisot/rat.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace pisot {

struct SumProfile {
  int t = 0;
  std::vector<std::int64_t> s;  ///< s[j-1] = s_{j,t}

  friend bool operator==(const SumProfile&, const SumProfile&) = default;
};

SumProfile sum_profile(const RecurrenceSpec& rec, int t);

/// True iff every congruence of the criterion holds. Throws InvalidArgument
/// for z <= 0 or a residue count different from profile.t.
bool check_cycle(const SumProfile& profile, std::int64_t z, const std::vector<std::int64_t>& residues);

class ResidueCycle {
public:
  /// The trivial cycle (0) with z = 1.
  ResidueCycle();
  /// Validates 0 <= r_i < z and the criterion; throws InvalidArgument.
  ResidueCycle(const SumProfile& profile, std::int64_t z, std::vector<std::int64_t> residues);

  int period() const noexcept { return static_cast<int>(r_.size()); }
  std::int64_t z() const noexcept { return z_; }
  const std::vector<std::int64_t>& residues() const noexcept { return r_; }
  const SumProfile& profile() const noexcept { return profile_; }
  RatVec values() const;

  friend bool operator==(const ResidueCycle&, const ResidueCycle&) = default;

private:
  SumProfile profile_;
  std::int64_t z_ = 1;
  std::vector<std::int64_t> r_;
};

/// Closed-form cycles of period 1, 2 or 4 (requires an even coefficient
/// sum). Throws DegenerateCycle when the denominator vanishes.
ResidueCycle construct_cycle(const RecurrenceSpec& rec, int period);

/// min_i ||r_i / z||, a lower bound for L of any Pisot number whose
/// recurrence admits the cycle.
Rat cycle_lower_bound(const ResidueCycle& c);

struct CycleSearchResult {
  std::optional<ResidueCycle> best;  ///< absent when no cycle avoids 0
  Rat min_dist = 0;
  std::int64_t candidates = 0;       ///< kernel elements visited
  bool exhaustive = true;            ///< false when the budget cut the search

  friend bool operator==(const CycleSearchResult&, const CycleSearchResult&) = default;
};

/// Best t-cycle over 2 <= z <= z_max by enumerating the kernel of the
/// criterion matrix mod z. Ties go to the smallest z, then to the
/// lexicographically smallest residues. `budget` caps kernel elements per z.
CycleSearchResult search_cycles(const RecurrenceSpec& rec, int t, std::int64_t z_max,
                                std::int64_t budget = 20'000'000);

struct OrbitResult {
  std::int64_t preperiod = 0;
  ResidueCycle cycle;
  Rat cycle_min_dist;

  friend bool operator==(const OrbitResult&, const OrbitResult&) = default;
};

/// Iterates r_n = sum a_i r_{n-i} mod z from r_1..r_d and returns the
/// eventual cycle (Brent's method on the window state).
OrbitResult orbit(const RecurrenceSpec& rec, std::int64_t z, const std::vector<std::int64_t>& init);

} // namespace pisot
