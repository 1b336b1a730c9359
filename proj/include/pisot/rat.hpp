#pragma once

// Exact rational scalars.
//
// Rat is GMP's mpq_class. Every arithmetic operator of mpq_class returns a
// canonical value (positive denominator, coprime parts); values built from a
// numerator/denominator pair must go through make_rat, which canonicalizes.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pisot {

using Int = mpz_class;
using Rat = mpq_class;
using RatVec = std::vector<Rat>;

Rat make_rat(const Int& num, const Int& den);
Rat make_rat(std::int64_t num, std::int64_t den = 1);

Int floor_of(const Rat& q);
Int ceil_of(const Rat& q);

/// Fractional part {q}, always in [0, 1).
Rat frac(const Rat& q);

/// ||q||: distance from q to the nearest integer, in [0, 1/2].
Rat nearest_int_dist(const Rat& q);

bool is_canonical(const Rat& q);

/// "p/q" (or "p" for integers); parse_rat accepts the same forms.
std::string to_string(const Rat& q);
Rat parse_rat(std::string_view text);

/// Least common multiple of the denominators (1 for an empty vector).
Int common_denominator(const RatVec& v);

} // namespace pisot
