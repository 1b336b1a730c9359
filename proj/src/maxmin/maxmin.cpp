#include "pisot/maxmin.hpp"

#include "pisot/error.hpp"
#include "pisot/linalg.hpp"
#include "pisot/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

namespace pisot {

namespace {

using i128 = __int128;

bool is_zero_form(const std::vector<std::int64_t>& c) {
  return std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v == 0; });
}

std::vector<std::int64_t> negated(std::vector<std::int64_t> c) {
  for (auto& v : c) v = -v;
  return c;
}

std::size_t dimension_of(const std::vector<LinearForm>& forms) {
  if (forms.empty()) throw InvalidArgument("no linear forms given");
  const std::size_t d = forms.front().coeffs.size();
  for (const auto& f : forms)
    if (f.coeffs.size() != d) throw InvalidArgument("linear forms of unequal length");
  return d;
}

// F at x = num / den (den > 0) as a numerator over den.
i128 f_numerator(const std::vector<LinearForm>& forms, const std::vector<i128>& num, i128 den) {
  i128 best = den;
  for (const auto& f : forms) {
    i128 s = 0;
    for (std::size_t j = 0; j < num.size(); ++j) s += static_cast<i128>(f.coeffs[j]) * num[j];
    s %= den;
    if (s < 0) s += den;
    best = std::min(best, std::min(s, den - s));
  }
  return best;
}

Rat to_rat(i128 num, i128 den) {
  auto to_int = [](i128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    Int r = 0;
    Int shift = 1;
    while (u > 0) {
      r += Int(static_cast<unsigned long>(u & 0xffffffffu)) * shift;
      shift *= Int(1) << 32;
      u >>= 32;
    }
    return neg ? Int(-r) : r;
  };
  return make_rat(to_int(num), to_int(den));
}

struct LocalBest {
  i128 num = -1;  // F numerator; -1 = nothing yet
  i128 den = 1;
  std::vector<RatVec> witnesses;

  // Returns -1, 0, 1 comparing num/den with the stored value.
  int compare(i128 n, i128 d) const {
    if (num < 0) return 1;
    const i128 lhs = n * den, rhs = num * d;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
  }

  void offer(i128 n, i128 d, const std::vector<i128>& x) {
    const int c = compare(n, d);
    if (c < 0) return;
    RatVec w;
    w.reserve(x.size());
    for (auto v : x) w.push_back(to_rat(v, d));
    if (c > 0) {
      num = n;
      den = d;
      witnesses.clear();
    }
    witnesses.push_back(std::move(w));
  }

  void merge(LocalBest&& o) {
    if (o.num < 0) return;
    const int c = compare(o.num, o.den);
    if (c < 0) return;
    if (c > 0) {
      num = o.num;
      den = o.den;
      witnesses = std::move(o.witnesses);
    } else {
      for (auto& w : o.witnesses) witnesses.push_back(std::move(w));
    }
  }
};

void finalize_witnesses(std::vector<RatVec>& w) {
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
}

} // namespace

std::vector<LinearForm> generate_forms(const RecurrenceSpec& rec, int depth) {
  if (depth < 0) throw InvalidArgument("depth must be nonnegative");
  const auto d = static_cast<std::size_t>(rec.degree());
  std::vector<std::vector<std::int64_t>> seq;
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<std::int64_t> e(d, 0);
    e[j] = 1;
    seq.push_back(std::move(e));
  }
  for (int k = 0; k < depth; ++k) {
    std::vector<std::int64_t> next(d, 0);
    const std::size_t n = seq.size();
    for (std::size_t i = 1; i <= d; ++i) {
      const std::int64_t a = rec.a(static_cast<int>(i));
      for (std::size_t j = 0; j < d; ++j) {
        std::int64_t prod;
        if (__builtin_mul_overflow(a, seq[n - i][j], &prod) || __builtin_add_overflow(next[j], prod, &next[j]))
          throw InvalidArgument("form coefficients overflow 64 bits; lower the depth");
      }
    }
    seq.push_back(std::move(next));
  }
  std::vector<LinearForm> out;
  for (auto& c : seq) {
    if (is_zero_form(c)) continue;
    const auto neg = negated(c);
    bool dup = false;
    for (const auto& f : out)
      if (f.coeffs == c || f.coeffs == neg) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(LinearForm{std::move(c)});
  }
  return out;
}

Rat eval_F(const std::vector<LinearForm>& forms, const RatVec& point) {
  const std::size_t d = dimension_of(forms);
  if (point.size() != d) throw InvalidArgument("point dimension differs from the forms");
  Rat best = make_rat(1, 2);
  for (const auto& f : forms) {
    Rat s = 0;
    for (std::size_t j = 0; j < d; ++j) s += f.coeffs[j] * point[j];
    best = std::min(best, nearest_int_dist(s));
  }
  return best;
}

MaxMinResult maximize(const std::vector<LinearForm>& forms) {
  const std::size_t d = dimension_of(forms);
  const std::size_t m = forms.size();
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<std::int64_t> e(d, 0);
    e[j] = 1;
    if (std::none_of(forms.begin(), forms.end(), [&](const LinearForm& f) { return f.coeffs == e; }))
      throw InvalidArgument("maximize needs every coordinate form");
  }
  std::vector<std::int64_t> lo(m, 0), hi(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (auto c : forms[i].coeffs) (c < 0 ? lo[i] : hi[i]) += c;

  // All (d+1)-subsets in lexicographic order.
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::size_t> idx(d + 1);
  if (m >= d + 1) {
    for (std::size_t i = 0; i <= d; ++i) idx[i] = i;
    for (;;) {
      subsets.push_back(idx);
      std::size_t p = d + 1;
      while (p > 0 && idx[p - 1] == m - (d + 1) + (p - 1)) --p;
      if (p == 0) break;
      ++idx[p - 1];
      for (std::size_t q = p; q <= d; ++q) idx[q] = idx[q - 1] + 1;
    }
  }

  auto work = [&](std::size_t s) {
    LocalBest best;
    const auto& sub = subsets[s];
    const std::size_t n = d + 1;
    std::vector<i128> b(n), x(d);
    std::vector<std::int64_t> k(n);
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      // sigma_0 = +1; (sigma, k) and (-sigma, -k) give the same point.
      std::vector<int> sigma(n, 1);
      for (std::size_t r = 1; r < n; ++r) sigma[r] = (mask >> (r - 1)) & 1u ? -1 : 1;
      RatMatrix mat(n, n);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t j = 0; j < d; ++j) mat(r, j) = sigma[r] * forms[sub[r]].coeffs[j];
        mat(r, d) = -1;
      }
      const Rat det = determinant(mat);
      if (sgn(det) == 0) continue;
      const auto inv = inverse(mat);
      // adj = det * inv, integral; normalise to a positive determinant.
      std::vector<std::vector<i128>> adj(n, std::vector<i128>(n));
      const Rat sdet = abs(det);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Rat v = (*inv)(i, j) * sdet;
          if (v.get_den() != 1 || !v.get_num().fits_slong_p()) throw InvalidArgument("vertex system exceeds 64 bits");
          adj[i][j] = v.get_num().get_si();
        }
      const i128 den = sdet.get_num().get_si();
      for (std::size_t r = 0; r < n; ++r) k[r] = lo[sub[r]];
      for (;;) {
        for (std::size_t r = 0; r < n; ++r) b[r] = static_cast<i128>(sigma[r]) * k[r];
        i128 vnum = 0;
        for (std::size_t j = 0; j < n; ++j) vnum += adj[d][j] * b[j];
        const i128 av = vnum < 0 ? -vnum : vnum;
        if (av != 0 && 2 * av <= den) {
          bool inside = true;
          for (std::size_t i = 0; i < d && inside; ++i) {
            i128 s = 0;
            for (std::size_t j = 0; j < n; ++j) s += adj[i][j] * b[j];
            if (s < 0 || s > den) inside = false;
            x[i] = s == den ? 0 : s;
          }
          if (inside) best.offer(f_numerator(forms, x, den), den, x);
        }
        std::size_t r = 0;
        while (r < n && k[r] == hi[sub[r]]) {
          k[r] = lo[sub[r]];
          ++r;
        }
        if (r == n) break;
        ++k[r];
      }
    }
    return best;
  };
  auto parts = parallel_map(subsets.size(), work);

  LocalBest total;
  {
    std::vector<i128> half(d, 1);
    total.offer(f_numerator(forms, half, 2), 2, half);
  }
  for (auto& p : parts) total.merge(std::move(p));

  MaxMinResult out;
  out.method = "vertex-enumeration";
  out.nodes = static_cast<std::int64_t>(subsets.size());
  out.sup_value = to_rat(total.num, total.den);
  out.witnesses = std::move(total.witnesses);
  for (auto& w : out.witnesses)
    for (auto& v : w) v = frac(v);
  finalize_witnesses(out.witnesses);
  if (sgn(out.sup_value) == 0) out.witnesses.clear();
  return out;
}

namespace {

constexpr std::int64_t certificate_step_cap = 2'000'000;
constexpr double full_orbit_state_cap = 1e7;

// Cycle through `init` whose terms all stay at distance >= target, if the
// walk closes within the step cap. When gcd(a_d, z) = 1 the map on windows is
// invertible, so the orbit is purely periodic and the first term closer than
// target to an integer rules the witness out.
std::optional<ResidueCycle> periodic_certificate(const RecurrenceSpec& rec, std::int64_t z,
                                                 const std::vector<std::int64_t>& init, const Rat& target) {
  const std::size_t d = init.size();
  if (std::gcd(rec.a(rec.degree()), z) != 1) {
    if (std::pow(static_cast<double>(z), static_cast<double>(d)) > full_orbit_state_cap) return std::nullopt;
    OrbitResult o = orbit(rec, z, init);
    if (o.cycle_min_dist != target) return std::nullopt;
    return std::move(o.cycle);
  }
  auto far = [&](std::int64_t r) { return make_rat(std::min(r, z - r), z) >= target; };
  std::vector<std::int64_t> terms(init.begin(), init.end());
  for (auto r : terms)
    if (!far(r)) return std::nullopt;
  for (std::int64_t step = 0; step < certificate_step_cap; ++step) {
    const std::size_t n = terms.size();
    i128 s = 0;
    for (std::size_t i = 1; i <= d; ++i) s += static_cast<i128>(rec.a(static_cast<int>(i))) * terms[n - i];
    s %= z;
    if (s < 0) s += z;
    const auto r = static_cast<std::int64_t>(s);
    if (!far(r)) return std::nullopt;
    terms.push_back(r);
    const std::size_t p = terms.size() - d;
    if (std::equal(init.begin(), init.end(), terms.begin() + static_cast<std::ptrdiff_t>(p))) {
      terms.resize(p);
      ResidueCycle c(sum_profile(rec, static_cast<int>(p)), z, std::move(terms));
      if (cycle_lower_bound(c) != target) return std::nullopt;
      return c;
    }
  }
  return std::nullopt;
}

} // namespace

MaxMinResult certify(const RecurrenceSpec& rec, MaxMinResult result, const std::optional<ResidueCycle>& known_cycle) {
  result.certified_exact = false;
  result.certificate.reset();
  if (!result.complete || sgn(result.sup_value) <= 0) return result;
  for (const auto& w : result.witnesses) {
    if (static_cast<int>(w.size()) != rec.degree()) throw InvalidArgument("witness dimension differs from the degree");
    const Int z = common_denominator(w);
    if (!z.fits_slong_p()) continue;
    std::vector<std::int64_t> init;
    for (const auto& v : w) init.push_back(Rat(v * z).get_num().get_si());
    if (auto c = periodic_certificate(rec, z.get_si(), init, result.sup_value)) {
      result.certified_exact = true;
      result.certificate = std::move(c);
      return result;
    }
  }
  if (known_cycle && cycle_lower_bound(*known_cycle) == result.sup_value) {
    result.certified_exact = true;
    result.certificate = known_cycle;
  }
  return result;
}

Rat brute_force_sup(const std::vector<LinearForm>& forms, int q_max) {
  if (q_max < 2) throw InvalidArgument("grid bound must be at least 2");
  const std::size_t d = dimension_of(forms);
  i128 best_num = 0, best_den = 1;
  std::vector<i128> x(d);
  for (int q = 2; q <= q_max; ++q) {
    std::fill(x.begin(), x.end(), 0);
    for (;;) {
      const i128 f = f_numerator(forms, x, q);
      if (f * best_den > best_num * q) {
        best_num = f;
        best_den = q;
      }
      std::size_t j = 0;
      while (j < d && x[j] == q - 1) x[j++] = 0;
      if (j == d) break;
      ++x[j];
    }
  }
  return to_rat(best_num, best_den);
}

MaxMinResult solve_maxmin(const RecurrenceSpec& rec, const Rat& floor, const SearchOptions& options,
                          const std::optional<ResidueCycle>& known_cycle) {
  const int d = rec.degree();
  const auto start = std::chrono::steady_clock::now();
  auto remaining = [&]() -> double {
    if (options.time_budget_s <= 0) return 0;
    const double used = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return std::max(1e-3, options.time_budget_s - used);
  };
  if (!options.auto_depth) {
    const int k = options.depth > 0 ? options.depth : 2 * d;
    return certify(rec, maximize_recurrence(rec, k, floor, remaining()), known_cycle);
  }
  const int first = options.depth > 0 ? options.depth : d;
  MaxMinResult last;
  for (int k = first; k <= std::max(first, options.max_depth); ++k) {
    last = certify(rec, maximize_recurrence(rec, k, floor, remaining()), known_cycle);
    if (last.certified_exact || !last.complete) return last;
    if (options.time_budget_s > 0 &&
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() >= options.time_budget_s) {
      last.complete = false;
      return last;
    }
  }
  return last;
}

} // namespace pisot
