#include "pisot/cycles.hpp"

#include "pisot/error.hpp"
#include "pisot/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace pisot {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t z) {
  std::int64_t r = a % z;
  return r < 0 ? r + z : r;
}

std::int64_t mod128(__int128 a, std::int64_t z) {
  auto r = static_cast<std::int64_t>(a % z);
  return r < 0 ? r + z : r;
}

// g = gcd(a, b) = x a + y b, a, b >= 0.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
    std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
  }
  x = x0;
  y = y0;
  return a;
}

std::int64_t dist_num(std::int64_t r, std::int64_t z) { return std::min(r, z - r); }

struct PerZ {
  std::int64_t best_num = 0;  // min-dist numerator over z; 0 = nothing found
  std::vector<std::int64_t> residues;
  std::int64_t visited = 0;
  bool exhaustive = true;
};

class KernelSearch {
public:
  KernelSearch(const SumProfile& p, std::int64_t z, std::int64_t budget) : t_(p.t), z_(z), budget_(budget) {
    const auto n = static_cast<std::size_t>(t_);
    h_.assign(n, std::vector<std::int64_t>(n, 0));
    for (int i = 0; i < t_; ++i)
      for (int k = 0; k < t_; ++k) {
        int j = ((i - k) % t_ + t_) % t_;
        if (j == 0) j = t_;
        std::int64_t v = p.s[static_cast<std::size_t>(j - 1)] - (i == k ? 1 : 0);
        h_[i][k] = mod(v, z_);
      }
    triangularize();
  }

  PerZ run() {
    r_.assign(static_cast<std::size_t>(t_), 0);
    dfs(t_ - 1, z_);
    return out_;
  }

private:
  void triangularize() {
    for (int c = 0; c < t_; ++c) {
      for (int r = c + 1; r < t_; ++r) {
        const std::int64_t a = h_[c][c], b = h_[r][c];
        if (b == 0) continue;
        std::int64_t x, y;
        const std::int64_t g = ext_gcd(a, b, x, y);
        const std::int64_t bg = b / g, ag = a / g;
        for (int k = 0; k < t_; ++k) {
          const __int128 rc = h_[c][k], rr = h_[r][k];
          h_[c][k] = mod128(x * rc + y * rr, z_);
          h_[r][k] = mod128(bg * rc - ag * rr, z_);
        }
      }
    }
  }

  // Assign r_i for rows i, i-1, ..., 0; `cur` is the running min distance numerator.
  void dfs(int i, std::int64_t cur) {
    if (!out_.exhaustive) return;
    if (i < 0) {
      ++out_.visited;
      if (out_.visited > budget_) out_.exhaustive = false;
      if (cur > out_.best_num || (cur == out_.best_num && r_ < out_.residues)) {
        out_.best_num = cur;
        out_.residues = r_;
      }
      return;
    }
    __int128 rest = 0;
    for (int j = i + 1; j < t_; ++j) rest += static_cast<__int128>(h_[i][j]) * r_[j];
    const std::int64_t rhs = mod128(-rest, z_);
    const std::int64_t h = h_[i][i];
    std::int64_t x, y;
    const std::int64_t g = ext_gcd(h, z_, x, y);
    if (rhs % g != 0) return;
    const std::int64_t step = z_ / g;
    const std::int64_t base = mod128(static_cast<__int128>(rhs / g) * mod(x, step), step);
    for (std::int64_t k = 0; k < g; ++k) {
      const std::int64_t r = base + k * step;
      const std::int64_t d = dist_num(r, z_);
      if (d == 0 || d < out_.best_num) continue;
      r_[i] = r;
      dfs(i - 1, std::min(cur, d));
      if (!out_.exhaustive) return;
    }
  }

  int t_;
  std::int64_t z_;
  std::int64_t budget_;
  std::vector<std::vector<std::int64_t>> h_;
  std::vector<std::int64_t> r_;
  PerZ out_;
};

} // namespace

SumProfile sum_profile(const RecurrenceSpec& rec, int t) {
  if (t < 1) throw InvalidArgument("period must be positive");
  SumProfile p{t, std::vector<std::int64_t>(static_cast<std::size_t>(t), 0)};
  for (int i = 1; i <= rec.degree(); ++i) p.s[static_cast<std::size_t>((i - 1) % t)] += rec.a(i);
  return p;
}

bool check_cycle(const SumProfile& profile, std::int64_t z, const std::vector<std::int64_t>& residues) {
  if (z <= 0) throw InvalidArgument("cycle denominator must be positive");
  const int t = profile.t;
  if (static_cast<int>(residues.size()) != t) throw InvalidArgument("residue count differs from the period");
  if (static_cast<int>(profile.s.size()) != t) throw InvalidArgument("profile length differs from the period");
  std::vector<int> support;
  for (int j = 1; j <= t; ++j)
    if (profile.s[static_cast<std::size_t>(j - 1)] != 0) support.push_back(j);
  for (int i = 0; i < t; ++i) {
    __int128 acc = 0;
    for (int j : support)
      acc += static_cast<__int128>(profile.s[static_cast<std::size_t>(j - 1)]) *
             residues[static_cast<std::size_t>(((i - j) % t + t) % t)];
    if (mod128(acc - residues[static_cast<std::size_t>(i)], z) != 0) return false;
  }
  return true;
}

ResidueCycle::ResidueCycle() : profile_{1, {0}}, z_(1), r_{0} {}

ResidueCycle::ResidueCycle(const SumProfile& profile, std::int64_t z, std::vector<std::int64_t> residues)
    : profile_(profile), z_(z), r_(std::move(residues)) {
  if (z_ <= 0) throw InvalidArgument("cycle denominator must be positive");
  for (auto r : r_)
    if (r < 0 || r >= z_) throw InvalidArgument("residues must lie in [0, z)");
  if (!check_cycle(profile_, z_, r_)) throw InvalidArgument("residues violate the periodicity criterion");
}

RatVec ResidueCycle::values() const {
  RatVec v;
  v.reserve(r_.size());
  for (auto r : r_) v.push_back(make_rat(r, z_));
  return v;
}

Rat cycle_lower_bound(const ResidueCycle& c) {
  std::int64_t best = c.z();
  for (auto r : c.residues()) best = std::min(best, dist_num(r, c.z()));
  return make_rat(best, c.z());
}

ResidueCycle construct_cycle(const RecurrenceSpec& rec, int period) {
  if (rec.sum() % 2 != 0) throw InvalidArgument("closed-form cycles need an even coefficient sum");
  const SumProfile p = sum_profile(rec, period);
  RatVec x;
  switch (period) {
    case 1: {
      const Int s = p.s[0];
      if (s == 1) throw DegenerateCycle("2 s_{1,1} - 2");
      x.push_back(make_rat(s - 2, 2 * s - 2));
      break;
    }
    case 2: {
      const Int d = p.s[0] - p.s[1];
      if (d == -1) throw DegenerateCycle("s_{1,2} - s_{2,2} + 1");
      x.push_back(make_rat(d, 2 * (d + 1)));
      x.push_back(make_rat(d + 2, 2 * (d + 1)));
      break;
    }
    case 4: {
      const Int a = p.s[0] - p.s[2];
      const Int b = p.s[1] - p.s[3] + 1;
      if (a == 0 && b == 0) throw DegenerateCycle("(s_{1,4} - s_{3,4}, s_{2,4} - s_{4,4} + 1)");
      const Int den = 2 * a * a + 2 * b * b;
      const Int sq = a * a + b * b;
      x.push_back(make_rat(sq - a - b, den));
      x.push_back(make_rat(sq - a + b, den));
      x.push_back(make_rat(sq + a + b, den));
      x.push_back(make_rat(sq + a - b, den));
      break;
    }
    default:
      throw InvalidArgument("closed-form cycles exist for periods 1, 2 and 4 only");
  }
  for (auto& v : x) v = frac(v);
  const Int z = common_denominator(x);
  if (!z.fits_slong_p()) throw InvalidArgument("cycle denominator exceeds 64 bits");
  std::vector<std::int64_t> r;
  for (const auto& v : x) r.push_back(Rat(v * z).get_num().get_si());
  if (!check_cycle(p, z.get_si(), r)) throw InternalInconsistency("closed-form cycle fails the criterion");
  return ResidueCycle(p, z.get_si(), std::move(r));
}

CycleSearchResult search_cycles(const RecurrenceSpec& rec, int t, std::int64_t z_max, std::int64_t budget) {
  if (t < 1) throw InvalidArgument("period must be positive");
  if (z_max < 2) throw InvalidArgument("z_max must be at least 2");
  const SumProfile p = sum_profile(rec, t);
  const auto count = static_cast<std::size_t>(z_max - 1);
  auto per_z = parallel_map(count, [&](std::size_t k) {
    return KernelSearch(p, static_cast<std::int64_t>(k) + 2, budget).run();
  });
  CycleSearchResult out;
  for (std::size_t k = 0; k < count; ++k) {
    const std::int64_t z = static_cast<std::int64_t>(k) + 2;
    const PerZ& r = per_z[k];
    out.candidates += r.visited;
    out.exhaustive = out.exhaustive && r.exhaustive;
    if (r.best_num == 0) continue;
    const Rat v = make_rat(r.best_num, z);
    if (!out.best || v > out.min_dist) {
      out.best = ResidueCycle(p, z, r.residues);
      out.min_dist = v;
    }
  }
  return out;
}

OrbitResult orbit(const RecurrenceSpec& rec, std::int64_t z, const std::vector<std::int64_t>& init) {
  if (z < 1) throw InvalidArgument("orbit denominator must be positive");
  const int d = rec.degree();
  if (static_cast<int>(init.size()) != d) throw InvalidArgument("orbit needs exactly d initial residues");
  using State = std::vector<std::int64_t>;
  auto step = [&](State s) {
    __int128 acc = 0;
    for (int i = 1; i <= d; ++i) acc += static_cast<__int128>(rec.a(i)) * s[static_cast<std::size_t>(d - i)];
    s.erase(s.begin());
    s.push_back(mod128(acc, z));
    return s;
  };
  State x0;
  for (auto v : init) x0.push_back(mod(v, z));

  std::int64_t power = 1, lam = 1;
  State tortoise = x0, hare = step(x0);
  while (tortoise != hare) {
    if (power == lam) {
      tortoise = hare;
      power *= 2;
      lam = 0;
    }
    hare = step(hare);
    ++lam;
  }
  std::int64_t mu = 0;
  tortoise = x0;
  hare = x0;
  for (std::int64_t i = 0; i < lam; ++i) hare = step(hare);
  while (tortoise != hare) {
    tortoise = step(tortoise);
    hare = step(hare);
    ++mu;
  }
  std::vector<std::int64_t> residues;
  residues.reserve(static_cast<std::size_t>(lam));
  State s = tortoise;
  for (std::int64_t i = 0; i < lam; ++i) {
    residues.push_back(s.front());
    s = step(s);
  }
  ResidueCycle c(sum_profile(rec, static_cast<int>(lam)), z, std::move(residues));
  Rat m = cycle_lower_bound(c);
  return OrbitResult{mu, std::move(c), std::move(m)};
}

} // namespace pisot
