#include "pisot/atlas.hpp"

#include "pisot/error.hpp"
#include "pisot/parallel.hpp"

#include <cstdlib>

namespace pisot {

namespace {

std::array<std::int64_t, 4> padded(const CoeffTuple& t) {
  if (t.degree() > 4) throw InvalidArgument("tuple degree must be at most 4");
  std::array<std::int64_t, 4> a{0, 0, 0, 0};
  for (int i = 1; i <= t.degree(); ++i) a[static_cast<std::size_t>(i - 1)] = t.a(i);
  return a;
}

std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Rat tiny() { return make_rat(1, 1 << 20); }

} // namespace

bool lambda2_member(std::int64_t a1, std::int64_t a2) {
  return (a2 > 0 && a2 < a1 + 1) || (a2 < 0 && a2 > 1 - a1);
}

std::vector<std::array<std::int64_t, 2>> enumerate_lambda2(std::int64_t a1_lo, std::int64_t a1_hi) {
  std::vector<std::array<std::int64_t, 2>> out;
  for (std::int64_t a1 = a1_lo; a1 <= a1_hi; ++a1)
    for (std::int64_t a2 = -std::llabs(a1) - 1; a2 <= std::llabs(a1) + 1; ++a2)
      if (lambda2_member(a1, a2)) out.push_back({a1, a2});
  return out;
}

bool lambda3_literal(std::int64_t a1, std::int64_t a2, std::int64_t a3) {
  return a1 + a2 + a3 > 1 && a1 - a2 + a3 > -1 && a2 > a3 * a3 - a1 * a3 - 1 && a3 != 0;
}

Lambda3Result enumerate_lambda3(std::int64_t a1) {
  Lambda3Result out;
  if (a1 < 0) return out;
  const std::int64_t b2 = 2 * a1 + 5, b3 = a1 + 2;
  for (std::int64_t a2 = -b2 + 1; a2 < b2; ++a2)
    for (std::int64_t a3 = -b3 + 1; a3 < b3; ++a3) {
      if (a3 == 0) continue;
      const bool pisot = is_pisot(IntPoly({a1, a2, a3}), tiny()).is_pisot;
      const bool literal = lambda3_literal(a1, a2, a3);
      if (pisot) out.members.push_back({a1, a2, a3});
      if (pisot != literal) out.discrepancies.push_back({{a1, a2, a3}, literal, pisot});
    }
  return out;
}

std::string to_string(Gamma g) {
  switch (g) {
    case Gamma::Gamma1: return "Gamma1";
    case Gamma::Gamma2: return "Gamma2";
    case Gamma::Gamma3: return "Gamma3";
  }
  return "";
}

GammaClass gamma_class(const CoeffTuple& t) {
  if (t.degree() != 3) throw InvalidArgument("gamma classes are defined for cubic tuples");
  if (t.sum() % 2 != 0) throw InvalidArgument("odd coefficient sum: L = 1/2 directly, no gamma class");
  if (!is_pisot(t, tiny()).is_pisot) throw InvalidArgument("tuple is not a Pisot cubic");
  const LowerBound lb = lower_theorem2(t);
  // Branch order here: alternating sum (period 2), sum (period 1), period 4.
  const Rat& g1 = lb.branches[1];
  const Rat& g2 = lb.branches[0];
  const Rat& g3 = lb.branches[2];
  if (g1 >= g2 && g1 >= g3) return {Gamma::Gamma1, g1};
  if (g2 >= g3) return {Gamma::Gamma2, g2};
  return {Gamma::Gamma3, g3};
}

std::string to_string(Exceptional e) {
  switch (e) {
    case Exceptional::zero_bound: return "zero-bound";
    case Exceptional::one_fifth: return "one-fifth";
    case Exceptional::four_thirteenths: return "four-thirteenths";
    case Exceptional::generic: return "generic";
  }
  return "";
}

bool in_small_sum_chain(const CoeffTuple& t) {
  const auto a = padded(t);
  const std::int64_t s = a[0] + a[1] + a[2] + a[3];
  const std::int64_t alt = a[0] - a[1] + a[2] - a[3];
  return (s == 0 || s == 2) && (alt == 0 || alt == -2);
}

Exceptional exceptional_degree4(const CoeffTuple& t) {
  const auto a = padded(t);
  if ((a[0] + a[1] + a[2] + a[3]) % 2 != 0) throw InvalidArgument("classification needs an even coefficient sum");
  if (!in_small_sum_chain(t)) return Exceptional::generic;
  const std::int64_t x = a[0] - a[2], y = a[1] - a[3] + 1;
  const std::int64_t ax = std::llabs(x), ay = std::llabs(y);
  if (x * x - ax + y * y - ay == 0) return Exceptional::zero_bound;
  if ((ax == 1 && ay == 2) || (ax == 2 && ay == 1)) return Exceptional::one_fifth;
  if ((ax == 2 && ay == 3) || (ax == 3 && ay == 2)) return Exceptional::four_thirteenths;
  return Exceptional::generic;
}

std::vector<CoeffTuple> enumerate_pisot(int degree, std::int64_t a1_lo, std::int64_t a1_hi) {
  if (degree < 1 || degree > 4) throw UnsupportedDegree("enumeration supports degree 1 to 4");
  const int d = degree;
  // alpha < a1 + d - 1 and alpha > 1; |a_k| <= e_k bound with |conjugates| < 1.
  a1_lo = std::max<std::int64_t>(a1_lo, 3 - d);
  std::vector<std::vector<std::int64_t>> prefixes;
  for (std::int64_t a1 = a1_lo; a1 <= a1_hi; ++a1) {
    if (d == 1) {
      prefixes.push_back({a1});
      continue;
    }
    const std::int64_t b2 = binom(d - 1, 1) * (a1 + d - 1) + binom(d - 1, 2) - 1;
    for (std::int64_t a2 = -b2; a2 <= b2; ++a2) prefixes.push_back({a1, a2});
  }
  auto work = [&](std::size_t i) {
    std::vector<CoeffTuple> found;
    const auto& pre = prefixes[i];
    const std::int64_t amax = pre[0] + d - 1;
    std::vector<std::int64_t> bound(static_cast<std::size_t>(d) + 1, 0);
    for (int k = 1; k <= d; ++k) bound[static_cast<std::size_t>(k)] = binom(d - 1, k - 1) * amax + binom(d - 1, k) - 1;
    std::vector<std::int64_t> a = pre;
    a.resize(static_cast<std::size_t>(d), 0);
    auto visit = [&](auto&& self, std::size_t k) -> void {
      if (k == static_cast<std::size_t>(d)) {
        if (a.back() == 0) return;
        std::int64_t s = 0, alt = 0;
        for (std::size_t j = 0; j < a.size(); ++j) {
          s += a[j];
          alt += (j % 2 == 0 ? -1 : 1) * a[j];
        }
        if (1 - s >= 0 || 1 - alt <= 0) return;
        IntPoly p(a);
        if (is_pisot(p, tiny()).is_pisot) found.push_back(std::move(p));
        return;
      }
      const std::int64_t b = bound[k + 1];
      for (std::int64_t v = -b; v <= b; ++v) {
        a[k] = v;
        self(self, k + 1);
      }
    };
    visit(visit, pre.size());
    return found;
  };
  auto parts = parallel_map(prefixes.size(), work);
  std::vector<CoeffTuple> out;
  for (auto& p : parts)
    for (auto& t : p) out.push_back(std::move(t));
  return out;
}

} // namespace pisot
