#include "pisot/bounds.hpp"

#include "pisot/error.hpp"

#include <algorithm>

namespace pisot {

namespace {

Rat ratio(const Int& num, const Int& den) { return den == 0 ? Rat(0) : make_rat(num, den); }

bool golden(const IntPoly& p) { return p.coeffs() == std::vector<std::int64_t>{1, 1}; }

Rat half() { return make_rat(1, 2); }

} // namespace

Rat upper_theorem1(const RecurrenceSpec& rec) {
  if (rec.sum() % 2 != 0) return half();
  const Int s = rec.abs_sum();
  return make_rat(s, 2 * s + 2);
}

LowerBound lower_theorem2(const RecurrenceSpec& rec) {
  if (rec.sum() % 2 != 0) throw InvalidArgument("periodic-orbit bounds need an even coefficient sum; L = 1/2");
  const SumProfile p1 = sum_profile(rec, 1), p2 = sum_profile(rec, 2), p4 = sum_profile(rec, 4);
  LowerBound out;
  const Int s = p1.s[0];
  out.branches[0] = nearest_int_dist(ratio(s - 2, 2 * s - 2));
  const Int d = p2.s[0] - p2.s[1];
  out.branches[1] = nearest_int_dist(ratio(d, 2 * d + 2));
  const Int a = p4.s[0] - p4.s[2], b = p4.s[1] - p4.s[3] + 1;
  out.branches[2] = ratio(a * a - abs(a) + b * b - abs(b), 2 * a * a + 2 * b * b);
  out.branch = 1;
  out.value = out.branches[0];
  for (int i = 1; i < 3; ++i)
    if (out.branches[static_cast<std::size_t>(i)] > out.value) {
      out.value = out.branches[static_cast<std::size_t>(i)];
      out.branch = i + 1;
    }
  return out;
}

std::vector<TaggedValue> applicable_formulas(const RecurrenceSpec& rec) {
  std::vector<TaggedValue> out;
  const int d = rec.degree();
  const Int sum = rec.sum();
  if (sum % 2 != 0) {
    out.push_back({half(), "odd-sum"});
    return out;
  }
  if (d == 1) {
    const Int a1 = rec.a(1);
    out.push_back({make_rat(a1, 2 * a1 + 2), "degree-1"});
  } else if (d == 2) {
    const Int a1 = rec.a(1), a2 = rec.a(2);
    if (golden(rec))
      out.push_back({make_rat(1, 5), "degree-2"});
    else if (a2 > 0)
      out.push_back({make_rat(a1 + a2 - 2, 2 * a1 + 2 * a2 - 2), "degree-2"});
    else if (a2 < 0)
      out.push_back({make_rat(a1 - a2, 2 * a1 - 2 * a2 + 2), "degree-2"});
  } else if (d == 3) {
    const Int a1 = rec.a(1), a2 = rec.a(2), a3 = rec.a(3);
    const Int alt = a1 - a2 + a3;
    if (a3 >= 0 && a2 <= 0) out.push_back({make_rat(alt, 2 * (alt + 1)), "cubic-nonnegative-a3"});
    // Restricted to a1 >= 1: at (0,1,1) the formula gives 0 while L = 1/5.
    if (a3 > 0 && a2 > 0 && a1 >= 1) out.push_back({make_rat(sum - 2, 2 * (sum - 1)), "cubic-nonnegative-a3"});
    if (a2 < 0 && a3 < 0 && Rat(a2) + make_rat(a3 * a3 - a3 * (a1 - 1) + 1, a1 + 1) <= 0)
      out.push_back({make_rat(alt, 2 * (alt + 1)), "cubic-negative-a3-case1"});
    // The curve condition divides by a1 - 1; a1 <= 1 is outside its scope.
    if (a2 > 0 && a3 < 0 && a1 >= 2 && Rat(a2) - make_rat(a3 * a3 - a3 * (a1 + 1) + 1, a1 - 1) >= 0)
      out.push_back({make_rat(sum - 2, 2 * (sum - 1)), "cubic-negative-a3-case2"});
  }
  bool alternating = true;
  for (int i = 1; i <= d; ++i) {
    const auto v = rec.a(i);
    if ((i % 2 == 1 && v < 0) || (i % 2 == 0 && v > 0)) alternating = false;
  }
  if (alternating) {
    const Int s = rec.abs_sum();
    out.push_back({make_rat(s, 2 * s + 2), "alternating-signs"});
  }
  bool positive = d > 1 && !golden(rec);
  for (int i = 1; i <= d && positive; ++i) positive = rec.a(i) >= 1;
  if (positive) out.push_back({make_rat(sum - 2, 2 * sum - 2), "positive-coefficients"});
  return out;
}

std::optional<TaggedValue> exact_formula(const RecurrenceSpec& rec) {
  const auto all = applicable_formulas(rec);
  if (all.empty()) return std::nullopt;
  for (const auto& f : all)
    if (f.value != all.front().value)
      throw InternalInconsistency("exact formulas disagree: " + all.front().source + " gives " +
                                  to_string(all.front().value) + ", " + f.source + " gives " + to_string(f.value));
  return all.front();
}

BoundReport bound_report(const RecurrenceSpec& input, const BoundOptions& options) {
  BoundReport r;
  r.rec = input.strip_trailing_zeros();
  const IntPoly& rec = r.rec;
  if (!(rec == input)) r.warnings.push_back("trailing zero coefficients removed: " + rec.to_string());

  if (rec.sum() % 2 != 0) {
    r.lower = r.upper = TaggedValue{half(), "odd-sum"};
    r.exact = r.lower;
    return r;
  }

  const LowerBound lb = lower_theorem2(rec);
  static const char* branch_tag[] = {"period-1-cycle", "period-2-cycle", "period-4-cycle"};
  r.lower = {lb.value, branch_tag[lb.branch - 1]};
  if (sgn(lb.value) > 0) {
    static const int periods[] = {1, 2, 4};
    r.lower_cycle = construct_cycle(rec, periods[lb.branch - 1]);
    if (cycle_lower_bound(*r.lower_cycle) != lb.value)
      throw InternalInconsistency("closed-form cycle does not attain its bound");
  }
  if (options.cycle_search) {
    for (int t : options.periods) {
      CycleSearchResult c = search_cycles(rec, t, options.z_max);
      if (!c.exhaustive) r.warnings.push_back("cycle search budget reached at period " + std::to_string(t));
      if (c.best && c.min_dist > r.lower.value) {
        r.lower = {c.min_dist, "cycle-search"};
        r.lower_cycle = c.best;
      }
    }
  }
  r.upper = {upper_theorem1(rec), "length-bound"};

  if (auto f = exact_formula(rec)) r.exact = f;

  if (options.exact) {
    MaxMinResult m = solve_maxmin(rec, r.lower.value, options.search, r.lower_cycle);
    if (!m.complete) {
      r.warnings.push_back("max-min search stopped by the time budget");
    } else {
      if (m.sup_value < r.upper.value) r.upper = {m.sup_value, "maxmin-sup"};
      if (m.certified_exact) {
        if (r.exact && r.exact->value != m.sup_value)
          throw InternalInconsistency("certified search " + to_string(m.sup_value) + " contradicts " +
                                      r.exact->source + " " + to_string(r.exact->value));
        if (!r.exact) r.exact = TaggedValue{m.sup_value, "certified-maxmin"};
      } else {
        r.warnings.push_back("max-min sup not certified; upper bound only");
      }
    }
    r.search = std::move(m);
  }

  if (r.lower.value > r.upper.value)
    throw InternalInconsistency("lower bound " + to_string(r.lower.value) + " exceeds upper bound " +
                                to_string(r.upper.value));
  if (r.exact && (r.exact->value < r.lower.value || r.exact->value > r.upper.value))
    throw InternalInconsistency("exact value " + to_string(r.exact->value) + " outside [" +
                                to_string(r.lower.value) + ", " + to_string(r.upper.value) + "]");
  if (!r.exact && r.lower.value == r.upper.value) r.exact = TaggedValue{r.lower.value, "lower-equals-upper"};
  return r;
}

std::vector<PatternRow> pattern_table(std::int64_t a1, std::int64_t a2, std::int64_t a3) {
  struct Spec {
    const char* name;
    std::array<int, 4> l;
  };
  static const Spec specs[] = {
      {"A1", {-1, 1, 1, 1}},   {"A2", {1, -1, -1, -1}}, {"B1", {1, 1, 1, 1}},    {"B2", {-1, -1, -1, -1}},
      {"C1", {-1, 1, -1, -1}}, {"C2", {1, -1, 1, 1}},   {"D1", {1, 1, -1, -1}},  {"D2", {-1, -1, 1, 1}},
      {"E1", {-1, 1, 1, -1}},  {"E2", {1, -1, -1, 1}},  {"F1", {1, 1, 1, -1}},   {"F2", {-1, -1, -1, 1}},
      {"G1", {-1, 1, -1, 1}},  {"G2", {1, -1, 1, -1}},  {"H1", {1, 1, -1, 1}},   {"H2", {-1, -1, 1, -1}},
  };
  const Int u = Int(a1) - a2 + a3 + 1, v = Int(a1) + a2 + a3 - 1;
  std::vector<PatternRow> out;
  for (const auto& s : specs) {
    const Int r = abs(Int(a1) * s.l[1] + Int(a2) * s.l[2] + Int(a3) * s.l[3] - s.l[0]);
    out.push_back({s.name, s.l, r, r - u, r - v});
  }
  return out;
}

} // namespace pisot
