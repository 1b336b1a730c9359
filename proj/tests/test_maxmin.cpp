#include "pisot/bounds.hpp"
#include "pisot/error.hpp"
#include "pisot/maxmin.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace pisot;

namespace {

Rat q(std::int64_t n, std::int64_t d = 1) { return make_rat(n, d); }
IntPoly ip(std::vector<std::int64_t> a) { return IntPoly(std::move(a)); }

std::vector<LinearForm> forms_of(std::vector<std::vector<std::int64_t>> c) {
  std::vector<LinearForm> out;
  for (auto& v : c) out.push_back(LinearForm{std::move(v)});
  return out;
}

// The nine forms of the cubic x^3 - x - 1 over the window (x, y, z).
const std::vector<LinearForm>& nine_forms() {
  static const auto f = forms_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1},
                                  {1, 1, 1}, {1, 2, 1}, {1, 2, 2}, {2, 3, 2}});
  return f;
}

// Independent evaluation of F with plain loops.
Rat naive_F(const std::vector<LinearForm>& forms, const RatVec& x) {
  Rat best = q(1, 2);
  for (const auto& f : forms) {
    Rat s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * f.coeffs[i];
    const Rat fr = s - Rat(floor_of(s));
    const Rat other = 1 - fr;
    best = std::min(best, std::min(fr, other));
  }
  return best;
}

} // namespace

TEST_SUITE("maxmin") {

TEST_CASE("form generation") {
  CHECK(generate_forms(ip({0, 1, 1}), 6) == nine_forms());
  CHECK(generate_forms(ip({2, 1, -1}), 0) == forms_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(generate_forms(ip({2, 1, -1}), 1) == forms_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, 1, 2}}));
  // x_{n+2} = x_n: the new form repeats e_1 and is dropped.
  CHECK(generate_forms(ip({0, 1}), 3).size() == 2);
  // x_{n+2} = -x_n + ...: negated duplicates are dropped as well.
  CHECK(generate_forms(ip({0, -1}), 2).size() == 2);
  for (const auto& f : generate_forms(ip({3, -2, 5, 1}), 8)) {
    bool nonzero = false;
    for (auto c : f.coeffs) nonzero |= c != 0;
    CHECK(nonzero);
  }
}

TEST_CASE("evaluation of F") {
  CHECK(eval_F(nine_forms(), {q(1, 5), q(2, 5), q(4, 5)}) == q(1, 5));
  CHECK(eval_F(nine_forms(), {q(0), q(0), q(0)}) == 0);
  CHECK(eval_F(nine_forms(), {q(4, 5), q(3, 5), q(1, 5)}) == q(1, 5));
  std::mt19937_64 g(51);
  std::uniform_int_distribution<int> n(0, 96);
  for (int i = 0; i < 500; ++i) {
    RatVec x{make_rat(n(g), 97), make_rat(n(g), 89), make_rat(n(g), 13)};
    CHECK(eval_F(nine_forms(), x) == naive_F(nine_forms(), x));
  }
}

TEST_CASE("vertex enumeration on the nine forms") {
  const MaxMinResult m = maximize(nine_forms());
  CHECK(m.sup_value == q(1, 5));
  const std::vector<RatVec> expected{{q(1, 5), q(2, 5), q(4, 5)},
                                     {q(2, 5), q(4, 5), q(3, 5)},
                                     {q(3, 5), q(1, 5), q(2, 5)},
                                     {q(4, 5), q(3, 5), q(1, 5)}};
  CHECK(m.witnesses == expected);
  CHECK_FALSE(m.certified_exact);
  CHECK(brute_force_sup(nine_forms(), 5) == q(1, 5));
  CHECK(brute_force_sup(nine_forms(), 3) <= q(1, 5));
  CHECK_THROWS_AS(maximize(forms_of({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})), InvalidArgument);
}

TEST_CASE("quadratic example against a fine grid") {
  // x^2 - 2x - 2 has L = 1/3 (fixed point 1/3), but every finite depth
  // leaves room above it: the sup decreases towards 1/3 without reaching it.
  const auto forms = generate_forms(ip({2, 2}), 2);
  const MaxMinResult m = maximize(forms);
  CHECK(m.sup_value == q(4, 11));
  CHECK(brute_force_sup(forms, 24) == q(4, 11));
  for (const auto& w : m.witnesses) CHECK(naive_F(forms, w) == q(4, 11));
  CHECK(eval_F(forms, {q(1, 3), q(1, 3)}) == q(1, 3));
  Rat prev = q(1, 2);
  for (int k = 0; k <= 8; ++k) {
    const MaxMinResult r = certify(ip({2, 2}), maximize_recurrence(ip({2, 2}), k, q(1, 3)));
    CHECK(r.sup_value > q(1, 3));
    CHECK(r.sup_value <= prev);
    CHECK_FALSE(r.certified_exact);
    prev = r.sup_value;
  }
  CHECK(prev == q(1414, 4241));
}

TEST_CASE("vertex enumeration, branch and bound and the grid agree") {
  std::mt19937_64 g(52);
  std::uniform_int_distribution<int> c(-3, 3);
  int checked = 0;
  while (checked < 40) {
    const int d = 1 + checked % 3;
    std::vector<std::int64_t> a(static_cast<std::size_t>(d));
    for (auto& v : a) v = c(g);
    if (a.back() == 0) continue;
    const IntPoly rec(a);
    const int depth = d == 3 ? 2 : 3;
    const auto forms = generate_forms(rec, depth);
    const MaxMinResult v = maximize(forms);
    const MaxMinResult b = maximize_recurrence(rec, depth, 0);
    CHECK_MESSAGE(v.sup_value == b.sup_value, rec.to_string());
    for (const auto& w : b.witnesses) CHECK(naive_F(forms, w) == b.sup_value);
    CHECK(b.complete);
    CHECK(v.sup_value >= brute_force_sup(forms, d == 3 ? 6 : 10));
    for (const auto& w : v.witnesses) {
      CHECK(naive_F(forms, w) == v.sup_value);
      for (const auto& x : w) {
        CHECK(x >= 0);
        CHECK(x < 1);
      }
    }
    if (!v.witnesses.empty() && d <= 2) {
      Int den = 1;
      for (const auto& w : v.witnesses) den = std::max(den, common_denominator(w));
      if (den <= 30) CHECK(brute_force_sup(forms, static_cast<int>(den.get_si())) == v.sup_value);
    }
    ++checked;
  }
}

TEST_CASE("a floor below the sup does not change the result") {
  const IntPoly rec = ip({2, 1, -1});
  const MaxMinResult full = maximize_recurrence(rec, 5, 0);
  const MaxMinResult cut = maximize_recurrence(rec, 5, q(4, 13));
  CHECK(full.sup_value == cut.sup_value);
  CHECK(full.witnesses == cut.witnesses);
  CHECK(cut.nodes <= full.nodes);
}

TEST_CASE("sup decreases with depth") {
  for (auto a : std::vector<std::vector<std::int64_t>>{{1, 1}, {0, 1, 1}, {2, 1, -1}}) {
    const IntPoly rec(a);
    const Rat floor = lower_theorem2(rec).value;
    Rat prev = q(1, 2);
    for (int k = 0; k <= 8; ++k) {
      const Rat s = maximize_recurrence(rec, k, floor).sup_value;
      CHECK_MESSAGE(s <= prev, rec.to_string(), " K=", k);
      CHECK(s >= floor);
      prev = s;
    }
  }
}

TEST_CASE("certification") {
  const IntPoly rec = ip({0, 1, 1});
  const MaxMinResult c = certify(rec, maximize(nine_forms()));
  CHECK(c.certified_exact);
  REQUIRE(c.certificate);
  CHECK(c.certificate->z() == 5);
  CHECK(cycle_lower_bound(*c.certificate) == q(1, 5));

  // Too few forms: sup 1/2 at (1/2, 1/2, 1/2) but no orbit stays there.
  const MaxMinResult shallow = certify(rec, maximize_recurrence(rec, 0, 0));
  CHECK(shallow.sup_value == q(1, 2));
  CHECK_FALSE(shallow.certified_exact);
  CHECK_FALSE(shallow.certificate);

  // The golden ratio needs a few forms.
  SearchOptions o;
  o.depth = 4;
  const MaxMinResult g = solve_maxmin(ip({1, 1}), q(1, 5), o);
  CHECK(g.sup_value == q(1, 5));
  CHECK(g.certified_exact);
}

TEST_CASE("certified search on cubics") {
  SearchOptions o;
  o.auto_depth = true;
  o.max_depth = 12;
  for (auto [a, v] : std::vector<std::pair<std::vector<std::int64_t>, Rat>>{
           {{0, 1, 1}, q(1, 5)}, {{2, 1, -1}, q(4, 13)}, {{8, 1, -7}, q(106, 229)}}) {
    const IntPoly rec(a);
    const MaxMinResult m = solve_maxmin(rec, lower_theorem2(rec).value, o);
    CHECK_MESSAGE(m.certified_exact, rec.to_string());
    CHECK(m.sup_value == v);
    REQUIRE(m.certificate);
    CHECK(cycle_lower_bound(*m.certificate) == v);
    CHECK(m.depth_used >= 3);
  }
}

} // TEST_SUITE
