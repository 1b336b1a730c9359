#include "pisot/atlas.hpp"
#include "pisot/bounds.hpp"
#include "pisot/error.hpp"
#include "pisot/maxmin.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <random>

using namespace pisot;

namespace {

Rat q(std::int64_t n, std::int64_t d = 1) { return make_rat(n, d); }

IntPoly random_rec(std::mt19937_64& g, int d, int range) {
  std::uniform_int_distribution<int> c(-range, range);
  std::vector<std::int64_t> a(static_cast<std::size_t>(d));
  for (auto& v : a) v = c(g);
  if (a.back() == 0) a.back() = 1;
  return IntPoly(a);
}

} // namespace

TEST_SUITE("properties") {

TEST_CASE("closed-form cycles always satisfy the periodicity criterion") {
  std::mt19937_64 g(61);
  int built = 0;
  for (int i = 0; i < 1000; ++i) {
    IntPoly rec = random_rec(g, 1 + i % 7, 9);
    if (rec.sum() % 2 != 0) {
      auto a = rec.coeffs();
      a[0] += 1;
      rec = IntPoly(a);
    }
    for (int t : {1, 2, 4}) {
      const ResidueCycle c = construct_cycle(rec, t);
      CHECK(check_cycle(sum_profile(rec, t), c.z(), c.residues()));
      ++built;
    }
  }
  CHECK(built == 3000);
}

TEST_CASE("Pisot reports: bracket holds a root and counts add up") {
  std::mt19937_64 g(62);
  for (int i = 0; i < 400; ++i) {
    const IntPoly p = random_rec(g, 1 + i % 5, 6);
    const PisotReport r = is_pisot(p, q(1, 1 << 16));
    CHECK(r.roots_inside_disk_count + r.roots_on_circle_count + r.roots_outside_disk_count == p.degree());
    if (!r.is_pisot) continue;
    REQUIRE(r.dominant_root_bracket);
    const auto& [lo, hi] = *r.dominant_root_bracket;
    const QPoly P = p.to_qpoly();
    CHECK(lo > 1);
    CHECK(P.sign_at(lo) * P.sign_at(hi) <= 0);
    CHECK(hi - lo <= q(1, 1 << 16));
    CHECK(r.roots_inside_disk_count == p.degree() - 1);
    CHECK(r.is_irreducible);
  }
}

TEST_CASE("bound reports are ordered over the enumeration") {
  for (int d = 1; d <= 4; ++d) {
    const std::int64_t hi = d == 4 ? 3 : 6;
    for (const auto& rec : enumerate_pisot(d, -3, hi)) {
      BoundOptions o;
      o.periods = {1, 2, 4};
      o.z_max = 12;
      const BoundReport r = bound_report(rec, o);
      CHECK(r.lower.value <= r.upper.value);
      if (r.exact) {
        CHECK(r.lower.value <= r.exact->value);
        CHECK(r.exact->value <= r.upper.value);
      }
      if (r.lower_cycle) CHECK(cycle_lower_bound(*r.lower_cycle) == r.lower.value);
    }
  }
}

TEST_CASE("vertex enumeration dominates the rational grid") {
  std::mt19937_64 g(63);
  for (int i = 0; i < 50; ++i) {
    const int d = 1 + i % 3;
    const IntPoly rec = random_rec(g, d, 3);
    const auto forms = generate_forms(rec, d == 3 ? 2 : 3);
    const MaxMinResult m = maximize(forms);
    CHECK_MESSAGE(m.sup_value >= brute_force_sup(forms, 8), rec.to_string());
    for (const auto& w : m.witnesses) CHECK(eval_F(forms, w) == m.sup_value);
  }
}

TEST_CASE("certified values lie between the bounds") {
  std::mt19937_64 g(64);
  SearchOptions o;
  o.auto_depth = true;
  o.max_depth = 8;
  o.time_budget_s = 10;
  int certified = 0;
  for (const auto& rec : enumerate_pisot(3, 0, 4)) {
    if (rec.sum() % 2 != 0) continue;
    const Rat lo = lower_theorem2(rec).value;
    const MaxMinResult m = solve_maxmin(rec, lo, o);
    if (!m.complete) continue;
    CHECK(m.sup_value >= lo);
    CHECK(m.sup_value <= upper_theorem1(rec));
    if (m.certified_exact) {
      ++certified;
      REQUIRE(m.certificate);
      CHECK(cycle_lower_bound(*m.certificate) == m.sup_value);
      if (auto f = exact_formula(rec)) CHECK(f->value == m.sup_value);
    }
  }
  CHECK(certified > 10);
}

TEST_CASE("orbits close within z^d steps") {
  std::mt19937_64 g(65);
  for (int i = 0; i < 300; ++i) {
    const int d = 1 + i % 3;
    const IntPoly rec = random_rec(g, d, 5);
    std::uniform_int_distribution<std::int64_t> zd(1, 12);
    const std::int64_t z = zd(g);
    std::uniform_int_distribution<std::int64_t> r(0, z - 1);
    std::vector<std::int64_t> init(static_cast<std::size_t>(d));
    for (auto& v : init) v = r(g);
    const OrbitResult o = orbit(rec, z, init);
    const double states = std::pow(static_cast<double>(z), d);
    CHECK(static_cast<double>(o.preperiod + o.cycle.period()) <= states + d);
    CHECK(check_cycle(o.cycle.profile(), o.cycle.z(), o.cycle.residues()));
    CHECK(o.cycle_min_dist == cycle_lower_bound(o.cycle));
  }
}

TEST_CASE("max-min results do not depend on the thread count") {
  const char* old = std::getenv("PISOT_THREADS");
  const std::string saved = old ? old : "";
  const auto forms = generate_forms(IntPoly({2, 1, -1}), 4);
  std::vector<MaxMinResult> r;
  for (const char* n : {"1", "2", "7"}) {
    setenv("PISOT_THREADS", n, 1);
    r.push_back(maximize(forms));
    r.push_back(maximize_recurrence(IntPoly({3, 1, -2}), 6, 0));
  }
  if (old) setenv("PISOT_THREADS", saved.c_str(), 1);
  else unsetenv("PISOT_THREADS");
  for (std::size_t i = 2; i < r.size(); ++i) CHECK(r[i] == r[i - 2]);
}

} // TEST_SUITE
