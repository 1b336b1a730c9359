#include "pisot/cycles.hpp"
#include "pisot/error.hpp"
#include "pisot/pisot.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace pisot;

namespace {

Rat q(std::int64_t n, std::int64_t d = 1) { return make_rat(n, d); }
IntPoly ip(std::vector<std::int64_t> a) { return IntPoly(std::move(a)); }

// Reference check of the periodicity criterion by running the recurrence
// around the cycle twice.
bool simulate_cycle(const IntPoly& rec, std::int64_t z, const std::vector<std::int64_t>& r) {
  const std::size_t t = r.size();
  const int d = rec.degree();
  for (std::size_t i = 0; i < t; ++i) {
    __int128 s = 0;
    for (int k = 1; k <= d; ++k) s += static_cast<__int128>(rec.a(k)) * r[(i + t * static_cast<std::size_t>(d) - static_cast<std::size_t>(k)) % t];
    s %= z;
    if (s < 0) s += z;
    if (static_cast<std::int64_t>(s) != r[i]) return false;
  }
  return true;
}

} // namespace

TEST_SUITE("cycles") {

TEST_CASE("sum profiles") {
  CHECK(sum_profile(ip({0, 1, 1}), 2) == SumProfile{2, {1, 1}});
  CHECK(sum_profile(ip({2, 1, -1}), 4) == SumProfile{4, {2, 1, -1, 0}});
  CHECK(sum_profile(ip({1, 0, 0, 1}), 1) == SumProfile{1, {2}});
  CHECK(sum_profile(ip({1, 0, 0, 1}), 8) == SumProfile{8, {1, 0, 0, 1, 0, 0, 0, 0}});
  std::mt19937_64 g(31);
  std::uniform_int_distribution<int> c(-9, 9);
  for (int i = 0; i < 200; ++i) {
    std::vector<std::int64_t> a(static_cast<std::size_t>(1 + i % 6));
    for (auto& v : a) v = c(g);
    const IntPoly rec(a);
    const SumProfile p = sum_profile(rec, 1 + i % 9);
    std::int64_t s = 0;
    for (auto v : p.s) s += v;
    CHECK(s == rec.sum());
  }
}

TEST_CASE("check_cycle examples") {
  CHECK(check_cycle(SumProfile{8, {1, 0, 0, 1, 0, 0, 0, 0}}, 17, {3, 10, 5, 11, 14, 7, 12, 6}));
  CHECK(check_cycle(sum_profile(ip({2, 1, -1}), 4), 13, {4, 6, 9, 7}));
  CHECK_FALSE(check_cycle(sum_profile(ip({0, 1, 1}), 1), 5, {1}));
  CHECK_THROWS_AS(check_cycle(sum_profile(ip({0, 1, 1}), 1), 0, {1}), InvalidArgument);
  CHECK_THROWS_AS(check_cycle(sum_profile(ip({0, 1, 1}), 2), 5, {1}), InvalidArgument);
}

TEST_CASE("check_cycle agrees with direct simulation") {
  std::mt19937_64 g(32);
  std::uniform_int_distribution<int> c(-4, 4);
  int valid = 0;
  for (int i = 0; i < 3000; ++i) {
    std::vector<std::int64_t> a(static_cast<std::size_t>(1 + i % 4));
    for (auto& v : a) v = c(g);
    const IntPoly rec(a);
    const int t = 1 + i % 5;
    const std::int64_t z = 2 + i % 7;
    std::uniform_int_distribution<std::int64_t> r(0, z - 1);
    std::vector<std::int64_t> res(static_cast<std::size_t>(t));
    for (auto& v : res) v = r(g);
    const bool expect = simulate_cycle(rec, z, res);
    valid += expect;
    CHECK(check_cycle(sum_profile(rec, t), z, res) == expect);
  }
  CHECK(valid > 50);
}

TEST_CASE("rotations of a cycle are cycles") {
  const SumProfile p{8, {1, 0, 0, 1, 0, 0, 0, 0}};
  std::vector<std::int64_t> r{3, 10, 5, 11, 14, 7, 12, 6};
  for (int k = 0; k < 8; ++k) {
    std::rotate(r.begin(), r.begin() + 1, r.end());
    CHECK(check_cycle(p, 17, r));
  }
}

TEST_CASE("residue cycle validation") {
  const SumProfile p = sum_profile(ip({2, 1, -1}), 4);
  CHECK_NOTHROW(ResidueCycle(p, 13, {4, 6, 9, 7}));
  CHECK_THROWS_AS(ResidueCycle(p, 13, {4, 6, 9, 8}), InvalidArgument);
  CHECK_THROWS_AS(ResidueCycle(p, 13, {4, 6, 9, 20}), InvalidArgument);
  CHECK_THROWS_AS(ResidueCycle(p, -13, {4, 6, 9, 7}), InvalidArgument);
  const ResidueCycle trivial;
  CHECK(trivial.z() == 1);
  CHECK(cycle_lower_bound(trivial) == 0);
  const ResidueCycle c(p, 13, {4, 6, 9, 7});
  CHECK(c.values() == RatVec{q(4, 13), q(6, 13), q(9, 13), q(7, 13)});
  CHECK(cycle_lower_bound(c) == q(4, 13));
  CHECK(cycle_lower_bound(ResidueCycle(sum_profile(ip({2, 2, 1, -1}), 4), 17, {6, 10, 11, 7})) == q(6, 17));
  CHECK(cycle_lower_bound(ResidueCycle(sum_profile(ip({1, 1}), 1), 5, {0})) == 0);
}

TEST_CASE("closed-form cycles") {
  const ResidueCycle c1 = construct_cycle(ip({2, 2}), 1);
  CHECK(c1.values() == RatVec{q(1, 3)});
  const ResidueCycle c4 = construct_cycle(ip({2, 2, 1, -1}), 4);
  CHECK(c4.z() == 17);
  CHECK(c4.residues() == std::vector<std::int64_t>{6, 10, 11, 7});
  const ResidueCycle c = construct_cycle(ip({0, 1, 1}), 4);
  CHECK(c.z() == 5);
  CHECK(cycle_lower_bound(c) == q(1, 5));
  CHECK(cycle_lower_bound(construct_cycle(ip({2, 1, -1}), 4)) == q(4, 13));
  // Every vanishing denominator forces an odd sum, which is rejected first.
  CHECK_THROWS_AS(construct_cycle(ip({1, 0}), 1), InvalidArgument);
  CHECK_THROWS_AS(construct_cycle(ip({1, 2}), 2), InvalidArgument);
  CHECK_THROWS_AS(construct_cycle(ip({1, 0, 1, 1}), 4), InvalidArgument);
  CHECK_THROWS_AS(construct_cycle(ip({2, 2}), 3), InvalidArgument);
}

TEST_CASE("cycle search examples") {
  const CycleSearchResult r8 = search_cycles(ip({1, 0, 0, 1}), 8, 17);
  REQUIRE(r8.best);
  CHECK(r8.min_dist == q(3, 17));
  CHECK(r8.best->z() == 17);
  CHECK(r8.exhaustive);

  const CycleSearchResult r4 = search_cycles(ip({0, 1, 1}), 4, 5);
  REQUIRE(r4.best);
  CHECK(r4.min_dist == q(1, 5));

  const CycleSearchResult r3 = search_cycles(ip({2, 1, -1}), 4, 13);
  REQUIRE(r3.best);
  CHECK(r3.min_dist == q(4, 13));

  const CycleSearchResult none = search_cycles(ip({0, 1, 1}), 1, 4);
  CHECK_FALSE(none.best);
  CHECK(none.min_dist == 0);
}

TEST_CASE("cycle search is exhaustive on small moduli") {
  // Brute force over every residue vector for small t and z.
  std::mt19937_64 g(33);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::int64_t> a(static_cast<std::size_t>(1 + trial % 3));
    for (auto& v : a) v = c(g);
    const IntPoly rec(a);
    const int t = 1 + trial % 4;
    const std::int64_t zmax = 9;
    Rat best = 0;
    for (std::int64_t z = 2; z <= zmax; ++z) {
      std::vector<std::int64_t> r(static_cast<std::size_t>(t), 0);
      for (;;) {
        if (simulate_cycle(rec, z, r)) {
          Rat m = q(1, 2);
          for (auto v : r) m = std::min(m, nearest_int_dist(make_rat(v, z)));
          best = std::max(best, m);
        }
        std::size_t j = 0;
        while (j < r.size() && r[j] == z - 1) r[j++] = 0;
        if (j == r.size()) break;
        ++r[j];
      }
    }
    const CycleSearchResult s = search_cycles(rec, t, zmax);
    CHECK_MESSAGE(s.min_dist == best, rec.to_string(), " t=", t);
    if (s.best) CHECK(check_cycle(s.best->profile(), s.best->z(), s.best->residues()));
  }
}

TEST_CASE("search dominates the closed-form cycles") {
  for (auto a : std::vector<std::vector<std::int64_t>>{{2, 1, -1}, {0, 1, 1}, {1, 1}, {3, 1, -2}, {2, 2, 1, -1}, {4, -1, -1}}) {
    const IntPoly rec(a);
    for (int t : {1, 2, 4}) {
      ResidueCycle c;
      try {
        c = construct_cycle(rec, t);
      } catch (const DegenerateCycle&) {
        continue;
      }
      const CycleSearchResult s = search_cycles(rec, 4, std::max<std::int64_t>(c.z(), 2));
      CHECK(s.min_dist >= cycle_lower_bound(c));
    }
  }
}

TEST_CASE("same sum profile, same cycles") {
  // Moving a coefficient by a multiple of t keeps the profile.
  const std::vector<std::pair<IntPoly, IntPoly>> pairs = {
      {ip({1, 0, 0, 1}), ip({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1})},          // t = 8: a_4 moved to a_12
      {ip({2, 1, -1}), ip({2, 1, 0, 0, 0, 0, -1})},                           // t = 4: a_3 moved to a_7
      {ip({0, 1, 1}), ip({0, 1, 0, 0, 0, 0, 0, 1})},                          // t = 5: a_3 moved to a_8
  };
  const int ts[] = {8, 4, 5};
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const int t = ts[i];
    REQUIRE(sum_profile(pairs[i].first, t) == sum_profile(pairs[i].second, t));
    const auto a = search_cycles(pairs[i].first, t, 20);
    const auto b = search_cycles(pairs[i].second, t, 20);
    CHECK(a.min_dist == b.min_dist);
    CHECK(a.best == b.best);
    if (a.best) CHECK(simulate_cycle(pairs[i].second, a.best->z(), a.best->residues()));
  }
}

TEST_CASE("orbit examples") {
  const OrbitResult o = orbit(ip({0, 1, 1}), 5, {1, 2, 4});
  CHECK(o.preperiod == 0);
  CHECK(o.cycle.residues() == std::vector<std::int64_t>{1, 2, 4, 3});
  CHECK(o.cycle_min_dist == q(1, 5));

  const OrbitResult f = orbit(ip({2, 2}), 3, {1, 1});
  CHECK(f.cycle.residues() == std::vector<std::int64_t>{1});
  CHECK(f.cycle_min_dist == q(1, 3));

  const OrbitResult z1 = orbit(ip({3, -1, 2}), 1, {0, 0, 0});
  CHECK(z1.cycle.residues() == std::vector<std::int64_t>{0});
  CHECK(z1.cycle_min_dist == 0);

  // x_n = 2 x_{n-1} mod 4 from 1: 1, 2, 0, 0, ...
  const OrbitResult pre = orbit(ip({2}), 4, {1});
  CHECK(pre.preperiod == 2);
  CHECK(pre.cycle.residues() == std::vector<std::int64_t>{0});
  CHECK_THROWS_AS(orbit(ip({1, 1}), 5, {1}), InvalidArgument);
}

TEST_CASE("orbit from a cycle reproduces it") {
  std::mt19937_64 g(34);
  std::uniform_int_distribution<int> c(-5, 5);
  for (int i = 0; i < 300; ++i) {
    std::vector<std::int64_t> a(static_cast<std::size_t>(2 + i % 3));
    for (auto& v : a) v = c(g);
    if (a.back() == 0 || (IntPoly(a).sum() % 2) != 0) continue;
    const IntPoly rec(a);
    for (int t : {1, 2, 4}) {
      ResidueCycle cyc;
      try {
        cyc = construct_cycle(rec, t);
      } catch (const DegenerateCycle&) {
        continue;
      }
      std::vector<std::int64_t> init;
      for (int k = 0; k < rec.degree(); ++k) init.push_back(cyc.residues()[static_cast<std::size_t>(k % t)]);
      const OrbitResult o = orbit(rec, cyc.z(), init);
      CHECK(o.preperiod == 0);
      const auto& r = o.cycle.residues();
      REQUIRE(t % static_cast<int>(r.size()) == 0);
      for (int k = 0; k < t; ++k) CHECK(r[static_cast<std::size_t>(k) % r.size()] == cyc.residues()[static_cast<std::size_t>(k)]);
      CHECK(o.cycle_min_dist == cycle_lower_bound(cyc));
    }
  }
}

} // TEST_SUITE
