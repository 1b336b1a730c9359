#include "pisot/atlas.hpp"
#include "pisot/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace pisot;

namespace {

Rat q(std::int64_t n, std::int64_t d = 1) { return make_rat(n, d); }
IntPoly ip(std::vector<std::int64_t> a) { return IntPoly(std::move(a)); }

bool pisot_stripped(const IntPoly& p) {
  bool zero = true;
  for (auto c : p.coeffs()) zero &= c == 0;
  if (zero) return false;
  return is_pisot(p.strip_trailing_zeros(), q(1, 1 << 20)).is_pisot;
}

} // namespace

TEST_SUITE("atlas") {

TEST_CASE("degree-2 region") {
  CHECK(lambda2_member(1, 1));
  CHECK_FALSE(lambda2_member(2, -1));
  CHECK(lambda2_member(3, -1));
  CHECK_FALSE(lambda2_member(1, 2));
  std::set<std::vector<std::int64_t>> closed, enumerated;
  for (auto [a1, a2] : enumerate_lambda2(-3, 12)) closed.insert({a1, a2});
  for (const auto& p : enumerate_pisot(2, -3, 12)) enumerated.insert(p.coeffs());
  CHECK(closed == enumerated);
  CHECK(closed.size() > 50);
}

TEST_CASE("degree-3 region") {
  for (std::int64_t a1 = 0; a1 <= 6; ++a1) {
    const Lambda3Result r = enumerate_lambda3(a1);
    std::vector<std::vector<std::int64_t>> members, enumerated;
    for (const auto& m : r.members) members.push_back({m[0], m[1], m[2]});
    for (const auto& p : enumerate_pisot(3, a1, a1)) enumerated.push_back(p.coeffs());
    std::sort(members.begin(), members.end());
    CHECK(members == enumerated);
    for (const auto& m : r.members) CHECK(m[2] != 0);
    for (const auto& d : r.discrepancies) {
      CHECK(d.pisot == is_pisot(ip({d.tuple[0], d.tuple[1], d.tuple[2]}), q(1, 1000)).is_pisot);
      CHECK(d.literal == lambda3_literal(d.tuple[0], d.tuple[1], d.tuple[2]));
      CHECK(d.literal != d.pisot);
    }
  }
  CHECK(enumerate_lambda3(-1).members.empty());

  const Lambda3Result two = enumerate_lambda3(2);
  bool flagged = false;
  for (const auto& d : two.discrepancies)
    if (d.tuple == std::array<std::int64_t, 3>{2, 1, -1}) {
      flagged = true;
      CHECK(d.pisot);
      CHECK_FALSE(d.literal);
    }
  CHECK(flagged);

  // a3 = 0 is never a member: x^3 - 9x^2 is not irreducible.
  for (const auto& m : enumerate_lambda3(9).members) CHECK_FALSE((m[1] == 0 && m[2] == 0));
}

TEST_CASE("enumeration box is exhaustive") {
  // Brute force over a box well beyond the root bounds.
  for (int d = 1; d <= 4; ++d) {
    const std::int64_t hi = d == 4 ? 1 : 3;
    const std::int64_t w = d == 4 ? 10 : 14;
    std::set<std::vector<std::int64_t>> brute;
    std::vector<std::int64_t> a(static_cast<std::size_t>(d));
    auto visit = [&](auto&& self, std::size_t k) -> void {
      if (k == a.size()) {
        if (a.back() != 0 && is_pisot(IntPoly(a), q(1, 1000)).is_pisot) brute.insert(a);
        return;
      }
      const std::int64_t lo = k == 0 ? -3 : -w, top = k == 0 ? hi : w;
      for (std::int64_t v = lo; v <= top; ++v) {
        a[k] = v;
        self(self, k + 1);
      }
    };
    visit(visit, 0);
    std::set<std::vector<std::int64_t>> listed;
    for (const auto& p : enumerate_pisot(d, -3, hi)) listed.insert(p.coeffs());
    CHECK_MESSAGE(listed == brute, "degree ", d);
  }
  CHECK_THROWS_AS(enumerate_pisot(5, 0, 1), UnsupportedDegree);
  CHECK_THROWS_AS(enumerate_pisot(0, 0, 1), UnsupportedDegree);
}

TEST_CASE("enumeration is lexicographic") {
  const auto v = enumerate_pisot(3, 0, 4);
  for (std::size_t i = 1; i < v.size(); ++i) CHECK(v[i - 1].coeffs() < v[i].coeffs());
}

TEST_CASE("gamma classes of cubics") {
  const GammaClass a = gamma_class(ip({4, -1, -1}));
  CHECK(a.tag == Gamma::Gamma1);
  CHECK(a.attained_value == q(2, 5));
  const GammaClass b = gamma_class(ip({2, 1, -1}));
  CHECK(b.tag == Gamma::Gamma3);
  CHECK(b.attained_value == q(4, 13));
  const GammaClass c = gamma_class(ip({4, 4, 2}));
  CHECK(c.attained_value == lower_theorem2(ip({4, 4, 2})).value);
  CHECK_THROWS_AS(gamma_class(ip({1, 1})), InvalidArgument);
  CHECK_THROWS_AS(gamma_class(ip({2, 1, 0})), InvalidArgument);
  CHECK_THROWS_AS(gamma_class(ip({1, 1, 1})), InvalidArgument);
  // The attained value is always the periodic-orbit lower bound.
  for (std::int64_t a1 = 0; a1 <= 8; ++a1)
    for (const auto& p : enumerate_pisot(3, a1, a1))
      if (p.sum() % 2 == 0) CHECK(gamma_class(p).attained_value == lower_theorem2(p).value);
}

TEST_CASE("degree-4 exceptional classes") {
  CHECK(exceptional_degree4(ip({1, 0, 0, 1})) == Exceptional::zero_bound);
  CHECK(exceptional_degree4(ip({1, 1})) == Exceptional::one_fifth);
  CHECK(exceptional_degree4(ip({0, 1, 1, 0})) == Exceptional::one_fifth);
  CHECK(exceptional_degree4(ip({2, 1, -1})) == Exceptional::four_thirteenths);
  CHECK(exceptional_degree4(ip({3, 0, 0, 1})) == Exceptional::generic);
  CHECK_THROWS_AS(exceptional_degree4(ip({1, 0, 0, 0})), InvalidArgument);
  CHECK_THROWS_AS(exceptional_degree4(ip({1, 1, 0, 0, 0})), InvalidArgument);

  // Integer solutions of the zero-bound system; only one is Pisot.
  const std::vector<std::vector<std::int64_t>> zero = {{0, 0, 0, 0}, {0, -1, 0, 1}, {1, 0, 0, 1},  {0, 0, 1, 1},
                                                       {0, 0, -1, 1}, {-1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 0, 2}};
  int pisot = 0;
  for (const auto& t : zero) {
    CHECK(exceptional_degree4(IntPoly(t)) == Exceptional::zero_bound);
    pisot += pisot_stripped(IntPoly(t));
  }
  CHECK(pisot == 1);
  CHECK(pisot_stripped(ip({1, 0, 0, 1})));
}

TEST_CASE("small-sum chain and classification agree with the bound branches") {
  for (std::int64_t a = -4; a <= 4; ++a)
    for (std::int64_t b = -4; b <= 4; ++b)
      for (std::int64_t c = -4; c <= 4; ++c)
        for (std::int64_t e = -4; e <= 4; ++e) {
          if ((a + b + c + e) % 2 != 0) continue;
          const IntPoly t({a, b, c, e});
          const LowerBound lb = lower_theorem2(t);
          CHECK(in_small_sum_chain(t) == (lb.branches[0] < q(1, 3) && lb.branches[1] < q(1, 3)));
          switch (exceptional_degree4(t)) {
            case Exceptional::zero_bound: CHECK(lb.value == 0); break;
            case Exceptional::one_fifth: CHECK(lb.value == q(1, 5)); break;
            case Exceptional::four_thirteenths: CHECK(lb.value == q(4, 13)); break;
            case Exceptional::generic:
              if (in_small_sum_chain(t)) CHECK(lb.branches[2] > q(4, 13));
              break;
          }
        }
}

TEST_CASE("names") {
  CHECK(to_string(Gamma::Gamma2) == "Gamma2");
  CHECK(to_string(Exceptional::four_thirteenths) == "four-thirteenths");
}

} // TEST_SUITE
