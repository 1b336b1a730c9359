#include "pisot/rat.hpp"

#include "pisot/error.hpp"

#include <numeric>

namespace pisot {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat make_rat(std::int64_t num, std::int64_t den) {
  return make_rat(Int(static_cast<long>(num)), Int(static_cast<long>(den)));
}

Int floor_of(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Int ceil_of(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rat frac(const Rat& q) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return make_rat(r, q.get_den());
}

Rat nearest_int_dist(const Rat& q) {
  Rat f = frac(q);
  Rat g = 1 - f;
  return f < g ? f : g;
}

bool is_canonical(const Rat& q) {
  if (q.get_den() <= 0) return false;
  Int g;
  mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return g == 1;
}

std::string to_string(const Rat& q) { return q.get_str(); }

Rat parse_rat(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return InvalidArgument("not a rational number: '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw bad();
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  Int n(num), d(den);
  if (d == 0) throw bad();
  return make_rat(n, d);
}

Int common_denominator(const RatVec& v) {
  Int l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

} // namespace pisot
