#include "pisot/poly.hpp"

#include "pisot/error.hpp"

#include <algorithm>
#include <sstream>

namespace pisot {

QPoly::QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(const Rat& c, std::size_t power) {
  std::vector<Rat> v(power + 1);
  v[power] = c;
  return QPoly(std::move(v));
}

QPoly QPoly::linear_root(const Rat& r) { return QPoly({-r, Rat(1)}); }

void QPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rat QPoly::operator()(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int QPoly::sign_at_infinity(bool negative) const {
  if (c_.empty()) return 0;
  int s = sgn(lead());
  if (negative && degree() % 2 == 1) s = -s;
  return s;
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return QPoly(std::move(d));
}

QPoly QPoly::monic() const {
  if (c_.empty()) return {};
  return (1 / lead()) * (*this);
}

QPoly QPoly::reciprocal() const {
  std::vector<Rat> r(c_.rbegin(), c_.rend());
  return QPoly(std::move(r));
}

QPoly QPoly::reflect() const {
  std::vector<Rat> r = c_;
  for (std::size_t k = 1; k < r.size(); k += 2) r[k] = -r[k];
  return QPoly(std::move(r));
}

QPoly QPoly::primitive() const {
  if (c_.empty()) return {};
  Int den = 1, num = 0;
  for (const auto& q : c_) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num_mpz_t());
  }
  return make_rat(den, num) * (*this);
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] += b.c_[k];
  return QPoly(std::move(r));
}

QPoly QPoly::operator-() const {
  std::vector<Rat> r = c_;
  for (auto& q : r) q = -q;
  return QPoly(std::move(r));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(r));
}

QPoly operator*(const Rat& s, const QPoly& a) {
  std::vector<Rat> r = a.c_;
  for (auto& q : r) q *= s;
  return QPoly(std::move(r));
}

std::string QPoly::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rat& q = c_[static_cast<std::size_t>(k)];
    if (sgn(q) == 0) continue;
    Rat mag = abs(q);
    if (first) {
      if (sgn(q) < 0) os << "-";
    } else {
      os << (sgn(q) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  if (a.degree() < b.degree()) return {QPoly(), a};
  std::vector<Rat> rem = a.coeffs();
  std::vector<Rat> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Rat inv_lead = 1 / b.lead();
  const auto db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = quo.size(); k-- > 0;) {
    Rat f = rem[k + db] * inv_lead;
    quo[k] = f;
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= f * b.coeffs()[j];
  }
  rem.resize(db);
  return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a.primitive(), y = b.primitive();
  while (!y.is_zero()) {
    QPoly r = divmod(x, y).second.primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

QPoly exact_div(const QPoly& a, const QPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InternalInconsistency("exact_div: nonzero remainder");
  return q;
}

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p) {
  std::vector<std::pair<QPoly, int>> out;
  if (p.degree() < 1) return out;
  QPoly f = p.monic();
  QPoly a = gcd(f, f.derivative());
  QPoly b = exact_div(f, a);
  // Yun: with b = f/a, c = f'/a, d = c - b'.
  QPoly c = exact_div(f.derivative(), a);
  QPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() >= 1) {
    QPoly g = gcd(b, d);
    if (g.degree() >= 1) out.emplace_back(g, i);
    QPoly nb = exact_div(b, g);
    c = exact_div(d, g);
    b = std::move(nb);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

} // namespace pisot
