#include "pisot/pisot.hpp"

#include "pisot/error.hpp"

#include <cstdlib>
#include <sstream>

namespace pisot {

IntPoly::IntPoly(std::vector<std::int64_t> a) : a_(std::move(a)) {
  if (a_.empty()) throw InvalidArgument("polynomial degree must be at least 1");
}

std::int64_t IntPoly::sum() const {
  std::int64_t s = 0;
  for (auto v : a_) s += v;
  return s;
}

std::int64_t IntPoly::abs_sum() const {
  std::int64_t s = 0;
  for (auto v : a_) s += std::llabs(v);
  return s;
}

QPoly IntPoly::to_qpoly() const {
  const std::size_t d = a_.size();
  std::vector<Rat> c(d + 1);
  c[d] = 1;
  for (std::size_t i = 1; i <= d; ++i) c[d - i] = Rat(-a_[i - 1]);
  return QPoly(std::move(c));
}

IntPoly IntPoly::strip_trailing_zeros() const {
  std::vector<std::int64_t> a = a_;
  while (a.size() > 1 && a.back() == 0) a.pop_back();
  return IntPoly(std::move(a));
}

std::string IntPoly::to_string() const { return to_qpoly().to_string('x'); }

namespace {

IntPoly from_monic(const QPoly& q) {
  if (q.degree() < 1 || q.lead() != 1) throw InternalInconsistency("expected a monic polynomial");
  const auto d = static_cast<std::size_t>(q.degree());
  std::vector<std::int64_t> a(d);
  for (std::size_t i = 1; i <= d; ++i) {
    Rat c = -q.coeff(d - i);
    if (c.get_den() != 1 || !c.get_num().fits_slong_p())
      throw InternalInconsistency("non-integer coefficient in a family polynomial");
    a[i - 1] = c.get_num().get_si();
  }
  return IntPoly(std::move(a));
}

std::vector<Int> divisors(Int n) {
  n = abs(n);
  std::vector<Int> out;
  for (Int k = 1; k * k <= n; ++k) {
    if (n % k == 0) {
      out.push_back(k);
      if (k * k != n) out.push_back(n / k);
    }
  }
  return out;
}

bool has_integer_root(const QPoly& q) {
  for (const Int& r : divisors(q.coeff(0).get_num())) {
    if (q.sign_at(Rat(r)) == 0 || q.sign_at(Rat(-r)) == 0) return true;
  }
  return false;
}

bool is_perfect_square(const Int& n, Int& root) {
  if (n < 0) return false;
  root = sqrt(n);
  return root * root == n;
}

// x^4 + c3 x^3 + c2 x^2 + c1 x + c0 = (x^2 + b x + c)(x^2 + e x + f)
bool has_quadratic_factor(const QPoly& q) {
  const Int c0 = q.coeff(0).get_num(), c1 = q.coeff(1).get_num();
  const Int c2 = q.coeff(2).get_num(), c3 = q.coeff(3).get_num();
  for (const Int& m : divisors(c0)) {
    for (const Int& c : {m, Int(-m)}) {
      const Int f = c0 / c;
      if (f != c) {
        // b f + c (c3 - b) = c1
        const Int num = c1 - c * c3, den = f - c;
        if (num % den != 0) continue;
        const Int b = num / den, e = c3 - b;
        if (c + f + b * e == c2) return true;
      } else {
        if (c1 != c * c3) continue;
        // b + e = c3, b e = c2 - 2c
        Int r;
        if (is_perfect_square(c3 * c3 - 4 * (c2 - 2 * c), r) && (c3 + r) % 2 == 0) return true;
      }
    }
  }
  return false;
}

} // namespace

std::string to_string(PisotFailure f) {
  switch (f) {
    case PisotFailure::none: return "none";
    case PisotFailure::reducible: return "reducible";
    case PisotFailure::no_dominant_root: return "no-dominant-root";
    case PisotFailure::conjugate_on_or_outside_circle: return "conjugate-on-or-outside-circle";
    case PisotFailure::zero_constant_term: return "zero-constant-term";
  }
  return "none";
}

PisotFailure parse_pisot_failure(const std::string& s) {
  for (auto f : {PisotFailure::none, PisotFailure::reducible, PisotFailure::no_dominant_root,
                 PisotFailure::conjugate_on_or_outside_circle, PisotFailure::zero_constant_term})
    if (to_string(f) == s) return f;
  throw InvalidArgument("unknown failure reason: " + s);
}

bool is_irreducible_low_degree(const IntPoly& p) {
  const int d = p.degree();
  if (d > 4) throw UnsupportedDegree("irreducibility test implemented for degree <= 4 only");
  if (d == 1) return true;
  if (p.a(d) == 0) return false;
  const QPoly q = p.to_qpoly();
  if (has_integer_root(q)) return false;
  if (d <= 3) return true;
  return !has_quadratic_factor(q);
}

bool rouche_sufficient(const IntPoly& p) {
  std::int64_t tail = 0;
  for (int i = 2; i <= p.degree(); ++i) tail += std::llabs(p.a(i));
  return 1 + p.sum() < 0 && std::llabs(p.a(1)) > 1 + tail;
}

PisotReport is_pisot(const IntPoly& p, const Rat& bracket_width) {
  if (sgn(bracket_width) <= 0) throw InvalidArgument("bracket width must be positive");
  const int d = p.degree();
  PisotReport r;
  const QPoly q = p.to_qpoly();
  const DiskCount disk = count_unit_disk(q);
  r.roots_inside_disk_count = disk.inside;
  r.roots_on_circle_count = disk.on;
  r.roots_outside_disk_count = disk.outside;
  r.real_roots_above_one = count_real_roots(q, Rat(1), std::nullopt);

  if (d <= 4) {
    r.is_irreducible = is_irreducible_low_degree(p);
  } else {
    r.is_irreducible = false;
    r.irreducibility_known = false;
  }

  if (p.a(d) == 0) {
    r.failure_reason = PisotFailure::zero_constant_term;
    r.is_irreducible = d == 1;
    r.irreducibility_known = true;
    return r;
  }
  const bool roots_ok = r.real_roots_above_one == 1 && disk.inside == d - 1;
  if (roots_ok && !r.irreducibility_known) {
    r.is_irreducible = true;
    r.irreducibility_known = true;
  }
  if (r.irreducibility_known && !r.is_irreducible) {
    r.failure_reason = PisotFailure::reducible;
    if (roots_ok) throw InternalInconsistency("reducible polynomial passed the root conditions");
    return r;
  }
  if (!roots_ok) {
    r.failure_reason = r.real_roots_above_one == 0 ? PisotFailure::no_dominant_root
                                                   : PisotFailure::conjugate_on_or_outside_circle;
    return r;
  }
  r.is_pisot = true;

  // The root lies in (1, 1 + max|a_i|); P(1) < 0 < P(bound).
  std::int64_t m = 0;
  for (auto v : p.coeffs()) m = std::max<std::int64_t>(m, std::llabs(v));
  Rat lo = 1, hi = Rat(1 + m);
  const int slo = q.sign_at(lo);
  if (slo >= 0 || q.sign_at(hi) <= 0) throw InternalInconsistency("dominant root not bracketed by the Cauchy bound");
  while (hi - lo > bracket_width || lo == 1) {
    Rat mid = (lo + hi) / 2;
    const int s = q.sign_at(mid);
    if (s == 0) {
      lo = hi = mid;
      break;
    }
    (s < 0 ? lo : hi) = mid;
  }
  r.dominant_root_bracket = std::make_pair(lo, hi);
  return r;
}

IntPoly small_pisot_family(Family kind, int k) {
  if (kind != Family::T_doubleprime && k <= 0) throw InvalidArgument("family index must be positive");
  const QPoly golden({Rat(-1), Rat(-1), Rat(1)});
  const QPoly one({Rat(1)});
  switch (kind) {
    case Family::T_even: {
      // (x^{2p}(x^2 - x - 1) + 1) / (x - 1) = x^{2p+1} - (1 + x + ... + x^{2p-1})
      const auto n = static_cast<std::size_t>(2 * k);
      IntPoly q = from_monic(exact_div(QPoly::monomial(Rat(1), n) * golden + one, QPoly::linear_root(Rat(1))));
      std::vector<std::int64_t> a(n + 1, 1);
      a[0] = 0;
      if (!(q == IntPoly(a))) throw InternalInconsistency("T_even expansion mismatch");
      return q;
    }
    case Family::T_odd: {
      // (x^{2p+1}(x^2 - x - 1) + 1) / (x^2 - 1) = x^{2p+1} - (1 + x^2 + ... + x^{2p})
      const auto n = static_cast<std::size_t>(2 * k + 1);
      const QPoly den({Rat(-1), Rat(0), Rat(1)});
      IntPoly q = from_monic(exact_div(QPoly::monomial(Rat(1), n) * golden + one, den));
      std::vector<std::int64_t> a(n, 0);
      for (std::size_t i = 1; i <= n; i += 2) a[i - 1] = 1;
      if (!(q == IntPoly(a))) throw InternalInconsistency("T_odd expansion mismatch");
      return q;
    }
    case Family::T_prime: {
      // -(1 - x^2 + x^k (1 + x - x^2))
      const auto n = static_cast<std::size_t>(k);
      QPoly t = one - QPoly::monomial(Rat(1), 2) + QPoly::monomial(Rat(1), n) * QPoly({Rat(1), Rat(1), Rat(-1)});
      return from_monic(-t);
    }
    case Family::T_doubleprime: {
      QPoly t({Rat(1), Rat(-1), Rat(1), Rat(0), Rat(-1), Rat(2), Rat(-1)});
      return from_monic(-t);
    }
  }
  throw InvalidArgument("unknown family");
}

} // namespace pisot
