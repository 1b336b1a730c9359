#include "pisot/roots.hpp"

#include "pisot/error.hpp"
#include "pisot/linalg.hpp"

namespace pisot {

std::vector<QPoly> sturm_sequence(const QPoly& p) {
  std::vector<QPoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p.primitive());
  QPoly d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d.primitive());
  for (;;) {
    QPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back((-r).primitive());
  }
  return seq;
}

namespace {

int variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int variations_at(const std::vector<QPoly>& seq, const std::optional<Rat>& x, bool negative_inf) {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const auto& q : seq) signs.push_back(x ? q.sign_at(*x) : q.sign_at_infinity(negative_inf));
  return variations(signs);
}

int descartes(const std::vector<Rat>& c) {
  std::vector<int> s;
  s.reserve(c.size());
  for (const auto& q : c) s.push_back(sgn(q));
  return variations(s);
}

// z^M h(z + 1/z) = g(z) for palindromic g of degree 2M.
QPoly palindromic_to_trace(const QPoly& g) {
  const int deg = g.degree();
  if (deg % 2 != 0) throw InternalInconsistency("reciprocal factor of odd degree after removing +-1");
  for (int k = 0; k <= deg; ++k)
    if (g.coeff(static_cast<std::size_t>(k)) != g.coeff(static_cast<std::size_t>(deg - k)))
      throw InternalInconsistency("reciprocal factor is not palindromic");
  const auto half = static_cast<std::size_t>(deg / 2);
  const QPoly w({Rat(0), Rat(1)});
  QPoly t_prev({Rat(2)});  // T_0 = z^0 + z^0
  QPoly t_cur = w;          // T_1
  QPoly h({g.coeff(half)});
  for (std::size_t j = 1; j <= half; ++j) {
    h = h + g.coeff(half + j) * t_cur;
    QPoly t_next = w * t_cur - t_prev;
    t_prev = std::move(t_cur);
    t_cur = std::move(t_next);
  }
  return h;
}

} // namespace

int count_real_roots(const QPoly& p, const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
  if (p.is_zero()) throw InvalidArgument("count_real_roots of the zero polynomial");
  auto seq = sturm_sequence(p);
  return variations_at(seq, lo, true) - variations_at(seq, hi, false);
}

std::pair<int, int> schur_cohn_inertia(const QPoly& q) {
  const QPoly p = q.primitive();
  const int n = p.degree();
  if (n < 1) return {0, 0};
  const auto un = static_cast<std::size_t>(n);
  RatMatrix a(un, un), b(un, un);
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      a(i, j) = p.coeff(i - j);
      b(i, j) = p.coeff(un - (i - j));
    }
  RatMatrix h(un, un);
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j < un; ++j) {
      Rat s = 0;
      for (std::size_t k = 0; k < un; ++k) s += b(k, i) * b(k, j) - a(k, i) * a(k, j);
      h(i, j) = s;
    }
  auto chi = characteristic_polynomial(h);
  const int pos = descartes(chi);
  const int neg = descartes(QPoly(chi).reflect().coeffs());
  return {pos, neg};
}

DiskCount count_unit_disk(const QPoly& p) {
  if (p.is_zero()) throw InvalidArgument("count_unit_disk of the zero polynomial");
  DiskCount total;
  QPoly f = p;
  while (f.degree() >= 1 && sgn(f.coeff(0)) == 0) {
    f = QPoly(std::vector<Rat>(f.coeffs().begin() + 1, f.coeffs().end()));
    ++total.inside;
  }
  for (auto& [part, mult] : squarefree_decomposition(f)) {
    DiskCount c;
    QPoly s = part;
    for (int root : {1, -1}) {
      if (s.sign_at(Rat(root)) == 0) {
        s = exact_div(s, QPoly::linear_root(Rat(root)));
        ++c.on;
      }
    }
    if (s.degree() >= 1) {
      QPoly g = gcd(s, s.reciprocal());
      QPoly rest = exact_div(s, g);
      if (rest.degree() >= 1) {
        auto [pos, neg] = schur_cohn_inertia(rest);
        if (pos + neg != rest.degree())
          throw InternalInconsistency("singular Schur-Cohn form on a reciprocal-free factor");
        c.inside += pos;
        c.outside += neg;
      }
      if (g.degree() >= 1) {
        QPoly h = palindromic_to_trace(g);
        const int half = h.degree();
        const int circle = count_real_roots(h, Rat(-2), Rat(2));
        c.on += 2 * circle;
        c.inside += half - circle;
        c.outside += half - circle;
      }
    }
    total.inside += mult * c.inside;
    total.on += mult * c.on;
    total.outside += mult * c.outside;
  }
  return total;
}

std::pair<Rat, Rat> refine_root(const QPoly& p, Rat lo, Rat hi, const Rat& width) {
  if (sgn(width) <= 0) throw InvalidArgument("refine_root: width must be positive");
  const int slo = p.sign_at(lo);
  const int shi = p.sign_at(hi);
  if (slo == 0) return {lo, lo};
  if (shi == 0) return {hi, hi};
  if (slo == shi) throw InvalidArgument("refine_root: no sign change on the interval");
  while (hi - lo > width) {
    Rat mid = (lo + hi) / 2;
    const int sm = p.sign_at(mid);
    if (sm == 0) return {mid, mid};
    (sm == slo ? lo : hi) = mid;
  }
  return {lo, hi};
}

} // namespace pisot
