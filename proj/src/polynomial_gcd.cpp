// Multivariate GCD over the rationals. A polynomial is viewed as univariate
// in a main variable with coefficients in the ring of the remaining
// variables; contents are extracted recursively and the main loop runs a
// subresultant remainder sequence on integer-primitive inputs.

#include <algorithm>
#include <stdexcept>

#include "jonq/polynomial.hpp"

namespace jonq {
namespace {

using UPoly = std::vector<Polynomial>;  // coefficients by degree

Polynomial gcd_rec(const Polynomial& p, const Polynomial& q);

void trim(UPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

// Field Euclid for polynomials whose coefficients are all constants.
std::vector<Rational> univariate_gcd(std::vector<Rational> a, std::vector<Rational> b) {
  auto strip = [](std::vector<Rational>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  strip(a);
  strip(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    // a <- a mod b
    const Rational inv = 1 / b.back();
    while (a.size() >= b.size()) {
      const Rational factor = a.back() * inv;
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
      a.pop_back();
      strip(a);
    }
    if (!a.empty()) {
      const Rational s = 1 / a.back();
      for (auto& x : a) x *= s;
    }
    std::swap(a, b);
  }
  return a;
}

// Rescales by a positive rational so that all coefficients become coprime
// integers. Without this the remainders of the sequence grow exponentially.
void clear_rational_content(UPoly& a) {
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& c : a)
    for (const auto& t : c.terms()) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
  if (num_gcd == 0 || (num_gcd == 1 && den_lcm == 1)) return;
  Rational s(den_lcm, num_gcd);
  s.canonicalize();
  for (auto& x : a) x *= s;
}

Polynomial content(const UPoly& a) {
  Polynomial g;
  for (const auto& c : a) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : gcd_rec(g, c);
    if (g.is_constant()) return Polynomial(1);
  }
  return g;
}

UPoly primitive_part(UPoly a) {
  const Polynomial c = content(a);
  if (!c.is_constant())
    for (auto& x : a) x = *divide_exact(x, c);
  clear_rational_content(a);
  return a;
}

// prem(a, b) = lc(b)^(deg a - deg b + 1) * a mod b.
UPoly pseudo_remainder(UPoly a, const UPoly& b) {
  const Polynomial& lb = b.back();
  std::size_t missing = a.size() - b.size() + 1;
  while (a.size() >= b.size()) {
    const Polynomial la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& x : a) x *= lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= la * b[i];
    a.pop_back();
    trim(a);
    --missing;
  }
  if (!a.empty())
    for (std::size_t k = 0; k < missing; ++k)
      for (auto& x : a) x *= lb;
  return a;
}

Polynomial power(const Polynomial& p, std::size_t e) {
  Polynomial r(1);
  for (std::size_t k = 0; k < e; ++k) r *= p;
  return r;
}

Polynomial gcd_rec(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero()) return q;
  if (q.is_zero()) return p;
  if (p.is_constant() || q.is_constant()) return Polynomial(1);
  if (p == q) return p;

  // Monomial factors split off exactly: gcd(m p', n q') = gcd(m, n) gcd(p', q').
  const Monomial mp = p.monomial_content();
  const Monomial mq = q.monomial_content();
  if (!mp.is_one() || !mq.is_one()) {
    const Monomial mg = Monomial::gcd(mp, mq);
    const Polynomial pp = p.is_monomial() ? Polynomial(1) : *divide_exact(p, Polynomial::monomial(mp));
    const Polynomial qq = q.is_monomial() ? Polynomial(1) : *divide_exact(q, Polynomial::monomial(mq));
    return Polynomial::monomial(mg) * gcd_rec(pp, qq);
  }

  const std::vector<Var> vp = p.variables();
  const std::vector<Var> vq = q.variables();
  // A variable present in only one argument cannot occur in the gcd.
  for (int side = 0; side < 2; ++side) {
    const auto& mine = side == 0 ? vp : vq;
    const auto& other = side == 0 ? vq : vp;
    for (Var v : mine) {
      if (std::binary_search(other.begin(), other.end(), v)) continue;
      const Polynomial& src = side == 0 ? p : q;
      Polynomial g = side == 0 ? q : p;
      for (const auto& c : src.coefficients_in(v)) {
        if (c.is_zero()) continue;
        g = gcd_rec(g, c);
        if (g.is_constant()) return Polynomial(1);
      }
      return g;
    }
  }

  // Same variable set. Pick the main variable with the smallest joint degree.
  Var main = vp.front();
  std::uint32_t best = ~0u;
  for (Var v : vp) {
    std::uint32_t d = p.degree(v) + q.degree(v);
    if (d < best) {
      best = d;
      main = v;
    }
  }

  if (vp.size() == 1) {
    auto to_dense = [main](const Polynomial& f) {
      std::vector<Rational> out(f.degree(main) + 1);
      for (const auto& t : f.terms()) out[t.monomial.degree(main)] = t.coeff;
      return out;
    };
    std::vector<Rational> g = univariate_gcd(to_dense(p), to_dense(q));
    std::vector<Term> terms;
    for (std::size_t e = 0; e < g.size(); ++e)
      if (g[e] != 0) terms.push_back(Term{Monomial::of(main, static_cast<std::uint32_t>(e)), g[e]});
    return Polynomial::from_terms(std::move(terms));
  }

  UPoly a = p.coefficients_in(main);
  UPoly b = q.coefficients_in(main);
  const Polynomial ca = content(a);
  const Polynomial cb = content(b);
  const Polynomial c = gcd_rec(ca, cb);
  if (!ca.is_constant())
    for (auto& x : a) x = *divide_exact(x, ca);
  if (!cb.is_constant())
    for (auto& x : b) x = *divide_exact(x, cb);
  clear_rational_content(a);
  clear_rational_content(b);
  if (a.size() < b.size()) std::swap(a, b);

  // Subresultant sequence: every division below is exact in the coefficient
  // ring, so no content has to be computed until the end.
  UPoly g;
  Polynomial lead(1), h(1);
  for (;;) {
    const std::size_t delta = a.size() - b.size();
    UPoly r = pseudo_remainder(a, b);
    if (r.empty()) {
      g = std::move(b);
      break;
    }
    if (r.size() == 1) {
      g = UPoly{Polynomial(1)};
      break;
    }
    const Polynomial divisor = lead * power(h, delta);
    if (!divisor.is_constant() || divisor.leading_coefficient() != 1)
      for (auto& x : r) x = *divide_exact(x, divisor);
    a = std::move(b);
    b = std::move(r);
    lead = a.back();
    if (delta > 0) h = *divide_exact(power(lead, delta), power(h, delta - 1));
  }
  if (g.size() > 1) g = primitive_part(std::move(g));
  return c * Polynomial::from_coefficients(main, g);
}

}  // namespace

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd undefined");
  return gcd_rec(p, q).monic();
}

}  // namespace jonq
