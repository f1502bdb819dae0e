#include "jonq/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace jonq {

std::string Var::name() const {
  if (!is_parameter()) return "x" + std::to_string(code_);
  switch (code_ - kParameterBase) {
    case 1: return "u";
    case 2: return "v";
    case 3: return "a1";
    case 4: return "a2";
    case 5: return "t";
    default: return "p" + std::to_string(code_ - kParameterBase);
  }
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::of(Var v, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) {
    m.factors_.emplace_back(v, exponent);
    m.total_ = exponent;
  }
  return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial m;
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == v)
      m.factors_.back().second += e;
    else
      m.factors_.emplace_back(v, e);
    m.total_ += e;
  }
  return m;
}

std::uint32_t Monomial::degree(Var v) const {
  for (const auto& [w, e] : factors_) {
    if (w == v) return e;
    if (v < w) break;
  }
  return 0;
}

bool Monomial::divides(const Monomial& other) const {
  if (total_ > other.total_) return false;
  auto it = other.factors_.begin();
  for (const auto& [v, e] : factors_) {
    while (it != other.factors_.end() && it->first < v) ++it;
    if (it == other.factors_.end() || it->first != v || it->second < e) return false;
  }
  return true;
}

Monomial Monomial::divided_by(const Monomial& divisor) const {
  Monomial out;
  auto it = divisor.factors_.begin();
  for (const auto& [v, e] : factors_) {
    std::uint32_t sub = 0;
    if (it != divisor.factors_.end() && it->first == v) {
      sub = it->second;
      ++it;
    }
    if (e > sub) out.factors_.emplace_back(v, e - sub);
  }
  out.total_ = total_ - divisor.total_;
  return out;
}

Monomial Monomial::without(Var v) const {
  Monomial out;
  for (const auto& f : factors_) {
    if (f.first == v) continue;
    out.factors_.push_back(f);
    out.total_ += f.second;
  }
  return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() && ib != b.factors_.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      std::uint32_t e = std::min(ia->second, ib->second);
      out.factors_.emplace_back(ia->first, e);
      out.total_ += e;
      ++ia;
      ++ib;
    }
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first)) {
      out.factors_.push_back(*ia++);
    } else if (ia == a.factors_.end() || ib->first < ia->first) {
      out.factors_.push_back(*ib++);
    } else {
      out.factors_.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  out.total_ = a.total_ + b.total_;
  return out;
}

std::strong_ordering grlex(const Monomial& a, const Monomial& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() <=> b.total_degree();
  auto fa = a.factors();
  auto fb = b.factors();
  std::size_t i = 0;
  for (; i < fa.size() && i < fb.size(); ++i) {
    if (fa[i].first != fb[i].first) {
      // The monomial carrying the earlier (heavier) variable is larger.
      return fa[i].first < fb[i].first ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (fa[i].second != fb[i].second) return fa[i].second <=> fb[i].second;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

// Merge two sorted term lists: a + sign * b.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    std::strong_ordering ord = std::strong_ordering::equal;
    if (i == a.size())
      ord = std::strong_ordering::less;
    else if (j == b.size())
      ord = std::strong_ordering::greater;
    else
      ord = grlex(a[i].monomial, b[j].monomial);
    if (ord > 0) {
      out.push_back(a[i++]);
    } else if (ord < 0) {
      out.push_back(b[j]);
      if (subtract) out.back().coeff = -out.back().coeff;
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back(Term{a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.push_back(Term{Monomial(), c});
}

Polynomial Polynomial::variable(Var v) { return monomial(Monomial::of(v)); }

Polynomial Polynomial::monomial(Monomial m, Rational c) {
  Polynomial p;
  if (c != 0) p.terms_.push_back(Term{std::move(m), std::move(c)});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex(a.monomial, b.monomial) > 0; });
  Polynomial p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

Polynomial Polynomial::from_coefficients(Var v, std::span<const Polynomial> coeffs) {
  std::vector<Term> terms;
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    const Monomial shift = Monomial::of(v, static_cast<std::uint32_t>(e));
    for (const auto& t : coeffs[e].terms_) terms.push_back(Term{t.monomial * shift, t.coeff});
  }
  return from_terms(std::move(terms));
}

Rational Polynomial::constant_value() const {
  if (!is_constant()) throw std::logic_error("polynomial is not constant");
  return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

std::uint32_t Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().monomial.total_degree();
}

std::uint32_t Polynomial::degree(Var v) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree(v));
  return d;
}

std::uint32_t Polynomial::valuation(Var v) const {
  if (terms_.empty()) return 0;
  std::uint32_t d = terms_.front().monomial.degree(v);
  for (const auto& t : terms_) d = std::min(d, t.monomial.degree(v));
  return d;
}

std::vector<Var> Polynomial::variables() const {
  std::vector<Var> vars;
  for (const auto& t : terms_)
    for (const auto& f : t.monomial.factors()) vars.push_back(f.first);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

bool Polynomial::contains(Var v) const {
  for (const auto& t : terms_)
    if (t.monomial.degree(v) > 0) return true;
  return false;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_.front().coeff == 1) return *this;
  Rational inv = 1 / terms_.front().coeff;
  return *this * inv;
}

std::vector<Polynomial> Polynomial::coefficients_in(Var v) const {
  std::vector<std::vector<Term>> buckets(degree(v) + 1);
  for (const auto& t : terms_) buckets[t.monomial.degree(v)].push_back(Term{t.monomial.without(v), t.coeff});
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial g = terms_.front().monomial;
  for (const auto& t : terms_) {
    if (g.is_one()) break;
    g = Monomial::gcd(g, t.monomial);
  }
  return g;
}

Polynomial Polynomial::derivative(Var v) const {
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    std::uint32_t e = t.monomial.degree(v);
    if (e == 0) continue;
    terms.push_back(Term{t.monomial.divided_by(Monomial::of(v)), t.coeff * e});
  }
  return from_terms(std::move(terms));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial operator*(Polynomial a, const Term& t) {
  if (t.coeff == 0) return Polynomial();
  // Multiplication by a monomial preserves the term order.
  for (auto& term : a.terms_) {
    term.monomial = term.monomial * t.monomial;
    term.coeff *= t.coeff;
  }
  return a;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  if (a.is_constant()) return b * a.terms_[0].coeff;
  if (b.is_constant()) return a * b.terms_[0].coeff;
  if (a.terms_.size() == 1) return b * a.terms_[0];
  if (b.terms_.size() == 1) return a * b.terms_[0];
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) terms.push_back(Term{ta.monomial * tb.monomial, ta.coeff * tb.coeff});
  return Polynomial::from_terms(std::move(terms));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coeff != b.terms_[i].coeff || !(a.terms_[i].monomial == b.terms_[i].monomial)) return false;
  }
  return true;
}

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (p.is_zero()) return Polynomial();
  if (q.is_constant()) return p * Rational(1 / q.constant_value());
  const Term& lead = q.leading_term();
  if (p.total_degree() < q.total_degree()) return std::nullopt;
  std::vector<Term> quotient;
  Polynomial rem = p;
  while (!rem.is_zero()) {
    const Term& lt = rem.leading_term();
    if (!lead.monomial.divides(lt.monomial)) return std::nullopt;
    Term t{lt.monomial.divided_by(lead.monomial), lt.coeff / lead.coeff};
    rem -= q * t;
    quotient.push_back(std::move(t));
  }
  // Quotient monomials were produced in strictly decreasing order.
  Polynomial out;
  out = Polynomial::from_terms(std::move(quotient));
  return out;
}

std::uint32_t degree_in(const Polynomial& p, Var v) {
  if (p.is_zero()) throw std::invalid_argument("degree of the zero polynomial");
  return p.degree(v);
}

SquarefreePart squarefree_part(const Polynomial& p, Var v) {
  if (p.is_zero()) throw std::invalid_argument("squarefree part of the zero polynomial");
  SquarefreePart out;
  out.zero_multiplicity = p.valuation(v);
  Polynomial q = p;
  if (out.zero_multiplicity > 0) q = *divide_exact(p, Polynomial::monomial(Monomial::of(v, out.zero_multiplicity)));
  if (q.degree(v) == 0) {
    out.part = Polynomial(1);
    return out;
  }
  Polynomial g = gcd(q, q.derivative(v));
  out.part = divide_exact(q, g)->monic();
  return out;
}

}  // namespace jonq
