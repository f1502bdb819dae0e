#include "jonq/ratfunc.hpp"

#include <algorithm>
#include <stdexcept>

#include "jonq/errors.hpp"

namespace jonq {

namespace {

bool is_one(const Polynomial& p) { return p.is_constant() && !p.is_zero() && p.constant_value() == 1; }

}  // namespace

RatFunc canonicalize(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw std::invalid_argument("zero denominator");
  if (num.is_zero()) return RatFunc();
  if (den.is_constant()) {
    num *= Rational(1 / den.constant_value());
    return RatFunc(std::move(num));
  }
  if (!num.is_constant()) {
    Polynomial g = gcd(num, den);
    if (!is_one(g)) {
      num = *divide_exact(num, g);
      den = *divide_exact(den, g);
    }
  }
  if (den.leading_coefficient() != 1) {
    const Rational s = 1 / den.leading_coefficient();
    num *= s;
    den *= s;
  }
  if (den.is_constant()) return RatFunc(std::move(num));
  return RatFunc(std::move(num), std::move(den));
}

std::vector<Var> RatFunc::variables() const {
  std::vector<Var> a = num_.variables();
  std::vector<Var> b = den_.variables();
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

std::uint32_t RatFunc::max_coordinate() const {
  std::uint32_t m = 0;
  for (Var v : variables())
    if (!v.is_parameter()) m = std::max(m, v.index());
  return m;
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (is_one(den_) && is_one(o.den_)) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) return *this = canonicalize(num_ + o.num_, den_);
  const Polynomial g = gcd(den_, o.den_);
  if (is_one(g)) {
    Polynomial num = num_ * o.den_ + o.num_ * den_;
    Polynomial den = den_ * o.den_;
    if (num.is_zero()) return *this = RatFunc();
    num_ = std::move(num);
    den_ = std::move(den);
    return *this;
  }
  const Polynomial b = *divide_exact(den_, g);
  const Polynomial d = *divide_exact(o.den_, g);
  Polynomial num = num_ * d + o.num_ * b;
  Polynomial den = b * o.den_;
  if (num.is_zero()) return *this = RatFunc();
  const Polynomial g2 = gcd(num, g);
  if (!is_one(g2)) {
    num = *divide_exact(num, g2);
    den = *divide_exact(den, g2);
  }
  if (den.is_constant()) return *this = RatFunc(num * Rational(1 / den.constant_value()));
  num_ = std::move(num);
  den_ = std::move(den);
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  if (is_one(den_) && is_one(o.den_)) {
    num_ *= o.num_;
    return *this;
  }
  Polynomial a = num_, b = den_, c = o.num_, d = o.den_;
  if (!is_one(d) && !a.is_constant()) {
    Polynomial g = gcd(a, d);
    if (!is_one(g)) {
      a = *divide_exact(a, g);
      d = *divide_exact(d, g);
    }
  }
  if (!is_one(b) && !c.is_constant()) {
    Polynomial g = gcd(c, b);
    if (!is_one(g)) {
      c = *divide_exact(c, g);
      b = *divide_exact(b, g);
    }
  }
  num_ = a * c;
  den_ = b * d;
  if (den_.is_constant()) {
    num_ *= Rational(1 / den_.constant_value());
    den_ = Polynomial(1);
  }
  return *this;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::invalid_argument("zero denominator");
  const Rational s = 1 / num_.leading_coefficient();
  if (num_.is_constant()) return RatFunc(den_ * s);
  return RatFunc(den_ * s, num_ * s);
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  // Coprime parts stay coprime under powers.
  if (is_one(den_)) return RatFunc(num_.pow(static_cast<unsigned>(e)));
  return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

// ---------------------------------------------------------------------------

namespace {

// Caches successive powers of a polynomial.
class PowerTable {
 public:
  explicit PowerTable(Polynomial base) { powers_.push_back(Polynomial(1)), base_ = std::move(base); }
  const Polynomial& get(std::uint32_t e) {
    while (powers_.size() <= e) powers_.push_back(powers_.back() * base_);
    return powers_[e];
  }

 private:
  Polynomial base_;
  std::vector<Polynomial> powers_;
};

struct VarImage {
  PowerTable num;
  PowerTable den;
  bool has_den;
  std::uint32_t bound;  // homogenizing exponent for the denominator
};

Polynomial substitute_homogenized(const Polynomial& p, std::map<Var, VarImage>& images) {
  std::vector<Term> acc;
  for (const auto& t : p.terms()) {
    Polynomial prod(t.coeff);
    std::vector<Monomial::Factor> kept;
    for (const auto& [v, e] : t.monomial.factors()) {
      auto it = images.find(v);
      if (it == images.end()) {
        kept.emplace_back(v, e);
        continue;
      }
      prod *= it->second.num.get(e);
      if (it->second.has_den) prod *= it->second.den.get(it->second.bound - e);
    }
    // Variables whose bound exceeds their exponent in this term still need
    // the denominator padding.
    for (auto& [v, img] : images) {
      if (!img.has_den) continue;
      if (t.monomial.degree(v) == 0 && img.bound > 0) prod *= img.den.get(img.bound);
    }
    if (!kept.empty()) prod = prod * Term{Monomial::from_factors(std::move(kept)), Rational(1)};
    for (const auto& pt : prod.terms()) acc.push_back(pt);
  }
  return Polynomial::from_terms(std::move(acc));
}

}  // namespace

Polynomial substitute(const Polynomial& p, const std::map<Var, Polynomial>& sigma) {
  std::map<Var, VarImage> images;
  for (Var v : p.variables()) {
    auto it = sigma.find(v);
    if (it == sigma.end()) continue;
    images.emplace(v, VarImage{PowerTable(it->second), PowerTable(Polynomial(1)), false, 0});
  }
  return substitute_homogenized(p, images);
}

RatFunc substitute(const RatFunc& f, const Substitution& sigma) {
  std::map<Var, VarImage> images;
  for (Var v : f.variables()) {
    auto it = sigma.find(v);
    if (it == sigma.end()) continue;
    const RatFunc& img = it->second;
    const bool has_den = !img.is_polynomial();
    const std::uint32_t bound =
        has_den ? std::max(f.numerator().degree(v), f.denominator().degree(v)) : 0;
    images.emplace(v, VarImage{PowerTable(img.numerator()), PowerTable(img.denominator()), has_den, bound});
  }
  if (images.empty()) return f;
  Polynomial num = substitute_homogenized(f.numerator(), images);
  if (f.is_polynomial()) {
    bool any_den = false;
    for (const auto& [v, img] : images) any_den = any_den || img.has_den;
    if (!any_den) return RatFunc(std::move(num));
  }
  Polynomial den = substitute_homogenized(f.denominator(), images);
  if (den.is_zero()) throw UndefinedError();
  return canonicalize(std::move(num), std::move(den));
}

bool depends_only_on(const RatFunc& f, FlagIndex i) {
  for (Var v : f.variables()) {
    if (v.is_parameter()) continue;
    if (v.index() <= i.value) return false;
  }
  return true;
}

Rational evaluate(const Polynomial& p, const std::map<Var, Rational>& values) {
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational prod = t.coeff;
    for (const auto& [v, e] : t.monomial.factors()) {
      auto it = values.find(v);
      if (it == values.end()) throw std::invalid_argument("no value for variable " + v.name());
      mpq_class pw;
      mpz_pow_ui(pw.get_num_mpz_t(), it->second.get_num_mpz_t(), e);
      mpz_pow_ui(pw.get_den_mpz_t(), it->second.get_den_mpz_t(), e);
      prod *= pw;
    }
    sum += prod;
  }
  return sum;
}

std::optional<Rational> evaluate(const RatFunc& f, const std::map<Var, Rational>& values) {
  Rational den = evaluate(f.denominator(), values);
  if (den == 0) return std::nullopt;
  return Rational(evaluate(f.numerator(), values) / den);
}

std::optional<Rational> evaluate(const RatFunc& f, std::span<const Rational> point) {
  std::map<Var, Rational> values;
  for (std::size_t k = 0; k < point.size(); ++k) values.emplace(Var::x(static_cast<std::uint32_t>(k + 1)), point[k]);
  return evaluate(f, values);
}

RatFunc derivative(const RatFunc& f, Var v) {
  if (f.is_polynomial()) return RatFunc(f.numerator().derivative(v));
  const Polynomial& n = f.numerator();
  const Polynomial& d = f.denominator();
  return canonicalize(n.derivative(v) * d - n * d.derivative(v), d * d);
}

}  // namespace jonq
