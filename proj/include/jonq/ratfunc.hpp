#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "jonq/polynomial.hpp"

namespace jonq {

/// Index i of the subfield K_i = Q(x_{i+1}, ..., x_n) in the flag
/// K_n ⊂ K_{n-1} ⊂ ... ⊂ K_0 = Q(x_1, ..., x_n).
struct FlagIndex {
  std::uint32_t value = 0;
};

/// Exact rational function in canonical form: numerator and denominator
/// coprime, denominator with leading coefficient 1, zero stored as 0/1.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : num_(Rational(c)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(Polynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)

  static RatFunc variable(Var v) { return RatFunc(Polynomial::variable(v)); }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  Rational constant_value() const { return num_.constant_value(); }

  std::vector<Var> variables() const;
  bool contains(Var v) const { return num_.contains(v) || den_.contains(v); }
  /// Largest coordinate index occurring (0 when none).
  std::uint32_t max_coordinate() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  RatFunc pow(long e) const;
  RatFunc inverse() const;

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  friend RatFunc canonicalize(Polynomial num, Polynomial den);
  RatFunc(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {}

  Polynomial num_;
  Polynomial den_;
};

/// The unique canonical representative of num/den. Throws
/// std::invalid_argument("zero denominator") when den = 0.
RatFunc canonicalize(Polynomial num, Polynomial den);

/// Simultaneous substitution; variables without an entry are left unchanged.
using Substitution = std::map<Var, RatFunc>;

/// Throws UndefinedError when the substituted denominator vanishes identically.
RatFunc substitute(const RatFunc& f, const Substitution& sigma);
Polynomial substitute(const Polynomial& p, const std::map<Var, Polynomial>& sigma);

/// True iff every coordinate occurring in f has index > i; parameters ignored.
bool depends_only_on(const RatFunc& f, FlagIndex i);

/// Exact value at a point of Q^n (point[k] is the value of x_{k+1}); nothing
/// when the denominator vanishes there. Throws std::invalid_argument if f
/// involves a variable the point does not cover.
std::optional<Rational> evaluate(const RatFunc& f, std::span<const Rational> point);
std::optional<Rational> evaluate(const RatFunc& f, const std::map<Var, Rational>& values);
Rational evaluate(const Polynomial& p, const std::map<Var, Rational>& values);

RatFunc derivative(const RatFunc& f, Var v);

}  // namespace jonq
