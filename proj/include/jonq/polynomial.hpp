#pragma once

#include <compare>
#include <optional>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jonq/rational.hpp"

namespace jonq {

/// Variable handle. Coordinates x1..xn take codes 1..n; auxiliary parameters
/// (flow parameters u, v, generic-point parameters a1, a2, root variable t)
/// live above kParameterBase so every coordinate precedes every parameter.
class Var {
 public:
  static constexpr std::uint32_t kParameterBase = 1u << 30;

  static constexpr Var x(std::uint32_t i) { return Var(i); }
  static constexpr Var u() { return Var(kParameterBase + 1); }
  static constexpr Var v() { return Var(kParameterBase + 2); }
  static constexpr Var a1() { return Var(kParameterBase + 3); }
  static constexpr Var a2() { return Var(kParameterBase + 4); }
  static constexpr Var t() { return Var(kParameterBase + 5); }

  constexpr bool is_parameter() const { return code_ >= kParameterBase; }
  /// Coordinate index i of x_i (meaningless for parameters).
  constexpr std::uint32_t index() const { return code_; }
  constexpr std::uint32_t code() const { return code_; }
  std::string name() const;

  constexpr auto operator<=>(const Var&) const = default;

 private:
  constexpr explicit Var(std::uint32_t code) : code_(code) {}
  std::uint32_t code_;
};

/// Power product with strictly positive exponents, factors sorted by variable.
class Monomial {
 public:
  using Factor = std::pair<Var, std::uint32_t>;

  Monomial() = default;
  static Monomial of(Var v, std::uint32_t exponent = 1);
  /// Factors need not be sorted; zero exponents are dropped, repeats merged.
  static Monomial from_factors(std::vector<Factor> factors);

  bool is_one() const { return factors_.empty(); }
  std::uint32_t degree(Var v) const;
  std::uint32_t total_degree() const { return total_; }
  std::span<const Factor> factors() const { return factors_; }

  bool divides(const Monomial& other) const;
  /// Precondition: divisor divides *this.
  Monomial divided_by(const Monomial& divisor) const;
  Monomial without(Var v) const;
  static Monomial gcd(const Monomial& a, const Monomial& b);

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

 private:
  std::vector<Factor> factors_;
  std::uint32_t total_ = 0;
};

/// Graded lexicographic order with x1 > x2 > ... > parameters.
std::strong_ordering grlex(const Monomial& a, const Monomial& b);

struct MonomialGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex(a, b) > 0; }
};

struct Term {
  Monomial monomial;
  Rational coeff;
};

/// Sparse polynomial over the rationals. Terms are kept sorted by decreasing
/// grlex order with no zero coefficients, so equal polynomials compare equal.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static Polynomial variable(Var v);
  static Polynomial monomial(Monomial m, Rational c = 1);
  /// Arbitrary term list; sorted, like terms combined, zeros removed.
  static Polynomial from_terms(std::vector<Term> terms);
  /// Sum of coeffs[e] * v^e.
  static Polynomial from_coefficients(Var v, std::span<const Polynomial> coeffs);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }
  Rational constant_value() const;

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  const Term& leading_term() const { return terms_.front(); }
  const Rational& leading_coefficient() const { return terms_.front().coeff; }

  std::uint32_t total_degree() const;
  std::uint32_t degree(Var v) const;
  /// Smallest exponent of v over all terms.
  std::uint32_t valuation(Var v) const;
  std::vector<Var> variables() const;
  bool contains(Var v) const;

  /// Scaled to leading coefficient 1 (zero stays zero).
  Polynomial monic() const;
  /// Coefficients as a polynomial in v; index = exponent of v.
  std::vector<Polynomial> coefficients_in(Var v) const;
  /// Common monomial factor of all terms.
  Monomial monomial_content() const;

  Polynomial derivative(Var v) const;
  Polynomial pow(unsigned e) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(Polynomial a, const Term& t);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  std::vector<Term> terms_;
};

/// Exact quotient p / q, or nothing when q does not divide p.
std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& q);

/// Greatest common divisor, leading coefficient 1. Throws std::invalid_argument
/// ("gcd undefined") when both arguments are zero.
Polynomial gcd(const Polynomial& p, const Polynomial& q);

/// Highest exponent of v in p. Throws std::invalid_argument for p = 0.
std::uint32_t degree_in(const Polynomial& p, Var v);

struct SquarefreePart {
  /// Squarefree, monic, with the factor v^k removed.
  Polynomial part;
  /// Multiplicity k of the root v = 0 in p.
  std::uint32_t zero_multiplicity = 0;
};

/// Squarefree part of p viewed as univariate in v over the fraction field of
/// the remaining variables: p / gcd(p, dp/dv) with powers of v stripped.
SquarefreePart squarefree_part(const Polynomial& p, Var v);

}  // namespace jonq
