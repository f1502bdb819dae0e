#pragma once

// Random generators and independent oracles shared by the unit tests and the
// acceptance binary.

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "jonq/expr.hpp"
#include "jonq/jonq_group.hpp"
#include "jonq/unipotent_slice.hpp"

namespace testing {

using jonq::Monomial;
using jonq::Polynomial;
using jonq::Rational;
using jonq::RatFunc;
using jonq::Var;

inline RatFunc P(const char* text) { return jonq::parse(text); }
inline RatFunc X(std::uint32_t i) { return RatFunc::variable(Var::x(i)); }

inline Rational random_rational(std::mt19937& rng, long num_range = 9, long den_max = 4) {
  std::uniform_int_distribution<long> num(-num_range, num_range), den(1, den_max);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Rational random_nonzero(std::mt19937& rng, long num_range = 9, long den_max = 4) {
  Rational r;
  do r = random_rational(rng, num_range, den_max);
  while (r == 0);
  return r;
}

/// Up to `terms` random terms in `vars` of total degree <= max_deg.
inline Polynomial random_poly(std::mt19937& rng, const std::vector<Var>& vars, unsigned max_deg, unsigned terms,
                              long coeff_range = 5) {
  std::vector<jonq::Term> ts;
  std::uniform_int_distribution<unsigned> deg(0, max_deg);
  std::uniform_int_distribution<std::size_t> pick(0, vars.empty() ? 0 : vars.size() - 1);
  for (unsigned k = 0; k < terms; ++k) {
    Monomial m;
    if (!vars.empty()) {
      const unsigned d = deg(rng);
      for (unsigned e = 0; e < d; ++e) m = m * Monomial::of(vars[pick(rng)]);
    }
    ts.push_back({m, random_rational(rng, coeff_range, 3)});
  }
  return Polynomial::from_terms(std::move(ts));
}

inline std::vector<Var> xs(std::uint32_t from, std::uint32_t to) {
  std::vector<Var> v;
  for (std::uint32_t i = from; i <= to; ++i) v.push_back(Var::x(i));
  return v;
}

/// Random valid J element in n variables, increments of degree <= deg.
inline jonq::JonqElement random_j(std::mt19937& rng, std::size_t n, unsigned deg = 2) {
  std::vector<jonq::Component> cs;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto later = xs(static_cast<std::uint32_t>(i + 1), static_cast<std::uint32_t>(n));
    cs.push_back({RatFunc(random_nonzero(rng, 3, 2)), RatFunc(random_poly(rng, later, deg, 3))});
  }
  return jonq::JonqElement(jonq::Variant::J, std::move(cs));
}

/// Point evaluation of g: the point whose i-th coordinate is (g·x_i)(p).
inline std::optional<std::vector<Rational>> image_point(const jonq::JonqElement& g, const std::vector<Rational>& p) {
  std::vector<Rational> out;
  for (std::size_t i = 1; i <= g.dimension(); ++i) {
    auto v = jonq::evaluate(g.image(i), p);
    if (!v) return std::nullopt;
    out.push_back(*v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Direct evaluator for expression text, sharing nothing with the library
// parser: used to check parse() pointwise.

class TextEvaluator {
 public:
  TextEvaluator(std::string text, std::map<std::string, Rational> values)
      : s_(std::move(text)), values_(std::move(values)) {}

  /// nullopt when a division by zero occurs at this point.
  std::optional<Rational> value() {
    pos_ = 0;
    failed_ = false;
    Rational r = expr();
    skip();
    if (pos_ != s_.size()) throw std::runtime_error("trailing input");
    if (failed_) return std::nullopt;
    return r;
  }

 private:
  std::string s_;
  std::map<std::string, Rational> values_;
  std::size_t pos_ = 0;
  bool failed_ = false;

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) return ++pos_, true;
    return false;
  }
  long integer() {
    skip();
    long v = 0;
    bool any = false;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) v = v * 10 + (s_[pos_++] - '0'), any = true;
    if (!any) throw std::runtime_error("expected integer");
    return v;
  }
  Rational expr() {
    Rational r = term();
    while (true) {
      if (eat('+')) r += term();
      else if (eat('-')) r -= term();
      else return r;
    }
  }
  Rational term() {
    Rational r = factor();
    while (true) {
      if (eat('*')) {
        r *= factor();
      } else if (eat('/')) {
        Rational d = factor();
        if (d == 0) failed_ = true, d = 1;
        r /= d;
      } else {
        return r;
      }
    }
  }
  Rational factor() {
    if (eat('-')) return -factor();
    Rational b = base();
    if (eat('^')) {
      const bool neg = eat('-');
      const long e = integer();
      Rational r = 1;
      for (long k = 0; k < e; ++k) r *= b;
      if (neg) {
        if (r == 0) failed_ = true, r = 1;
        r = 1 / r;
      }
      return r;
    }
    return b;
  }
  Rational base() {
    skip();
    if (eat('(')) {
      Rational r = expr();
      if (!eat(')')) throw std::runtime_error("expected )");
      return r;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) return Rational(integer());
    std::string name;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) name += s_[pos_++];
    auto it = values_.find(name);
    if (it == values_.end()) throw std::runtime_error("unknown name " + name);
    return it->second;
  }
};

// ---------------------------------------------------------------------------
// Pointwise flows for orbit checks.

/// Q_w(p)_i = p_i + F_i(p, w); nullopt when undefined.
inline std::optional<std::vector<Rational>> flow_point(const jonq::AdditiveFlow& f, const std::vector<Rational>& p,
                                                       const Rational& w) {
  std::map<Var, Rational> at{{Var::u(), w}};
  for (std::size_t i = 0; i < p.size(); ++i) at.emplace(Var::x(static_cast<std::uint32_t>(i + 1)), p[i]);
  std::vector<Rational> out = p;
  for (std::size_t i = 0; i < f.n; ++i) {
    auto v = jonq::evaluate(f.F[i], at);
    if (!v) return std::nullopt;
    out[i] += *v;
  }
  return out;
}

inline std::size_t deepest_moving(const jonq::AdditiveFlow& f) {
  std::size_t d = f.n;
  while (d > 0 && f.F[d - 1].is_zero()) --d;
  return d;
}

/// Moves p onto {x_{i_k} = c_k} using the flows themselves, fixing indices
/// from the largest down. The parameter at each step is read off pointwise
/// from the linearity of the deepest coordinate in w.
inline std::optional<std::vector<Rational>> project_to_subspace(const std::vector<jonq::AdditiveFlow>& flows,
                                                                const std::vector<std::size_t>& indices,
                                                                const std::vector<Rational>& constants,
                                                                std::vector<Rational> p) {
  for (std::size_t k = indices.size(); k-- > 0;) {
    const std::size_t d = indices[k];
    bool moved = false;
    for (const auto& f : flows) {
      if (deepest_moving(f) != d) continue;
      auto at0 = flow_point(f, p, 0), at1 = flow_point(f, p, 1);
      if (!at0 || !at1) return std::nullopt;
      const Rational slope = (*at1)[d - 1] - (*at0)[d - 1];
      if (slope == 0) continue;
      auto q = flow_point(f, p, (constants[k] - p[d - 1]) / slope);
      if (!q) return std::nullopt;
      p = std::move(*q);
      moved = true;
      break;
    }
    if (!moved) return std::nullopt;
  }
  return p;
}

}  // namespace testing
