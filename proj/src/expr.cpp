#include "jonq/expr.hpp"

#include <cctype>
#include <optional>

namespace jonq {

ParseError::ParseError(Kind kind, const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(message + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
      kind_(kind),
      line_(line),
      column_(column) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RatFunc run() {
    skip_space();
    if (at_end()) fail("empty expression");
    RatFunc value = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return value;
  }

 private:
  RatFunc expr() {
    RatFunc acc = term();
    for (;;) {
      skip_space();
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RatFunc term() {
    RatFunc acc = factor();
    for (;;) {
      skip_space();
      if (accept('*')) {
        acc *= factor();
      } else if (peek() == '/') {
        const auto [line, col] = position();
        advance();
        RatFunc d = factor();
        if (d.is_zero()) throw ParseError(ParseError::Kind::Semantic, "zero denominator", line, col);
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  RatFunc factor() {
    skip_space();
    bool negate = false;
    while (accept('-')) {
      negate = !negate;
      skip_space();
    }
    const auto [line, col] = position();
    RatFunc b = base();
    skip_space();
    if (accept('^')) {
      skip_space();
      bool neg_exp = accept('-');
      skip_space();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer exponent");
      const Integer e = integer();
      if (!e.fits_slong_p() || e > 100000) fail("exponent too large");
      long k = e.get_si();
      if (neg_exp) {
        if (b.is_zero()) throw ParseError(ParseError::Kind::Semantic, "zero denominator", line, col);
        k = -k;
      }
      b = b.pow(k);
    }
    return negate ? -b : b;
  }

  RatFunc base() {
    skip_space();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return RatFunc(Rational(integer()));
    if (accept('(')) {
      RatFunc inner = expr();
      skip_space();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return RatFunc::variable(variable());
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  Var variable() {
    const auto [line, col] = position();
    std::string name;
    while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) {
      name.push_back(peek());
      advance();
    }
    if (name == "u") return Var::u();
    if (name == "v") return Var::v();
    if (name == "t") return Var::t();
    if (name == "a1") return Var::a1();
    if (name == "a2") return Var::a2();
    if (name.size() >= 2 && name[0] == 'x' && name[1] != '0') {
      bool digits = true;
      for (std::size_t i = 1; i < name.size(); ++i) digits = digits && std::isdigit(static_cast<unsigned char>(name[i]));
      if (digits && name.size() <= 10) {
        const unsigned long idx = std::stoul(name.substr(1));
        if (idx < Var::kParameterBase) return Var::x(static_cast<std::uint32_t>(idx));
      }
    }
    throw ParseError(ParseError::Kind::Syntax, "unknown variable '" + name + "'", line, col);
  }

  Integer integer() {
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits.push_back(peek());
      advance();
    }
    return Integer(digits);
  }

  [[noreturn]] void fail(const std::string& msg) {
    const auto [line, col] = position();
    throw ParseError(ParseError::Kind::Syntax, msg, line, col);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  bool accept(char c) {
    if (peek() != c || at_end()) return false;
    advance();
    return true;
  }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      line_start_ = pos_ + 1;
    }
    ++pos_;
  }
  std::pair<std::size_t, std::size_t> position() const { return {line_, pos_ - line_start_ + 1}; }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_start_ = 0;
};

std::string render_monomial(const Monomial& m) {
  std::string out;
  for (const auto& [v, e] : m.factors()) {
    if (!out.empty()) out += "*";
    out += v.name();
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

// Magnitude part of a term, sign handled by the caller.
std::string render_unsigned_term(const Term& t) {
  const Rational mag = abs(t.coeff);
  if (t.monomial.is_one()) return to_string(mag);
  if (mag == 1) return render_monomial(t.monomial);
  return to_string(mag) + "*" + render_monomial(t.monomial);
}

bool is_single_power(const Polynomial& p) {
  return p.size() == 1 && p.leading_coefficient() == 1 && p.leading_term().monomial.factors().size() == 1;
}

}  // namespace

RatFunc parse(std::string_view text) { return Parser(text).run(); }

std::string render(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool neg = t.coeff < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    out += render_unsigned_term(t);
    first = false;
  }
  return out;
}

std::string render(const RatFunc& f) {
  if (f.is_polynomial()) return render(f.numerator());
  std::string num = render(f.numerator());
  if (f.numerator().size() > 1) num = "(" + num + ")";
  std::string den = render(f.denominator());
  if (!is_single_power(f.denominator())) den = "(" + den + ")";
  return num + "/" + den;
}

}  // namespace jonq
