#include "jonq/torus_weights.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "jonq/expr.hpp"
#include "jonq/polynomial.hpp"

namespace jonq {

FaithfulnessReport faithfulness_report(const IntMatrix& weights) {
  FaithfulnessReport r;
  r.rank = rank(weights);
  r.trdeg = weights.cols() - r.rank;
  const SmithForm snf = smith_normal_form(weights);
  for (std::size_t i = 0; i < std::min(weights.rows(), weights.cols()); ++i)
    if (snf.diagonal(i, i) != 0) r.invariant_factors.push_back(snf.diagonal(i, i));
  r.faithful = r.rank == weights.rows() &&
               std::all_of(r.invariant_factors.begin(), r.invariant_factors.end(), [](const Integer& d) { return d == 1; });
  return r;
}

std::size_t generic_root_count(long d1, long d2, const Rational& mu1, const Rational& mu2, const Rational& nu) {
  if (mu1 == 0 && mu2 == 0 && nu == 0) throw std::invalid_argument("generic_root_count: all coefficients zero");
  const Var t = Var::t();
  const long shift = -std::min({0L, d1, d2});
  auto t_pow = [&](long d) { return Monomial::of(t, static_cast<std::uint32_t>(d + shift)); };
  Polynomial p = Polynomial::monomial(Monomial::of(Var::a1()) * t_pow(d1), mu1) +
                 Polynomial::monomial(Monomial::of(Var::a2()) * t_pow(d2), mu2) +
                 Polynomial::monomial(t_pow(0), nu);
  return squarefree_part(p, t).part.degree(t);
}

std::string describe_line(const Rational& mu1, const Rational& mu2, const Rational& nu) {
  Polynomial lhs = Polynomial::monomial(Monomial::of(Var::x(1)), mu1) + Polynomial::monomial(Monomial::of(Var::x(2)), mu2);
  return render(lhs) + " = " + to_string(Rational(-nu));
}

LineCertificate no_affine_line_certificate(long d1, long d2) {
  LineCertificate cert;
  cert.d1 = d1;
  cert.d2 = d2;
  cert.condition_sub = d1 - d2 >= 2;
  cert.condition_d = std::labs(d1) >= 2 && std::labs(d2) >= 2;
  cert.condition_gcd = std::gcd(d1, d2) == 1;
  struct Class {
    const char* label;
    long mu1, mu2, nu;
  };
  static constexpr Class classes[] = {
      {"mu1 = 0, mu2 != 0, nu != 0", 0, 1, 1}, {"mu1 = 0, mu2 != 0, nu = 0", 0, 1, 0},
      {"mu2 = 0, mu1 != 0, nu != 0", 1, 0, 1}, {"mu2 = 0, mu1 != 0, nu = 0", 1, 0, 0},
      {"mu1*mu2 != 0, nu = 0", 1, 1, 0},       {"mu1*mu2 != 0, nu != 0", 1, 1, 1},
  };
  for (const auto& c : classes) {
    LineCase lc{c.label, c.mu1, c.mu2, c.nu, generic_root_count(d1, d2, c.mu1, c.mu2, c.nu)};
    if (lc.generic_count == 1 && !cert.candidate) cert.candidate = describe_line(lc.mu1, lc.mu2, lc.nu);
    cert.cases.push_back(std::move(lc));
  }
  cert.no_line = !cert.candidate.has_value();
  return cert;
}

}  // namespace jonq
