#include "jonq/invariant_fields.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "jonq/linalg.hpp"

namespace jonq {

std::string to_string(LevelRecord::Status s) {
  switch (s) {
    case LevelRecord::Status::Certified: return "certified";
    case LevelRecord::Status::Trivial: return "trivial";
    case LevelRecord::Status::Unresolved: return "unresolved";
  }
  return "unresolved";
}

namespace {

// All monomials in `vars` of total degree <= bound, ascending grlex.
std::vector<Monomial> monomials_up_to(const std::vector<Var>& vars, unsigned bound) {
  std::vector<Monomial> out{Monomial()};
  std::vector<Monomial> layer{Monomial()};
  for (unsigned d = 1; d <= bound && !vars.empty(); ++d) {
    std::vector<Monomial> next;
    for (const auto& m : layer)
      for (Var v : vars) {
        // Only extend with variables >= the last one to avoid duplicates.
        if (!m.is_one() && v < m.factors().back().first) continue;
        next.push_back(m * Monomial::of(v));
      }
    std::sort(next.begin(), next.end(), [](const Monomial& a, const Monomial& b) { return grlex(a, b) < 0; });
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_constant()) return b.monic();
  if (b.is_constant()) return a.monic();
  return (*divide_exact(a * b, gcd(a, b))).monic();
}

}  // namespace

std::optional<RatFunc> miyata_step(std::span<const JonqElement> gens, std::size_t level, const AnsatzBounds& bounds) {
  if (gens.empty()) throw std::invalid_argument("miyata_step: no generators");
  const std::size_t n = gens.front().dimension();
  if (level < 1 || level > n) throw std::invalid_argument("miyata_step: level out of range");
  const Var t = Var::x(static_cast<std::uint32_t>(level));

  std::vector<Var> coeff_vars;
  for (std::size_t j = level + 1; j <= n; ++j) coeff_vars.push_back(Var::x(static_cast<std::uint32_t>(j)));
  const std::vector<Monomial> coeff_monos = monomials_up_to(coeff_vars, bounds.max_coeff_degree);
  const std::size_t block = coeff_monos.size();

  Polynomial base_den(1);
  for (const auto& g : gens)
    for (std::size_t j = level; j <= n; ++j) {
      base_den = lcm(base_den, g.multiplier(j).denominator());
      base_den = lcm(base_den, g.increment(j).denominator());
    }

  std::vector<Substitution> sigmas;
  for (const auto& g : gens) sigmas.push_back(g.as_substitution());
  // Cache of g·(x_i^k m) per generator.
  std::vector<std::map<std::pair<unsigned, std::size_t>, RatFunc>> images(gens.size());

  for (unsigned degree = 1; degree <= bounds.max_degree_in_t; ++degree) {
    const Polynomial den = base_den.pow(degree);
    std::vector<Polynomial> basis;
    std::vector<std::pair<unsigned, std::size_t>> labels;
    for (unsigned k = degree + 1; k-- > 0;)
      for (std::size_t m = 0; m < block; ++m) {
        basis.push_back(Polynomial::monomial(Monomial::of(t, k) * coeff_monos[m]));
        labels.emplace_back(k, m);
      }
    const std::size_t cols = basis.size();

    DenseMatrix<Rational> equations;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      const RatFunc den_image = substitute(RatFunc(den), sigmas[gi]);
      std::vector<RatFunc> diffs;
      diffs.reserve(cols);
      for (std::size_t c = 0; c < cols; ++c) {
        auto it = images[gi].find(labels[c]);
        if (it == images[gi].end())
          it = images[gi].emplace(labels[c], substitute(RatFunc(basis[c]), sigmas[gi])).first;
        diffs.push_back(it->second / den_image - canonicalize(basis[c], den));
      }
      Polynomial common(1);
      for (const auto& d : diffs) common = lcm(common, d.denominator());
      std::map<Monomial, std::size_t, MonomialGreater> row_of;
      std::vector<std::vector<Rational>> rows;
      for (std::size_t c = 0; c < cols; ++c) {
        if (diffs[c].is_zero()) continue;
        const Polynomial scaled = diffs[c].numerator() * *divide_exact(common, diffs[c].denominator());
        for (const auto& term : scaled.terms()) {
          auto [it, inserted] = row_of.emplace(term.monomial, rows.size());
          if (inserted) rows.emplace_back(cols);
          rows[it->second][c] += term.coeff;
        }
      }
      for (auto& r : rows) equations.push_back(std::move(r));
    }

    DenseMatrix<Rational> solutions = nullspace(std::move(equations), cols);
    reduce_row_echelon(solutions, cols);
    for (const auto& sol : solutions) {
      std::size_t pivot = 0;
      while (pivot < cols && sol[pivot] == 0) ++pivot;
      if (pivot >= block) break;  // rows are echelon: no later row reaches degree `degree`
      std::vector<Term> terms;
      for (std::size_t c = 0; c < cols; ++c)
        if (sol[c] != 0) terms.push_back(Term{basis[c].leading_term().monomial, sol[c]});
      Polynomial z = Polynomial::from_terms(std::move(terms));
      const Polynomial lead = z.coefficients_in(t).back();
      z *= Rational(1 / lead.leading_coefficient());
      return canonicalize(std::move(z), den);
    }
  }
  return std::nullopt;
}

ChainResult invariant_chain(std::span<const JonqElement> gens, const AnsatzBounds& bounds) {
  if (gens.empty()) throw std::invalid_argument("invariant_chain: no generators");
  const std::size_t n = gens.front().dimension();
  ChainResult result;
  bool all_certified = true;
  for (std::size_t i = n; i >= 1; --i) {
    LevelRecord rec;
    rec.level = i;
    rec.bounds = bounds;
    rec.generator = miyata_step(gens, i, bounds);
    if (rec.generator) {
      rec.status = LevelRecord::Status::Certified;
      result.generators.push_back(*rec.generator);
    } else {
      rec.status = LevelRecord::Status::Unresolved;
      all_certified = false;
    }
    result.levels.push_back(std::move(rec));
  }
  result.pure_certified = all_certified && check_independence(result.generators);
  return result;
}

std::vector<RatFunc> torus_monomial_invariants(const IntMatrix& weights) {
  std::vector<RatFunc> out;
  for (const auto& v : kernel_basis(weights)) {
    std::vector<Monomial::Factor> num, den;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] == 0) continue;
      const Var x = Var::x(static_cast<std::uint32_t>(j + 1));
      const auto e = static_cast<std::uint32_t>(Integer(abs(v[j])).get_ui());
      (v[j] > 0 ? num : den).emplace_back(x, e);
    }
    out.push_back(canonicalize(Polynomial::monomial(Monomial::from_factors(std::move(num))),
                               Polynomial::monomial(Monomial::from_factors(std::move(den)))));
  }
  return out;
}

bool check_independence(std::span<const RatFunc> fs) {
  if (fs.empty()) return true;
  std::uint32_t n = 0;
  for (const auto& f : fs) n = std::max(n, f.max_coordinate());
  if (fs.size() > n) return false;
  DenseMatrix<RatFunc> jac;
  for (const auto& f : fs) {
    std::vector<RatFunc> row;
    for (std::uint32_t i = 1; i <= n; ++i) row.push_back(derivative(f, Var::x(i)));
    jac.push_back(std::move(row));
  }
  return rank(jac) == fs.size();
}

RatFunc reynolds_average(std::span<const JonqElement> group, const RatFunc& f) {
  if (group.empty()) throw std::invalid_argument("reynolds_average: empty group");
  RatFunc sum;
  for (const auto& g : group) sum += apply(g, f);
  return sum / RatFunc(Rational(static_cast<long>(group.size())));
}

}  // namespace jonq
