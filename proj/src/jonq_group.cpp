#include "jonq/jonq_group.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "jonq/errors.hpp"
#include "jonq/expr.hpp"

namespace jonq {

std::string to_string(Variant v) { return v == Variant::J ? "J" : "Jhat"; }

namespace {

void validate_components(Variant variant, const std::vector<Component>& comps) {
  const std::size_t n = comps.size();
  if (n == 0) throw ValidationError("element must act on at least one variable");
  for (std::size_t i = 1; i <= n; ++i) {
    const Component& c = comps[i - 1];
    const std::string idx = std::to_string(i);
    for (const RatFunc* f : {&c.increment, &c.multiplier}) {
      for (Var v : f->variables()) {
        if (v.is_parameter())
          throw ValidationError("component " + idx + " involves parameter " + v.name(), i);
        if (v.index() > n) throw ValidationError("variable " + v.name() + " out of range at index " + idx, i);
      }
    }
    if (!depends_only_on(c.increment, FlagIndex{static_cast<std::uint32_t>(i)}))
      throw ValidationError("f_" + idx + " not in K_" + idx, i);
    if (c.multiplier.is_zero()) throw ValidationError("mu_" + idx + " zero", i);
    if (variant == Variant::J) {
      if (!c.multiplier.is_constant()) throw ValidationError("mu_" + idx + " not constant (J)", i);
    } else if (!depends_only_on(c.multiplier, FlagIndex{static_cast<std::uint32_t>(i)})) {
      throw ValidationError("mu_" + idx + " not in K_" + idx + " (Jhat)", i);
    }
  }
}

// Writes a function that is affine in x_i over K_i as multiplier·x_i + increment.
Component split_linear(const RatFunc& r, std::size_t i) {
  const Var xi = Var::x(static_cast<std::uint32_t>(i));
  if (r.denominator().contains(xi) || r.numerator().degree(xi) > 1)
    throw std::logic_error("image of x_" + std::to_string(i) + " is not affine in x_" + std::to_string(i));
  std::vector<Polynomial> coeffs = r.numerator().coefficients_in(xi);
  coeffs.resize(2);
  return Component{canonicalize(coeffs[1], r.denominator()), canonicalize(coeffs[0], r.denominator())};
}

}  // namespace

JonqElement::JonqElement(Variant variant, std::vector<Component> components)
    : variant_(variant), components_(std::move(components)) {
  validate_components(variant_, components_);
}

JonqElement JonqElement::identity(std::size_t n, Variant variant) {
  return JonqElement(variant, std::vector<Component>(n, Component{RatFunc(1), RatFunc(0)}));
}

RatFunc JonqElement::image(std::size_t i) const {
  const Component& c = component(i);
  return c.multiplier * RatFunc::variable(Var::x(static_cast<std::uint32_t>(i))) + c.increment;
}

Substitution JonqElement::as_substitution() const {
  Substitution sigma;
  for (std::size_t i = 1; i <= dimension(); ++i) sigma.emplace(Var::x(static_cast<std::uint32_t>(i)), image(i));
  return sigma;
}

bool JonqElement::is_identity() const {
  for (const auto& c : components_)
    if (!(c.multiplier == RatFunc(1)) || !c.increment.is_zero()) return false;
  return true;
}

std::string JonqElement::canonical_key() const {
  std::string key = to_string(variant_);
  for (const auto& c : components_) {
    key += '|';
    key += render(c.multiplier);
    key += ';';
    key += render(c.increment);
  }
  return key;
}

RatFunc apply(const JonqElement& g, const RatFunc& f) {
  if (f.is_constant()) return f;
  return substitute(f, g.as_substitution());
}

JonqElement compose(const JonqElement& g1, const JonqElement& g2) {
  if (g1.variant() != g2.variant()) throw std::invalid_argument("compose: variant mismatch");
  if (g1.dimension() != g2.dimension()) throw std::invalid_argument("compose: dimension mismatch");
  const std::size_t n = g1.dimension();
  const Substitution sigma = g1.as_substitution();
  std::vector<Component> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const RatFunc direct = substitute(g2.image(i), sigma);
    if (g1.variant() == Variant::J) {
      // chi_i(g1 g2) = chi_i(g1) chi_i(g2);
      // phi_i(g1 g2) = chi_i(g2) phi_i(g1) + g1·phi_i(g2).
      Component c{g1.multiplier(i) * g2.multiplier(i),
                  g2.multiplier(i) * g1.increment(i) + substitute(g2.increment(i), sigma)};
      const RatFunc closed = c.multiplier * RatFunc::variable(Var::x(static_cast<std::uint32_t>(i))) + c.increment;
      if (!(closed == direct))
        throw std::logic_error("character/cocycle law disagrees with substitution at index " + std::to_string(i));
      out.push_back(std::move(c));
    } else {
      out.push_back(split_linear(direct, i));
    }
  }
  return JonqElement(g1.variant(), std::move(out));
}

JonqElement invert(const JonqElement& g) {
  const std::size_t n = g.dimension();
  std::vector<Component> out(n);
  Substitution sigma;  // x_j ↦ g^{-1}·x_j for the indices already solved
  for (std::size_t i = n; i >= 1; --i) {
    const RatFunc mu = substitute(g.multiplier(i), sigma);
    const RatFunc inv_mu = mu.inverse();
    Component c{inv_mu, -(substitute(g.increment(i), sigma) * inv_mu)};
    sigma.emplace(Var::x(static_cast<std::uint32_t>(i)),
                  c.multiplier * RatFunc::variable(Var::x(static_cast<std::uint32_t>(i))) + c.increment);
    out[i - 1] = std::move(c);
  }
  return JonqElement(g.variant(), std::move(out));
}

JonqElement power(const JonqElement& g, long k) {
  if (k < 0) return power(invert(g), -k);
  JonqElement result = JonqElement::identity(g.dimension(), g.variant());
  JonqElement base = g;
  auto e = static_cast<unsigned long>(k);
  while (e > 0) {
    if (e & 1ul) result = compose(result, base);
    e >>= 1ul;
    if (e > 0) base = compose(base, base);
  }
  return result;
}

std::string to_string(const OrderResult& r) {
  switch (r.kind) {
    case OrderResult::Kind::Finite: return "finite(" + std::to_string(r.value) + ")";
    case OrderResult::Kind::Infinite: return "infinite";
    case OrderResult::Kind::Unknown: return "unknown(cap " + std::to_string(r.value) + ")";
  }
  return "unknown";
}

OrderResult order(const JonqElement& g, std::uint64_t cap) {
  if (g.variant() == Variant::J) {
    // Over Q the only roots of unity are ±1.
    std::uint64_t m0 = 1;
    for (const auto& c : g.components()) {
      const Rational mu = c.multiplier.constant_value();
      if (mu == -1) {
        m0 = 2;
      } else if (mu != 1) {
        return OrderResult::infinite();
      }
    }
    if (m0 == 1) return g.is_identity() ? OrderResult::finite(1) : OrderResult::infinite();
    // g^2 has trivial characters; it is either e or of infinite order.
    return compose(g, g).is_identity() ? OrderResult::finite(2) : OrderResult::infinite();
  }
  JonqElement p = g;
  for (std::uint64_t m = 1; m <= cap; ++m) {
    if (p.is_identity()) return OrderResult::finite(m);
    if (m < cap) p = compose(p, g);
  }
  return OrderResult::unknown(cap);
}

ClosureResult subgroup_closure(std::span<const JonqElement> gens, std::size_t cap) {
  ClosureResult result;
  if (gens.empty()) throw std::invalid_argument("subgroup_closure: no generators");
  std::vector<JonqElement> steps;
  for (const auto& g : gens) {
    if (g.variant() != gens.front().variant() || g.dimension() != gens.front().dimension())
      throw std::invalid_argument("subgroup_closure: generators differ in variant or dimension");
    steps.push_back(g);
    steps.push_back(invert(g));
  }
  std::unordered_set<std::string> seen;
  std::deque<std::size_t> frontier;
  auto add = [&](JonqElement e) {
    if (!seen.insert(e.canonical_key()).second) return true;
    result.elements.push_back(std::move(e));
    frontier.push_back(result.elements.size() - 1);
    return result.elements.size() <= cap;
  };
  add(JonqElement::identity(gens.front().dimension(), gens.front().variant()));
  while (!frontier.empty()) {
    const std::size_t idx = frontier.front();
    frontier.pop_front();
    for (const auto& s : steps) {
      if (!add(compose(result.elements[idx], s))) {
        result.overflow = true;
        return result;
      }
    }
  }
  return result;
}

bool is_abelian(std::span<const JonqElement> elements) {
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (std::size_t b = a + 1; b < elements.size(); ++b)
      if (!(compose(elements[a], elements[b]) == compose(elements[b], elements[a]))) return false;
  return true;
}

}  // namespace jonq
