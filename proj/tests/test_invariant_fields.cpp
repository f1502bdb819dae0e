#include <doctest.h>

#include <algorithm>
#include <random>

#include "jonq/invariant_fields.hpp"
#include "support.hpp"

using namespace jonq;
using testing::P;
using testing::X;

namespace {

JonqElement J(std::vector<std::pair<const char*, const char*>> comps, Variant v = Variant::J) {
  std::vector<Component> cs;
  for (auto [mu, f] : comps) cs.push_back({P(mu), P(f)});
  return JonqElement(v, std::move(cs));
}

bool fixed_by_all(const RatFunc& z, const std::vector<JonqElement>& gens) {
  return std::all_of(gens.begin(), gens.end(), [&](const JonqElement& g) { return apply(g, z) == z; });
}

// Conjugate of a diagonal sign change by h: a finite-order element.
JonqElement conjugate(const JonqElement& h, const JonqElement& d) { return compose(compose(h, d), invert(h)); }

JonqElement sign_change(std::size_t n, std::initializer_list<std::size_t> flipped) {
  std::vector<Component> cs(n, Component{RatFunc(1), RatFunc(0)});
  for (std::size_t i : flipped) cs[i - 1].multiplier = RatFunc(-1);
  return JonqElement(Variant::J, cs);
}

}  // namespace

TEST_CASE("miyata step examples") {
  const AnsatzBounds b;
  CHECK(*miyata_step(std::vector{J({{"-1", "0"}, {"1", "0"}})}, 1, b) == P("x1^2"));
  CHECK(*miyata_step(std::vector{J({{"-1", "0"}, {"-1", "0"}})}, 1, b) == P("x1*x2"));
  CHECK(*miyata_step(std::vector{JonqElement::identity(2)}, 1, b) == P("x1"));
  CHECK(*miyata_step(std::vector{JonqElement::identity(1)}, 1, b) == P("x1"));
  CHECK_THROWS_AS(miyata_step(std::vector{JonqElement::identity(2)}, 3, b), std::invalid_argument);
}

TEST_CASE("miyata step with translations and denominators") {
  // Translation by x2 != 0 fixes no nonconstant polynomial in x1 over Q(x2).
  const auto gens = std::vector{J({{"1", "x2"}, {"1", "0"}})};
  CHECK_FALSE(miyata_step(gens, 1, AnsatzBounds{3, 3}).has_value());
  // With a denominator in the generator the ansatz denominator can absorb it.
  const auto scaled = std::vector{J({{"-1", "1/x2"}, {"1", "0"}})};
  const auto z = miyata_step(scaled, 1, AnsatzBounds{});
  REQUIRE(z);
  CHECK(apply(scaled[0], *z) == *z);
  // x1 (x1 - 1/x2) up to the invariant scalar 1/x2 chosen by the ansatz denominator.
  CHECK(*z == P("(x1^2*x2 - x1)/x2^2"));
  CHECK(*z * X(2) == P("x1^2 - x1/x2"));
}

TEST_CASE("invariant chain examples") {
  const AnsatzBounds b;
  const ChainResult k = invariant_chain(std::vector{J({{"-1", "0"}, {"-1", "0"}})}, b);
  REQUIRE(k.generators.size() == 2);
  CHECK(k.generators[0] == P("x2^2"));
  CHECK(k.generators[1] == P("x1*x2"));
  CHECK(k.pure_certified);
  REQUIRE(k.levels.size() == 2);
  CHECK(k.levels[0].level == 2);
  CHECK(k.levels[1].level == 1);

  const ChainResult id = invariant_chain(std::vector{JonqElement::identity(3)}, b);
  CHECK(id.generators == std::vector<RatFunc>{X(3), X(2), X(1)});
  CHECK(id.pure_certified);

  const ChainResult tr = invariant_chain(std::vector{J({{"1", "1"}})}, AnsatzBounds{3, 3});
  REQUIRE(tr.levels.size() == 1);
  CHECK(tr.levels[0].status == LevelRecord::Status::Unresolved);
  CHECK(tr.generators.empty());
  CHECK_FALSE(tr.pure_certified);
}

TEST_CASE("torus monomial invariants examples") {
  const auto a = torus_monomial_invariants(IntMatrix{{5, 3}});
  REQUIRE(a.size() == 1);
  CHECK(a[0] == P("x1^3/x2^5"));
  const auto b = torus_monomial_invariants(IntMatrix{{1, 1}});
  REQUIRE(b.size() == 1);
  CHECK(b[0] == P("x1/x2"));
  CHECK(torus_monomial_invariants(IntMatrix::identity(2)).empty());
}

TEST_CASE("check_independence examples") {
  CHECK(check_independence(std::vector{P("x1^2"), P("x1*x2")}));
  CHECK_FALSE(check_independence(std::vector{P("x1"), P("x1^2")}));
  CHECK(check_independence(std::vector<RatFunc>{}));
  CHECK_FALSE(check_independence(std::vector{P("x1 + x2"), P("(x1 + x2)^3 - 1"), P("x3")}));
  CHECK(check_independence(std::vector{P("x1 + x2"), P("x3")}));
  CHECK(check_independence(std::vector{P("x1/x2"), P("x2 + x3"), P("x3^2")}));
}

TEST_CASE("torus invariants are weight zero, independent and of the right count") {
  std::mt19937 rng(51);
  std::uniform_int_distribution<long> e(-4, 4);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int t = 0; t < 40; ++t) {
    const std::size_t m = dim(rng), n = dim(rng);
    IntMatrix w(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) w(i, j) = e(rng);
    const auto invs = torus_monomial_invariants(w);
    CHECK(invs.size() == n - rank(w));
    CHECK(check_independence(invs));
    for (const auto& f : invs) {
      // The torus acts by x_j -> s^{w_ij} x_j; a monomial is invariant iff
      // its exponent vector has weight zero. Read exponents off the monomial.
      std::vector<long> v(n, 0);
      for (const auto& [var, k] : f.numerator().leading_term().monomial.factors()) v[var.index() - 1] += k;
      for (const auto& [var, k] : f.denominator().leading_term().monomial.factors()) v[var.index() - 1] -= k;
      for (std::size_t i = 0; i < m; ++i) {
        Integer s = 0;
        for (std::size_t j = 0; j < n; ++j) s += w(i, j) * v[j];
        CHECK(s == 0);
      }
    }
  }
}

TEST_CASE("certified generators are exactly invariant") {
  std::mt19937 rng(52);
  for (int t = 0; t < 12; ++t) {
    const JonqElement h = testing::random_j(rng, 2, 1);
    const std::vector<JonqElement> gens{conjugate(h, sign_change(2, {1})), conjugate(h, sign_change(2, {2}))};
    const ChainResult r = invariant_chain(gens, AnsatzBounds{4, 4});
    for (const auto& lv : r.levels)
      if (lv.generator) CHECK(fixed_by_all(*lv.generator, gens));
    if (r.pure_certified) CHECK(check_independence(r.generators));
  }
}

TEST_CASE("group averages bound the degree found by the step") {
  std::mt19937 rng(53);
  int compared = 0;
  for (int t = 0; t < 12; ++t) {
    const JonqElement h = testing::random_j(rng, 2, 1);
    const std::vector<JonqElement> gens{conjugate(h, sign_change(2, {1, 2}))};
    const ClosureResult group = subgroup_closure(gens, 64);
    REQUIRE_FALSE(group.overflow);
    for (std::uint32_t i = 1; i <= 2; ++i) {
      const Var xi = Var::x(i);
      const auto z = miyata_step(gens, i, AnsatzBounds{4, 4});
      for (long j = 1; j <= 3; ++j) {
        const RatFunc avg = reynolds_average(group.elements, X(i).pow(j));
        CHECK(fixed_by_all(avg, group.elements));
        if (!avg.is_polynomial() || avg.numerator().degree(xi) == 0) continue;
        REQUIRE(z.has_value());
        CHECK(z->numerator().degree(xi) <= avg.numerator().degree(xi));
        ++compared;
      }
    }
  }
  CHECK(compared > 10);
}
