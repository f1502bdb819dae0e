#include <doctest.h>

#include <random>

#include "jonq/errors.hpp"
#include "jonq/jonq_group.hpp"
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

std::vector<Rational> random_point(std::mt19937& rng, std::size_t n) {
  std::vector<Rational> p;
  for (std::size_t i = 0; i < n; ++i) p.push_back(testing::random_rational(rng, 15, 6));
  return p;
}

}  // namespace

TEST_CASE("validation examples") {
  CHECK_NOTHROW(J({{"2", "x2^2"}, {"1", "0"}}));
  CHECK_NOTHROW(J({{"x2", "0"}, {"1", "0"}}, Variant::Jhat));
  try {
    J({{"1", "x1"}, {"1", "0"}});
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.index() == 1);
    CHECK(std::string(e.what()) == "f_1 not in K_1");
  }
  CHECK_THROWS_WITH(J({{"1", "0"}, {"0", "1"}}), "mu_2 zero");
  CHECK_THROWS_WITH(J({{"x2", "0"}, {"1", "0"}}), "mu_1 not constant (J)");
  CHECK_THROWS_WITH(J({{"x1", "0"}, {"1", "0"}}, Variant::Jhat), "mu_1 not in K_1 (Jhat)");
  CHECK_THROWS_AS(J({{"1", "x3"}, {"1", "0"}}), ValidationError);
  CHECK_THROWS_AS(J({{"1", "u"}, {"1", "0"}}), ValidationError);
}

TEST_CASE("apply examples") {
  CHECK(apply(J({{"1", "x2"}, {"1", "0"}}), P("x1/x2")) == P("(x1 + x2)/x2"));
  CHECK(apply(JonqElement::identity(3), P("(x1 - x3)/(x2 + 1)")) == P("(x1 - x3)/(x2 + 1)"));
  CHECK(apply(J({{"-1", "0"}, {"-1", "0"}}), P("x1*x2")) == P("x1*x2"));
}

TEST_CASE("apply never collapses a denominator") {
  // Elements are field automorphisms, so nonzero denominators stay nonzero.
  const JonqElement g = J({{"x2", "0"}, {"1", "0"}}, Variant::Jhat);
  CHECK(apply(g, P("1/(x1 - x1*x2)")) == P("1/(x1*x2 - x1*x2^2)"));
  CHECK(apply(J({{"1", "-x2"}, {"1", "0"}}), P("1/x1")) == P("1/(x1 - x2)"));
}

TEST_CASE("compose examples") {
  SUBCASE("one variable affine maps") {
    std::mt19937 rng(41);
    for (int k = 0; k < 10; ++k) {
      const Rational a = testing::random_nonzero(rng), b = testing::random_rational(rng), c = testing::random_nonzero(rng),
                     d = testing::random_rational(rng);
      const JonqElement g1(Variant::J, {{RatFunc(a), RatFunc(b)}}), g2(Variant::J, {{RatFunc(c), RatFunc(d)}});
      const JonqElement r = compose(g1, g2);
      CHECK(r.multiplier(1) == RatFunc(Rational(a * c)));
      CHECK(r.increment(1) == RatFunc(Rational(c * b + d)));
    }
  }
  SUBCASE("two variables through the cocycle") {
    const JonqElement r = compose(J({{"1", "x2"}, {"1", "0"}}), J({{"2", "0"}, {"1", "1"}}));
    CHECK(r.image(1) == P("2*x1 + 2*x2"));
    CHECK(r.image(2) == P("x2 + 1"));
    CHECK(r.multiplier(1) == RatFunc(2));
    CHECK(r.increment(1) == P("2*x2"));
  }
  SUBCASE("identity is neutral") {
    const JonqElement g = J({{"2", "x2^2 - x3"}, {"-1", "x3"}, {"1/2", "3"}});
    CHECK(compose(g, JonqElement::identity(3)) == g);
    CHECK(compose(JonqElement::identity(3), g) == g);
  }
  CHECK_THROWS_AS(compose(JonqElement::identity(2), JonqElement::identity(3)), std::invalid_argument);
  CHECK_THROWS_AS(compose(JonqElement::identity(2), JonqElement::identity(2, Variant::Jhat)), std::invalid_argument);
}

TEST_CASE("invert examples") {
  const JonqElement h = invert(J({{"2", "x2^2"}, {"1", "0"}}));
  CHECK(h.image(1) == P("(x1 - x2^2)/2"));
  CHECK(h.image(2) == P("x2"));
  CHECK(invert(JonqElement::identity(4)).is_identity());
}

TEST_CASE("order examples") {
  CHECK(order(J({{"1", "1"}}), 100) == OrderResult::infinite());
  CHECK(order(J({{"-1", "0"}, {"-1", "0"}}), 100) == OrderResult::finite(2));
  CHECK(order(J({{"-1", "x2"}, {"-1", "0"}}), 100) == OrderResult::infinite());
  CHECK(order(J({{"2", "0"}}), 100) == OrderResult::infinite());
  CHECK(order(JonqElement::identity(2), 100) == OrderResult::finite(1));
  CHECK(to_string(order(J({{"-1", "x2"}, {"1", "0"}}), 100)) == "finite(2)");
}

TEST_CASE("order of Jhat elements is searched up to the cap") {
  CHECK(order(J({{"x2", "0"}, {"1", "0"}}, Variant::Jhat), 12) == OrderResult::unknown(12));
  CHECK(order(J({{"-1", "x2"}, {"1", "0"}}, Variant::Jhat), 12) == OrderResult::finite(2));
  // g^2 sends x1 to -x2^2 x1, and powers never return.
  CHECK(order(J({{"x2", "0"}, {"-1", "0"}}, Variant::Jhat), 8) == OrderResult::unknown(8));
}

TEST_CASE("subgroup closure examples") {
  const auto c1 = subgroup_closure(std::vector{J({{"-1", "0"}})}, 64);
  CHECK_FALSE(c1.overflow);
  CHECK(c1.elements.size() == 2);

  const auto klein = subgroup_closure(std::vector{J({{"-1", "0"}, {"1", "0"}}), J({{"1", "0"}, {"-1", "0"}})}, 64);
  CHECK_FALSE(klein.overflow);
  CHECK(klein.elements.size() == 4);
  CHECK(is_abelian(klein.elements));

  CHECK(subgroup_closure(std::vector{J({{"1", "1"}})}, 100).overflow);
}

TEST_CASE("compose is the composition of substitutions") {
  std::mt19937 rng(42);
  for (int i = 0; i < 40; ++i) {
    const JonqElement g1 = testing::random_j(rng, 3), g2 = testing::random_j(rng, 3);
    const RatFunc f = canonicalize(testing::random_poly(rng, testing::xs(1, 3), 2, 3),
                                   testing::random_poly(rng, testing::xs(1, 3), 1, 2) + Polynomial(7));
    CHECK(apply(compose(g1, g2), f) == apply(g1, apply(g2, f)));
    // Pointwise: (g1 g2)·x_i at p is x_i of g2 evaluated at the image point of g1.
    const auto p = random_point(rng, 3);
    const auto q = testing::image_point(g1, p);
    REQUIRE(q);
    const auto lhs = testing::image_point(compose(g1, g2), p), rhs = testing::image_point(g2, *q);
    REQUIRE(lhs);
    REQUIRE(rhs);
    CHECK(*lhs == *rhs);
  }
}

TEST_CASE("characters multiply and increments follow the twisted cocycle") {
  std::mt19937 rng(43);
  for (int i = 0; i < 40; ++i) {
    const JonqElement g1 = testing::random_j(rng, 3), g2 = testing::random_j(rng, 3);
    const JonqElement r = compose(g1, g2);
    for (std::size_t k = 1; k <= 3; ++k) {
      CHECK(r.multiplier(k).constant_value() == g1.multiplier(k).constant_value() * g2.multiplier(k).constant_value());
      CHECK(r.increment(k) == g2.multiplier(k) * g1.increment(k) + apply(g1, g2.increment(k)));
    }
  }
}

TEST_CASE("inverse round trips and flag stability") {
  std::mt19937 rng(44);
  for (int i = 0; i < 40; ++i) {
    const JonqElement g = testing::random_j(rng, 4);
    CHECK(compose(g, invert(g)).is_identity());
    CHECK(compose(invert(g), g).is_identity());
    CHECK(power(g, -2) == invert(compose(g, g)));
    for (std::uint32_t j = 1; j <= 4; ++j)
      for (std::uint32_t k = 0; k < j; ++k) CHECK(depends_only_on(apply(g, X(j)), FlagIndex{k}));
  }
}

TEST_CASE("unipotent elements with a nonzero increment have infinite order") {
  std::mt19937 rng(45);
  for (int i = 0; i < 30; ++i) {
    std::vector<Component> cs;
    for (std::size_t k = 1; k <= 3; ++k)
      cs.push_back({RatFunc(1), RatFunc(testing::random_poly(rng, testing::xs(static_cast<std::uint32_t>(k + 1), 3), 2, 2))});
    const JonqElement g(Variant::J, cs);
    if (g.is_identity()) continue;
    CHECK(order(g, 50) == OrderResult::infinite());
    // Independent check: the first few powers are not the identity.
    for (long m = 1; m <= 4; ++m) CHECK_FALSE(power(g, m).is_identity());
  }
}

TEST_CASE("Jhat composition and inversion") {
  const JonqElement g = J({{"x2", "x3"}, {"x3 + 1", "0"}, {"1", "1"}}, Variant::Jhat);
  const JonqElement h = J({{"1/x3", "x2*x3"}, {"2", "x3^2"}, {"-1", "0"}}, Variant::Jhat);
  const JonqElement r = compose(g, h);
  for (std::uint32_t i = 1; i <= 3; ++i) CHECK(apply(r, X(i)) == apply(g, apply(h, X(i))));
  CHECK(compose(g, invert(g)).is_identity());
  CHECK(compose(invert(h), h).is_identity());
}
