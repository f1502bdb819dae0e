#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "jonq/ratfunc.hpp"

namespace jonq {

/// J: scalar multipliers. Jhat: multipliers are functions in K_i.
enum class Variant { J, Jhat };

std::string to_string(Variant v);

/// One coordinate of a triangular map: g·x_i = multiplier·x_i + increment.
struct Component {
  RatFunc multiplier;  // chi_i(g)
  RatFunc increment;   // phi_i(g)

  friend bool operator==(const Component&, const Component&) = default;
};

/// A rational de Jonquières map of Q(x_1, ..., x_n):
///   g·x_i = mu_i x_i + f_i,   f_i ∈ K_i,   mu_i ∈ Q^× (J) or K_i^× (Jhat).
/// Construction validates every component and throws ValidationError naming
/// the first offending index.
class JonqElement {
 public:
  JonqElement(Variant variant, std::vector<Component> components);

  static JonqElement identity(std::size_t n, Variant variant = Variant::J);

  std::size_t dimension() const { return components_.size(); }
  Variant variant() const { return variant_; }
  /// 1-based access.
  const Component& component(std::size_t i) const { return components_.at(i - 1); }
  const RatFunc& multiplier(std::size_t i) const { return component(i).multiplier; }
  const RatFunc& increment(std::size_t i) const { return component(i).increment; }
  std::span<const Component> components() const { return components_; }

  /// g·x_i as a rational function.
  RatFunc image(std::size_t i) const;
  /// x_i ↦ g·x_i for all i.
  Substitution as_substitution() const;
  bool is_identity() const;
  /// Rendered text of all 2n component functions; equal iff elements equal.
  std::string canonical_key() const;

  friend bool operator==(const JonqElement& a, const JonqElement& b) {
    return a.variant_ == b.variant_ && a.components_ == b.components_;
  }

 private:
  Variant variant_;
  std::vector<Component> components_;
};

/// The field automorphism action: simultaneous substitution x_i ↦ g·x_i.
RatFunc apply(const JonqElement& g, const RatFunc& f);

/// Product g1·g2 with apply(g1·g2, f) = apply(g1, apply(g2, f)). For J the
/// closed-form law (multiplicative characters, twisted cocycle) is computed
/// and cross-checked against direct substitution; a mismatch throws
/// std::logic_error.
JonqElement compose(const JonqElement& g1, const JonqElement& g2);

/// Inverse by back-substitution from x_n down to x_1.
JonqElement invert(const JonqElement& g);

/// g^k for any integer k.
JonqElement power(const JonqElement& g, long k);

struct OrderResult {
  enum class Kind { Finite, Infinite, Unknown };
  Kind kind = Kind::Unknown;
  /// The order for Finite, the search cap for Unknown.
  std::uint64_t value = 0;

  static OrderResult finite(std::uint64_t m) { return {Kind::Finite, m}; }
  static OrderResult infinite() { return {Kind::Infinite, 0}; }
  static OrderResult unknown(std::uint64_t cap) { return {Kind::Unknown, cap}; }
  friend bool operator==(const OrderResult&, const OrderResult&) = default;
};

std::string to_string(const OrderResult& r);

/// J: decided exactly (multipliers must lie in {±1} for finite order, then
/// g^{m0} is tested against the identity). Jhat: powers are tried up to cap.
OrderResult order(const JonqElement& g, std::uint64_t cap);

struct ClosureResult {
  bool overflow = false;
  /// Breadth-first discovery order, identity first.
  std::vector<JonqElement> elements;
};

/// Subgroup generated by gens (closed under products and inverses), or
/// overflow once it exceeds cap elements.
ClosureResult subgroup_closure(std::span<const JonqElement> gens, std::size_t cap);

bool is_abelian(std::span<const JonqElement> elements);

}  // namespace jonq
