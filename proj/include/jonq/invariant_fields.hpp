#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jonq/int_matrix.hpp"
#include "jonq/jonq_group.hpp"
#include "jonq/ratfunc.hpp"

namespace jonq {

/// Search bounds for invariant polynomials z = sum_k c_k x_i^k, c_k ∈ K_i.
/// Nothing bounds these a priori; the defaults are a practical choice.
struct AnsatzBounds {
  unsigned max_degree_in_t = 6;   // largest k tried
  unsigned max_coeff_degree = 6;  // total degree of each c_k numerator
};

/// Finds the lowest-degree polynomial z ∈ K_i[x_i] \ K_i fixed by every
/// generator, within the bounds. The invariance condition is linear in the
/// unknown coefficients and is solved exactly; the result is the first
/// reduced-echelon solution (smallest leading coefficient first), scaled so
/// that the leading term of its leading coefficient is 1.
std::optional<RatFunc> miyata_step(std::span<const JonqElement> gens, std::size_t level, const AnsatzBounds& bounds);

struct LevelRecord {
  enum class Status { Certified, Trivial, Unresolved };
  std::size_t level = 0;
  Status status = Status::Unresolved;
  std::optional<RatFunc> generator;
  AnsatzBounds bounds;
};

std::string to_string(LevelRecord::Status s);

struct ChainResult {
  /// Levels in the order computed: i = n, n-1, ..., 1.
  std::vector<LevelRecord> levels;
  std::vector<RatFunc> generators;
  /// Every level certified and the generators are algebraically independent.
  bool pure_certified = false;
};

/// Runs miyata_step down the flag, i = n .. 1.
ChainResult invariant_chain(std::span<const JonqElement> gens, const AnsatzBounds& bounds);

/// Laurent monomials x^v for v in the integer kernel of the weight matrix
/// (negative exponents in the denominator); n - rank(W) of them.
std::vector<RatFunc> torus_monomial_invariants(const IntMatrix& weights);

/// Exact Jacobian rank test over the rational function field.
bool check_independence(std::span<const RatFunc> fs);

/// Group average of f over a finite set of elements.
RatFunc reynolds_average(std::span<const JonqElement> group, const RatFunc& f);

}  // namespace jonq
