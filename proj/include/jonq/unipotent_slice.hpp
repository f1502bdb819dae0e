#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "jonq/ratfunc.hpp"

namespace jonq {

/// One-parameter additive action x_i ↦ x_i + F_i(x, u), with F_i ∈ K_i(u).
/// The parameter is Var::u().
struct AdditiveFlow {
  std::size_t n = 0;
  std::vector<RatFunc> F;

  static AdditiveFlow trivial(std::size_t n) { return {n, std::vector<RatFunc>(n)}; }
  bool is_trivial() const;
  friend bool operator==(const AdditiveFlow&, const AdditiveFlow&) = default;
};

/// Checks triangularity, F(0) = 0 and the group law with two symbolic
/// parameters. Throws ValidationError; returns the flow unchanged.
const AdditiveFlow& validate_flow(const AdditiveFlow& flow);

/// x_i ↦ x_i + F_i(x, value) for all i.
Substitution flow_substitution(const AdditiveFlow& flow, const RatFunc& value);
/// The flow at parameter `value` applied to f.
RatFunc apply_flow(const AdditiveFlow& flow, const RatFunc& f, const RatFunc& value);

struct SlopeData {
  std::size_t d = 0;  // largest index with F_d ≠ 0
  RatFunc s;          // F_d = u·s
};

SlopeData extract_slope(const AdditiveFlow& flow);

struct SliceStep {
  SlopeData slope;
  /// Current coordinates that survive, 1-based, ascending (all but d).
  std::vector<std::size_t> kept;
  /// Pivot-invariant pullbacks x̂_j of the kept coordinates.
  std::vector<RatFunc> pullbacks;
  /// Every non-pivot flow transported to the slice x_d = c, relabelled to
  /// n - 1 variables in the order of `kept`.
  std::vector<AdditiveFlow> induced;
};

/// One reduction step. Throws DegenerateError when c makes some function
/// undefined on the slice, or when the pivot flow is trivial.
SliceStep slice_step(std::span<const AdditiveFlow> flows, std::size_t pivot, const Rational& c);

struct SliceResult {
  std::size_t n = 0;
  std::vector<std::size_t> indices;  // ascending
  std::vector<Rational> constants;   // aligned with indices
  /// Invariants in the original variables; the j-th restricts to the j-th
  /// coordinate not in `indices`.
  std::vector<RatFunc> invariants;
};

/// "x1 = 0, x2 = 0"; "whole space" when no index is fixed.
std::string describe_subspace(const SliceResult& r);

std::vector<Rational> default_candidates();

/// Repeatedly slices along the first nontrivial flow, trying constants in
/// candidate order. Throws DegenerateError("candidates exhausted at level d")
/// and std::logic_error if the final invariants fail the exact check.
SliceResult slice_chain(std::span<const AdditiveFlow> flows, std::span<const Rational> candidates);

/// Generic orbit dimension: rank of the velocity vectors dF/du at u = 0.
std::size_t generic_orbit_dimension(std::span<const AdditiveFlow> flows);

bool verify_cross_section(std::span<const AdditiveFlow> flows, const SliceResult& result);

/// Structure constants [e_i, e_j] = sum_k c_ij^k e_k of a nilpotent Lie
/// algebra with strictly triangular constants (c_ij^k ≠ 0 only for k > j > i).
class NilpotentAlgebra {
 public:
  explicit NilpotentAlgebra(std::size_t dim);

  std::size_t dim() const { return dim_; }
  /// Sets c_ij^k; (j, i) is stored as the negative. 1-based indices.
  void set(std::size_t i, std::size_t j, std::size_t k, const Rational& c);
  /// c_ij^k for any i, j (antisymmetric, zero on the diagonal).
  Rational constant(std::size_t i, std::size_t j, std::size_t k) const;

  /// Throws ValidationError on triangularity or Jacobi failure.
  void validate() const;

 private:
  std::size_t dim_;
  std::vector<Rational> c_;  // dim^3, (i, j, k) with i < j only
  std::size_t slot(std::size_t i, std::size_t j, std::size_t k) const;
};

/// One flow per basis element: x ↦ exp(u A_e) x with (A_e)_{kl} = c_{e,k}^l.
std::vector<AdditiveFlow> coadjoint_flows(const NilpotentAlgebra& g);

}  // namespace jonq
