#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "jonq/int_matrix.hpp"
#include "jonq/rational.hpp"

namespace jonq {

struct FaithfulnessReport {
  bool faithful = false;
  std::size_t rank = 0;
  std::size_t trdeg = 0;
  /// Invariant factors of W; all 1 exactly when the torus embeds.
  std::vector<Integer> invariant_factors;
};

/// Torus (k^×)^m acting on A^n through the rows of W.
FaithfulnessReport faithfulness_report(const IntMatrix& weights);

/// Number of distinct nonzero roots in t of
///   mu1·a1·t^d1 + mu2·a2·t^d2 + nu
/// for generic (a1, a2), computed exactly over Q(a1, a2).
/// Throws std::invalid_argument if all three coefficients vanish.
std::size_t generic_root_count(long d1, long d2, const Rational& mu1, const Rational& mu2, const Rational& nu);

struct LineCase {
  std::string label;
  Rational mu1, mu2, nu;
  std::size_t generic_count = 0;
};

struct LineCertificate {
  long d1 = 0, d2 = 0;
  std::vector<LineCase> cases;
  bool no_line = false;
  /// The line of the first case meeting a generic orbit exactly once.
  std::optional<std::string> candidate;
  bool condition_sub = false;  // d1 - d2 >= 2
  bool condition_d = false;    // |d1|, |d2| >= 2
  bool condition_gcd = false;  // gcd(d1, d2) = 1
};

/// Runs generic_root_count over every class of lines mu1·x1 + mu2·x2 + nu = 0
/// for the action t·(x1, x2) = (t^d1 x1, t^d2 x2).
LineCertificate no_affine_line_certificate(long d1, long d2);

/// "x1 + x2 = -1" style text for the line mu1·x1 + mu2·x2 + nu = 0.
std::string describe_line(const Rational& mu1, const Rational& mu2, const Rational& nu);

}  // namespace jonq
