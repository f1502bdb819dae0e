#pragma once

#include <gmpxx.h>

#include <string>

namespace jonq {

using Integer = mpz_class;
/// Always kept in lowest terms with a positive denominator (GMP canonical form).
using Rational = mpq_class;

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace jonq
