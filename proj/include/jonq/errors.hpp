#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jonq {

/// A structural constraint of a map, flow or algebra is violated. `index()` is
/// the 1-based coordinate (or basis) index at fault, 0 when not applicable.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(const std::string& what, std::size_t index = 0)
      : std::invalid_argument(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Substitution produced an identically zero denominator.
class UndefinedError : public std::domain_error {
 public:
  explicit UndefinedError(const std::string& what = "map undefined on this function")
      : std::domain_error(what) {}
};

/// A chosen slice constant is not admissible; callers retry with another one.
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace jonq
