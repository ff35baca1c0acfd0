#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skeldet {

/// The quotient R/I is not finite dimensional: some variable has no pure
/// power among the generators.
class NotArtinianError : public std::domain_error {
 public:
  explicit NotArtinianError(std::size_t variable)
      : std::domain_error("ideal is not Artinian: no pure power of x_" +
                          std::to_string(variable + 1)),
        variable_(variable) {}

  /// Zero-based index of the unbounded variable.
  std::size_t variable() const noexcept { return variable_; }

 private:
  std::size_t variable_;
};

/// A work bound (box size, generator count) was exceeded.
class GuardExceededError : public std::length_error {
 public:
  GuardExceededError(const std::string& what_guard, const std::string& size)
      : std::length_error(what_guard + " exceeds guard (size " + size + ")") {}
};

}  // namespace skeldet
