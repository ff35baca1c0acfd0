#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace skeldet {

/// lambda_1 >= lambda_2 >= ... >= lambda_n >= 1.
class LambdaSeq {
 public:
  /// Throws std::invalid_argument unless nonempty, nonincreasing and positive.
  explicit LambdaSeq(std::vector<std::uint32_t> values);

  std::size_t size() const noexcept { return values_.size(); }

  /// lambda_k for 1 <= k <= n.
  std::uint32_t at(std::size_t k) const { return values_.at(k - 1); }

  const std::vector<std::uint32_t>& values() const noexcept { return values_; }

 private:
  std::vector<std::uint32_t> values_;
};

/// Every nonincreasing sequence of length n with entries in [1, max_value].
std::vector<LambdaSeq> all_lambda_sequences(std::size_t n, std::uint32_t max_value);

}  // namespace skeldet
