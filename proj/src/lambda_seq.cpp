#include "skeldet/lambda_seq.hpp"

#include <functional>
#include <stdexcept>

namespace skeldet {

LambdaSeq::LambdaSeq(std::vector<std::uint32_t> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw std::invalid_argument("lambda sequence must be nonempty");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 1) {
      throw std::invalid_argument("lambda entries must be positive");
    }
    if (i > 0 && values_[i] > values_[i - 1]) {
      throw std::invalid_argument("lambda must be nonincreasing");
    }
  }
}

std::vector<LambdaSeq> all_lambda_sequences(std::size_t n, std::uint32_t max_value) {
  std::vector<LambdaSeq> out;
  std::vector<std::uint32_t> current;
  std::function<void(std::uint32_t)> extend = [&](std::uint32_t cap) {
    if (current.size() == n) {
      out.emplace_back(current);
      return;
    }
    for (std::uint32_t v = cap; v >= 1; --v) {
      current.push_back(v);
      extend(v);
      current.pop_back();
    }
  };
  if (n > 0) {
    extend(max_value);
  }
  return out;
}

}  // namespace skeldet
