#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <json.hpp>

#include "skeldet/numeric.hpp"

namespace skeldet {

/// Dense square matrix of arbitrary-precision integers, row-major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;

  /// Zero matrix of the given order.
  explicit IntegerMatrix(std::size_t order);

  /// From nested rows; throws std::invalid_argument unless square.
  explicit IntegerMatrix(const std::vector<std::vector<BigInt>>& rows);
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t order);
  static IntegerMatrix diagonal(std::span<const BigInt> entries);

  std::size_t order() const noexcept { return order_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * order_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * order_ + j];
  }

  bool is_symmetric() const;
  IntegerMatrix transposed() const;

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;
  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);

 private:
  std::size_t order_ = 0;
  std::vector<BigInt> entries_;
};

/// Array of rows, each entry a decimal string.
nlohmann::json to_json(const IntegerMatrix& m);

/// Accepts entries as decimal strings or JSON integers.
IntegerMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace skeldet
