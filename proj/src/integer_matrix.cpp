#include "skeldet/integer_matrix.hpp"

#include <stdexcept>
#include <string>

namespace skeldet {

IntegerMatrix::IntegerMatrix(std::size_t order)
    : order_(order), entries_(order * order, BigInt(0)) {}

IntegerMatrix::IntegerMatrix(const std::vector<std::vector<BigInt>>& rows)
    : IntegerMatrix(rows.size()) {
  for (std::size_t i = 0; i < order_; ++i) {
    if (rows[i].size() != order_) {
      throw std::invalid_argument("matrix is not square: row " + std::to_string(i) +
                                  " has " + std::to_string(rows[i].size()) +
                                  " entries, expected " + std::to_string(order_));
    }
    for (std::size_t j = 0; j < order_; ++j) {
      (*this)(i, j) = rows[i][j];
    }
  }
}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntegerMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != order_) {
      throw std::invalid_argument("matrix is not square");
    }
    std::size_t j = 0;
    for (long v : row) {
      (*this)(i, j++) = v;
    }
    ++i;
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t order) {
  IntegerMatrix m(order);
  for (std::size_t i = 0; i < order; ++i) {
    m(i, i) = 1;
  }
  return m;
}

IntegerMatrix IntegerMatrix::diagonal(std::span<const BigInt> entries) {
  IntegerMatrix m(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    m(i, i) = entries[i];
  }
  return m;
}

bool IntegerMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = i + 1; j < order_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) {
        return false;
      }
    }
  }
  return true;
}

IntegerMatrix IntegerMatrix::transposed() const {
  IntegerMatrix t(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = 0; j < order_; ++j) {
      t(j, i) = (*this)(i, j);
    }
  }
  return t;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("matrix product of different orders");
  }
  const std::size_t n = a.order();
  IntegerMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k) == 0) {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        c(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return c;
}

nlohmann::json to_json(const IntegerMatrix& m) {
  auto rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.order(); ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.order(); ++j) {
      row.push_back(to_string(m(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

IntegerMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("matrix JSON must be an array of rows");
  }
  std::vector<std::vector<BigInt>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) {
      throw std::invalid_argument("matrix JSON row must be an array");
    }
    auto& out = rows.emplace_back();
    for (const auto& entry : row) {
      if (entry.is_string()) {
        out.push_back(parse_bigint(entry.get<std::string>()));
      } else if (entry.is_number_integer()) {
        out.emplace_back(std::to_string(entry.get<long long>()));
      } else {
        throw std::invalid_argument("matrix entry must be an integer or decimal string");
      }
    }
  }
  return IntegerMatrix(rows);
}

}  // namespace skeldet
