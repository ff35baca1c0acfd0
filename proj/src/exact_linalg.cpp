#include "skeldet/exact_linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "skeldet/errors.hpp"

namespace skeldet {

BigInt CharPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

BigInt det(const IntegerMatrix& m) {
  const std::size_t n = m.order();
  if (n == 0) {
    return 1;
  }
  IntegerMatrix a = m;
  BigInt previous_pivot = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) {
        ++swap_row;
      }
      if (swap_row == n) {
        return 0;
      }
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(k, j), a(swap_row, j));
      }
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), previous_pivot.get_mpz_t());
      }
      a(i, k) = 0;
    }
    previous_pivot = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

BigInt cofactor_expand(const IntegerMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  if (cols.empty()) {
    return 1;
  }
  BigInt total = 0;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const std::size_t col = cols[k];
    if (m(row, col) == 0) {
      continue;
    }
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
    BigInt minor = cofactor_expand(m, cols, row + 1);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), col);
    if (k % 2 == 0) {
      total += m(row, col) * minor;
    } else {
      total -= m(row, col) * minor;
    }
  }
  return total;
}

}  // namespace

BigInt det_cofactor(const IntegerMatrix& m) {
  if (m.order() > 8) {
    throw GuardExceededError("cofactor expansion order", std::to_string(m.order()));
  }
  std::vector<std::size_t> cols(m.order());
  std::iota(cols.begin(), cols.end(), std::size_t{0});
  return cofactor_expand(m, cols, 0);
}

CharPoly char_poly(const IntegerMatrix& m) {
  // M_1 = I, c_{n-1} = -tr(A); M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  const std::size_t n = m.order();
  CharPoly poly;
  poly.coefficients.assign(n + 1, BigInt(0));
  poly.coefficients[n] = 1;
  IntegerMatrix work(n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntegerMatrix next = m * work;
    for (std::size_t i = 0; i < n; ++i) {
      next(i, i) += poly.coefficients[n - k + 1];
    }
    IntegerMatrix product = m * next;
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      trace += product(i, i);
    }
    BigInt coefficient = -trace;
    mpz_divexact_ui(coefficient.get_mpz_t(), coefficient.get_mpz_t(), k);
    poly.coefficients[n - k] = coefficient;
    work = std::move(next);
  }
  return poly;
}

bool is_psd(const IntegerMatrix& m) {
  if (!m.is_symmetric()) {
    throw std::invalid_argument("is_psd requires a symmetric matrix");
  }
  const CharPoly poly = char_poly(m);
  const std::size_t n = m.order();
  // e_k = (-1)^k c_{n-k}
  for (std::size_t k = 1; k <= n; ++k) {
    const BigInt& c = poly.coefficients[n - k];
    const bool e_negative = (k % 2 == 0) ? (c < 0) : (c > 0);
    if (e_negative) {
      return false;
    }
  }
  return true;
}

bool in_class_gn(const IntegerMatrix& m) {
  if (!m.is_symmetric()) {
    return false;
  }
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) {
      if (m(i, j) < 0 || m(i, j) > m(i, i)) {
        return false;
      }
    }
  }
  return true;
}

IntegerMatrix principal_submatrix(const IntegerMatrix& m, std::span<const std::size_t> kept) {
  if (kept.empty()) {
    throw std::invalid_argument("principal_submatrix: empty index selection");
  }
  IntegerMatrix sub(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (kept[i] >= m.order() || kept[j] >= m.order()) {
        throw std::out_of_range("principal_submatrix: index out of range");
      }
      sub(i, j) = m(kept[i], kept[j]);
    }
  }
  return sub;
}

IntegerMatrix delete_index(const IntegerMatrix& m, std::size_t index) {
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < m.order(); ++i) {
    if (i != index) {
      kept.push_back(i);
    }
  }
  return principal_submatrix(m, kept);
}

IntegerMatrix permuted(const IntegerMatrix& m, std::span<const std::size_t> perm) {
  if (perm.size() != m.order()) {
    throw std::invalid_argument("permutation length does not match matrix order");
  }
  std::vector<std::size_t> check(perm.begin(), perm.end());
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i) {
    if (check[i] != i) {
      throw std::invalid_argument("not a permutation");
    }
  }
  return principal_submatrix(m, perm);
}

BigInt diagonal_product(const IntegerMatrix& m) {
  BigInt product = 1;
  for (std::size_t i = 0; i < m.order(); ++i) {
    product *= m(i, i);
  }
  return product;
}

}  // namespace skeldet
