#pragma once

// Exact dense linear algebra over the integers. No floating point anywhere:
// determinant signs and PSD verdicts are certificates.

#include <cstddef>
#include <span>
#include <vector>

#include "skeldet/integer_matrix.hpp"
#include "skeldet/numeric.hpp"

namespace skeldet {

/// Coefficients of det(xI - M), lowest degree first: c_0 + c_1 x + ... + x^n.
struct CharPoly {
  std::vector<BigInt> coefficients;

  std::size_t degree() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  BigInt evaluate(const BigInt& x) const;

  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

/// Fraction-free (Bareiss) elimination with row pivoting.
BigInt det(const IntegerMatrix& m);

/// Laplace expansion along the first row; an independent check on det().
/// Throws GuardExceededError above order 8.
BigInt det_cofactor(const IntegerMatrix& m);

/// Faddeev-LeVerrier recurrence; every division is exact over the integers.
CharPoly char_poly(const IntegerMatrix& m);

/// Exact positive-semidefiniteness of a symmetric integer matrix.
///
/// With det(xI - M) = x^n - e_1 x^{n-1} + e_2 x^{n-2} - ... the spectrum is
/// real, so all eigenvalues are >= 0 iff every e_k >= 0 (Descartes: with
/// alternating signs there are no negative roots; conversely e_k are the
/// elementary symmetric functions of the eigenvalues).
/// Throws std::invalid_argument for a non-symmetric input.
bool is_psd(const IntegerMatrix& m);

/// Symmetric, nonnegative, and each diagonal entry at least its row's
/// off-diagonal maximum.
bool in_class_gn(const IntegerMatrix& m);

/// Rows and columns restricted to `kept`, in the given order.
IntegerMatrix principal_submatrix(const IntegerMatrix& m, std::span<const std::size_t> kept);

/// Same matrix with row/column `index` removed.
IntegerMatrix delete_index(const IntegerMatrix& m, std::size_t index);

/// P M P^t for the permutation sending new index k to old index perm[k],
/// i.e. result(k, l) = m(perm[k], perm[l]).
IntegerMatrix permuted(const IntegerMatrix& m, std::span<const std::size_t> perm);

/// Product of the diagonal entries.
BigInt diagonal_product(const IntegerMatrix& m);

}  // namespace skeldet
