#include "skeldet/decomposition.hpp"

#include <stdexcept>

#include "skeldet/exact_linalg.hpp"
#include "skeldet/monomial_ideal.hpp"
#include "skeldet/standard_count.hpp"

namespace skeldet {

GraphSplit split_graph(const Multigraph& g, std::size_t j) {
  return GraphSplit{j, delete_root_edge(g, j), merge_into_root(g, j)};
}

std::optional<MatrixSplit> split_matrix(const IntegerMatrix& h, std::string* reason) {
  const std::size_t n = h.order();
  auto fail = [&](const std::string& why) -> std::optional<MatrixSplit> {
    if (reason) {
      *reason = why;
    }
    return std::nullopt;
  };
  if (n < 2) {
    return fail("order below 2");
  }
  if (!h.is_symmetric()) {
    return fail("matrix is not symmetric");
  }
  BigInt b = h(0, 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && h(i, j) > b) {
        b = h(i, j);
      }
    }
  }
  std::size_t pivot_old = n;
  for (std::size_t i = 0; i < n && pivot_old == n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && h(i, j) == b) {
        pivot_old = i;
        break;
      }
    }
  }
  std::vector<std::size_t> before;
  std::vector<std::size_t> after;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == pivot_old) {
      continue;
    }
    (h(pivot_old, j) == b ? after : before).push_back(j);
  }
  MatrixSplit split;
  split.perm = before;
  split.perm.push_back(pivot_old);
  split.perm.insert(split.perm.end(), after.begin(), after.end());
  split.pivot = before.size();
  split.b = b;
  split.reordered = permuted(h, split.perm);

  const std::size_t p = split.pivot;
  for (std::size_t i = 0; i < p; ++i) {
    if (!(split.reordered(i, p) < b)) {
      return fail("reordering did not separate the pivot row");
    }
  }
  for (std::size_t j = p + 1; j < n; ++j) {
    if (split.reordered(p, j) != b) {
      return fail("reordering did not separate the pivot row");
    }
  }

  std::vector<std::size_t> leading(p + 1);
  for (std::size_t i = 0; i <= p; ++i) {
    leading[i] = i;
  }
  split.h1 = principal_submatrix(split.reordered, leading);
  split.h1(p, p) = b;
  split.h2 = delete_index(split.reordered, p);
  split.t = split.reordered;
  split.t(p, p) = b;
  return split;
}

BigInt split_det(const MatrixSplit& split) {
  const BigInt head = split.reordered(split.pivot, split.pivot) - split.b;
  return head * det(split.h2) + det(split.t);
}

BigInt split_dim(const MatrixSplit& split) {
  const std::size_t n = split.reordered.order();
  const std::size_t p = split.pivot;
  BigInt tail = 1;
  for (std::size_t l = p + 1; l < n; ++l) {
    tail *= split.reordered(l, l) - split.b;
  }
  const BigInt head = split.reordered(p, p) - split.b;
  BigInt total = tail * count_standard(matrix_ideal(split.h1));
  if (head != 0) {
    total += head * count_standard(matrix_ideal(split.h2));
  }
  return total;
}

}  // namespace skeldet
