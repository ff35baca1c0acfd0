#pragma once

// The two splittings behind the exact-sequence arguments:
//  * a multigraph G with a root edge at j splits into G - e0 and G with j
//    merged into the root;
//  * H in class G_n, reordered so that one index r+1 (here `pivot`) has
//    entries < b before it and == b after it (b the largest off-diagonal
//    entry), splits into H1, H2 and T.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "skeldet/integer_matrix.hpp"
#include "skeldet/multigraph.hpp"
#include "skeldet/numeric.hpp"

namespace skeldet {

struct GraphSplit {
  std::size_t j;
  Multigraph without_edge;  // G - e0
  Multigraph merged;        // j identified with the root
};

/// Requires a root edge at j and n >= 2.
GraphSplit split_graph(const Multigraph& g, std::size_t j);

struct MatrixSplit {
  /// reordered(k, l) = H(perm[k], perm[l]).
  std::vector<std::size_t> perm;
  /// Zero-based position of the split index in the reordered matrix.
  std::size_t pivot;
  /// Largest off-diagonal entry.
  BigInt b;
  IntegerMatrix reordered;
  /// Leading (pivot+1) block with the pivot diagonal entry replaced by b.
  IntegerMatrix h1;
  /// Reordered matrix with the pivot row and column deleted.
  IntegerMatrix h2;
  /// Reordered matrix with the pivot diagonal entry replaced by b.
  IntegerMatrix t;
};

/// Reorders H so that a pivot index p satisfies H'(i, p) < b for i < p and
/// H'(p, j) = b for j > p. Takes the first index touching an off-diagonal b
/// as the pivot, its smaller neighbours before it and its b-neighbours after
/// it, then verifies the pattern. Returns nullopt (with `reason` filled)
/// when H has order < 2 or is not symmetric.
std::optional<MatrixSplit> split_matrix(const IntegerMatrix& h, std::string* reason = nullptr);

/// (h_pp - b) det H2 + det T, which equals det H by linearity in the pivot column.
BigInt split_det(const MatrixSplit& split);

/// prod_{l > p} (h_ll - b) * dim R/J_{H1} + (h_pp - b) * dim R/J_{H2}.
/// The second term is dropped when H2 would be empty (never for order >= 2).
BigInt split_dim(const MatrixSplit& split);

}  // namespace skeldet
