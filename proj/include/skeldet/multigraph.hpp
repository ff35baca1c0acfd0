#pragma once

// Loopless undirected multigraphs on {0, 1, ..., n} with root 0.

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "skeldet/integer_matrix.hpp"
#include "skeldet/numeric.hpp"

namespace skeldet {

class Multigraph {
 public:
  /// Edgeless graph with n non-root vertices; n >= 1.
  explicit Multigraph(std::size_t n);

  /// Validates symmetry, zero diagonal and nonnegativity of an
  /// (n+1) x (n+1) adjacency matrix.
  static Multigraph from_adjacency(const IntegerMatrix& adjacency);

  /// Number of non-root vertices.
  std::size_t n() const noexcept { return n_; }

  const BigInt& multiplicity(std::size_t i, std::size_t j) const { return adj_(i, j); }

  /// Sets a_ij = a_ji = m. Rejects i == j and negative m.
  void set_multiplicity(std::size_t i, std::size_t j, const BigInt& m);

  const IntegerMatrix& adjacency() const noexcept { return adj_; }

  /// d_i, the number of edges at vertex i.
  BigInt degree(std::size_t i) const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::size_t n_;
  IntegerMatrix adj_;
};

/// Nonempty subset of {1, ..., n}, kept sorted.
class VertexSet {
 public:
  VertexSet(std::vector<std::size_t> members, std::size_t n);

  /// Subset encoded as bit (i-1) for vertex i.
  static VertexSet from_mask(std::uint64_t mask, std::size_t n);

  const std::vector<std::size_t>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(std::size_t vertex) const;
  std::uint64_t mask() const noexcept { return mask_; }

 private:
  std::vector<std::size_t> members_;
  std::uint64_t mask_ = 0;
};

struct Laplacians {
  IntegerMatrix laplacian;            // L = D - A
  IntegerMatrix signless;             // Q = D + A
  IntegerMatrix truncated_laplacian;  // L with root row/column deleted
  IntegerMatrix truncated_signless;   // Q with root row/column deleted
};

/// K_{n+1}^{a,b}: root edges of multiplicity a, all others b.
Multigraph complete_multigraph(std::size_t n, const BigInt& a, const BigInt& b);

/// K_{n+1} with the root edges to n-r+1, ..., n removed.
Multigraph g_n_r(std::size_t n, std::size_t r);

/// Path 0 - 1 - ... - n.
Multigraph path_graph(std::size_t n);

/// Number of edges from i in A to vertices outside A (root included).
BigInt outside_degree(const Multigraph& g, const VertexSet& a, std::size_t i);

/// Same as outside_degree with A given as a bit mask (bit i-1 for vertex i).
BigInt outside_degree(const Multigraph& g, std::uint64_t mask, std::size_t i);

Laplacians laplacians(const Multigraph& g);

/// Removes one of the parallel edges between the root and j.
Multigraph delete_root_edge(const Multigraph& g, std::size_t j);

/// Identifies vertex j with the root: a'_{0r} = a_{0r} + a_{jr}, other
/// multiplicities kept, vertices above j shift down by one. Requires n >= 2.
Multigraph merge_into_root(const Multigraph& g, std::size_t j);

/// Every pair {i, j} independently gets a multiplicity uniform in
/// [0, max_multiplicity].
Multigraph random_multigraph(std::size_t n, std::uint64_t max_multiplicity, std::uint64_t seed);

/// K_{n+1}^{a,b} with a uniformly chosen sub-multiset of the root edges removed
/// (each root multiplicity becomes uniform in [0, a]).
Multigraph random_root_deletion(std::size_t n, std::uint64_t a, std::uint64_t b,
                                std::uint64_t seed);

/// The graph with non-root vertices renumbered: new vertex k+1 is old vertex
/// perm[k]+1.
Multigraph relabeled(const Multigraph& g, const std::vector<std::size_t>& perm);

// Graph files.
//
// Text: first line `n`, then lines `i j m` (0 <= i < j <= n, m >= 1); unlisted
// pairs are 0; `#` starts a comment. JSON: {"n": n, "adj": [[...], ...]}.

Multigraph read_graph_text(std::istream& in);
void write_graph_text(std::ostream& out, const Multigraph& g);
nlohmann::json graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const nlohmann::json& j);

/// Reads either format, choosing JSON when the first non-blank character is '{'.
Multigraph read_graph_file(const std::string& path);

}  // namespace skeldet
