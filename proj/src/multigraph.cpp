#include "skeldet/multigraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "skeldet/exact_linalg.hpp"
#include "skeldet/random.hpp"

namespace skeldet {

namespace {

void check_vertex(const Multigraph& g, std::size_t v, const char* what) {
  if (v > g.n()) {
    throw std::out_of_range(std::string(what) + ": vertex " + std::to_string(v) +
                            " outside 0.." + std::to_string(g.n()));
  }
}

void check_nonroot(const Multigraph& g, std::size_t v, const char* what) {
  if (v < 1 || v > g.n()) {
    throw std::out_of_range(std::string(what) + ": vertex " + std::to_string(v) +
                            " outside 1.." + std::to_string(g.n()));
  }
}

}  // namespace

Multigraph::Multigraph(std::size_t n) : n_(n), adj_(n + 1) {
  if (n < 1) {
    throw std::invalid_argument("multigraph needs at least one non-root vertex");
  }
}

Multigraph Multigraph::from_adjacency(const IntegerMatrix& adjacency) {
  if (adjacency.order() < 2) {
    throw std::invalid_argument("adjacency matrix must have order at least 2");
  }
  Multigraph g(adjacency.order() - 1);
  for (std::size_t i = 0; i < adjacency.order(); ++i) {
    if (adjacency(i, i) != 0) {
      throw std::invalid_argument("adjacency has a loop at vertex " + std::to_string(i));
    }
    for (std::size_t j = i + 1; j < adjacency.order(); ++j) {
      if (adjacency(i, j) != adjacency(j, i)) {
        throw std::invalid_argument("adjacency is not symmetric at (" + std::to_string(i) +
                                    "," + std::to_string(j) + ")");
      }
      g.set_multiplicity(i, j, adjacency(i, j));
    }
  }
  return g;
}

void Multigraph::set_multiplicity(std::size_t i, std::size_t j, const BigInt& m) {
  check_vertex(*this, i, "set_multiplicity");
  check_vertex(*this, j, "set_multiplicity");
  if (i == j) {
    throw std::invalid_argument("loops are not allowed (vertex " + std::to_string(i) + ")");
  }
  if (m < 0) {
    throw std::invalid_argument("negative edge multiplicity");
  }
  adj_(i, j) = m;
  adj_(j, i) = m;
}

BigInt Multigraph::degree(std::size_t i) const {
  check_vertex(*this, i, "degree");
  BigInt d = 0;
  for (std::size_t j = 0; j <= n_; ++j) {
    d += adj_(i, j);
  }
  return d;
}

VertexSet::VertexSet(std::vector<std::size_t> members, std::size_t n)
    : members_(std::move(members)) {
  if (members_.empty()) {
    throw std::invalid_argument("vertex set must be nonempty");
  }
  if (n > 64) {
    throw std::invalid_argument("vertex sets support at most 64 non-root vertices");
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (std::size_t v : members_) {
    if (v < 1 || v > n) {
      throw std::out_of_range("vertex set member " + std::to_string(v) + " outside 1.." +
                              std::to_string(n));
    }
    mask_ |= std::uint64_t{1} << (v - 1);
  }
}

VertexSet VertexSet::from_mask(std::uint64_t mask, std::size_t n) {
  std::vector<std::size_t> members;
  for (std::size_t v = 1; v <= n && v <= 64; ++v) {
    if (mask & (std::uint64_t{1} << (v - 1))) {
      members.push_back(v);
    }
  }
  return VertexSet(std::move(members), n);
}

bool VertexSet::contains(std::size_t vertex) const {
  return std::binary_search(members_.begin(), members_.end(), vertex);
}

Multigraph complete_multigraph(std::size_t n, const BigInt& a, const BigInt& b) {
  if (n < 1) {
    throw std::invalid_argument("complete_multigraph: n must be at least 1");
  }
  if (a < 1) {
    throw std::invalid_argument("complete_multigraph: a must be at least 1");
  }
  if (n >= 2 && b < 1) {
    throw std::invalid_argument("complete_multigraph: b must be at least 1");
  }
  Multigraph g(n);
  for (std::size_t i = 1; i <= n; ++i) {
    g.set_multiplicity(0, i, a);
    for (std::size_t j = i + 1; j <= n; ++j) {
      g.set_multiplicity(i, j, b);
    }
  }
  return g;
}

Multigraph g_n_r(std::size_t n, std::size_t r) {
  if (r > n) {
    throw std::invalid_argument("g_n_r: r must lie in [0, n]");
  }
  Multigraph g = complete_multigraph(n, 1, 1);
  for (std::size_t i = n - r + 1; i <= n; ++i) {
    g.set_multiplicity(0, i, 0);
  }
  return g;
}

Multigraph path_graph(std::size_t n) {
  Multigraph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.set_multiplicity(i, i + 1, 1);
  }
  return g;
}

BigInt outside_degree(const Multigraph& g, std::uint64_t mask, std::size_t i) {
  check_nonroot(g, i, "outside_degree");
  if (!(mask & (std::uint64_t{1} << (i - 1)))) {
    throw std::invalid_argument("outside_degree: vertex " + std::to_string(i) +
                                " is not in A");
  }
  BigInt d = g.multiplicity(i, 0);
  for (std::size_t j = 1; j <= g.n(); ++j) {
    if (!(mask & (std::uint64_t{1} << (j - 1)))) {
      d += g.multiplicity(i, j);
    }
  }
  return d;
}

BigInt outside_degree(const Multigraph& g, const VertexSet& a, std::size_t i) {
  return outside_degree(g, a.mask(), i);
}

Laplacians laplacians(const Multigraph& g) {
  const std::size_t order = g.n() + 1;
  IntegerMatrix l(order);
  IntegerMatrix q(order);
  for (std::size_t i = 0; i < order; ++i) {
    const BigInt d = g.degree(i);
    for (std::size_t j = 0; j < order; ++j) {
      if (i == j) {
        l(i, i) = d;
        q(i, i) = d;
      } else {
        l(i, j) = -g.multiplicity(i, j);
        q(i, j) = g.multiplicity(i, j);
      }
    }
  }
  Laplacians out{l, q, delete_index(l, 0), delete_index(q, 0)};
  return out;
}

Multigraph delete_root_edge(const Multigraph& g, std::size_t j) {
  check_nonroot(g, j, "delete_root_edge");
  if (g.multiplicity(0, j) == 0) {
    throw std::invalid_argument("delete_root_edge: no edge between 0 and " + std::to_string(j));
  }
  Multigraph out = g;
  out.set_multiplicity(0, j, g.multiplicity(0, j) - 1);
  return out;
}

Multigraph merge_into_root(const Multigraph& g, std::size_t j) {
  check_nonroot(g, j, "merge_into_root");
  if (g.n() < 2) {
    throw std::invalid_argument("merge_into_root needs n >= 2");
  }
  // old vertex for each new vertex index
  std::vector<std::size_t> old_of;
  for (std::size_t v = 0; v <= g.n(); ++v) {
    if (v != j) {
      old_of.push_back(v);
    }
  }
  Multigraph out(g.n() - 1);
  for (std::size_t r = 1; r < old_of.size(); ++r) {
    out.set_multiplicity(0, r, g.multiplicity(0, old_of[r]) + g.multiplicity(j, old_of[r]));
    for (std::size_t s = r + 1; s < old_of.size(); ++s) {
      out.set_multiplicity(r, s, g.multiplicity(old_of[r], old_of[s]));
    }
  }
  return out;
}

Multigraph random_multigraph(std::size_t n, std::uint64_t max_multiplicity, std::uint64_t seed) {
  if (max_multiplicity < 1) {
    throw std::invalid_argument("random_multigraph: max_multiplicity must be at least 1");
  }
  Rng rng(seed);
  Multigraph g(n);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      g.set_multiplicity(i, j, from_u64(rng.uniform(0, max_multiplicity)));
    }
  }
  return g;
}

Multigraph random_root_deletion(std::size_t n, std::uint64_t a, std::uint64_t b,
                                std::uint64_t seed) {
  Multigraph g = complete_multigraph(n, from_u64(a), from_u64(b));
  Rng rng(seed);
  for (std::size_t i = 1; i <= n; ++i) {
    const std::uint64_t removed = rng.uniform(0, a);
    g.set_multiplicity(0, i, from_u64(a - removed));
  }
  return g;
}

Multigraph relabeled(const Multigraph& g, const std::vector<std::size_t>& perm) {
  if (perm.size() != g.n()) {
    throw std::invalid_argument("relabeled: permutation length must be n");
  }
  std::vector<std::size_t> full{0};
  for (std::size_t p : perm) {
    full.push_back(p + 1);
  }
  return Multigraph::from_adjacency(permuted(g.adjacency(), full));
}

}  // namespace skeldet
