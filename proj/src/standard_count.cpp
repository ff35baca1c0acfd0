#include "skeldet/standard_count.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "skeldet/errors.hpp"

namespace skeldet {

BigInt ArtinianBox::volume() const {
  BigInt v = 1;
  for (Exponent b : bounds) {
    v *= b;
  }
  return v;
}

namespace {

constexpr Exponent kUnbounded = std::numeric_limits<Exponent>::max();

/// Least e with x_var^e among the generators, or kUnbounded.
Exponent pure_power_bound(std::span<const Monomial> gens, std::size_t var) {
  Exponent best = kUnbounded;
  for (const auto& g : gens) {
    bool pure = true;
    for (std::size_t i = 0; i < g.nvars(); ++i) {
      if (i != var && g[i] != 0) {
        pure = false;
        break;
      }
    }
    if (pure) {
      best = std::min(best, g[var]);
    }
  }
  return best;
}

// Counts standard monomials in the first `nvars` variables of an ideal whose
// generators live in those variables (higher slots ignored). Artinian-ness
// is checked by the caller.
BigInt count_prefix(const std::vector<Monomial>& gens, std::size_t nvars) {
  for (const auto& g : gens) {
    bool one = true;
    for (std::size_t i = 0; i < nvars; ++i) {
      if (g[i] != 0) {
        one = false;
        break;
      }
    }
    if (one) {
      return 0;
    }
  }
  if (nvars == 0) {
    return 1;
  }
  const std::size_t var = nvars - 1;
  Exponent bound = kUnbounded;
  for (const auto& g : gens) {
    bool pure = true;
    for (std::size_t i = 0; i < var; ++i) {
      if (g[i] != 0) {
        pure = false;
        break;
      }
    }
    if (pure) {
      bound = std::min(bound, g[var]);
    }
  }
  std::vector<Exponent> cuts{0};
  for (const auto& g : gens) {
    if (g[var] < bound) {
      cuts.push_back(g[var]);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  cuts.push_back(bound);

  BigInt total = 0;
  std::vector<Monomial> projected;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const Exponent e = cuts[k];
    projected.clear();
    for (const auto& g : gens) {
      if (g[var] <= e) {
        projected.push_back(g);
      }
    }
    const BigInt sub = count_prefix(projected, var);
    if (sub != 0) {
      total += sub * (cuts[k + 1] - e);
    }
  }
  return total;
}

}  // namespace

ArtinianBox artinian_box(const MonomialIdeal& ideal) {
  ArtinianBox box;
  for (std::size_t var = 0; var < ideal.nvars(); ++var) {
    const Exponent b = pure_power_bound(ideal.generators(), var);
    if (b == kUnbounded) {
      throw NotArtinianError(var);
    }
    box.bounds.push_back(b);
  }
  return box;
}

BigInt count_standard(const MonomialIdeal& ideal) {
  artinian_box(ideal);
  return count_prefix(ideal.generators(), ideal.nvars());
}

namespace {

struct InclusionExclusion {
  const std::vector<Monomial>& gens;
  const ArtinianBox& box;
  BigInt total = 0;

  // Adds (-1)^{|S|+1} * #(box points divisible by lcm(S)) for every nonempty S
  // extending `chosen` with generators of index >= next. Terms whose lcm leaves
  // the box vanish together with all their supersets.
  void extend(const Monomial& lcm, std::size_t size, std::size_t next) {
    for (std::size_t k = next; k < gens.size(); ++k) {
      const Monomial grown = lcm.lcm(gens[k]);
      BigInt points = 1;
      bool empty = false;
      for (std::size_t i = 0; i < grown.nvars(); ++i) {
        if (grown[i] >= box.bounds[i]) {
          empty = true;
          break;
        }
        points *= box.bounds[i] - grown[i];
      }
      if (empty) {
        continue;
      }
      if ((size + 1) % 2 == 1) {
        total += points;
      } else {
        total -= points;
      }
      extend(grown, size + 1, k + 1);
    }
  }
};

}  // namespace

BigInt count_standard_ie(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) {
    return 0;
  }
  const ArtinianBox box = artinian_box(ideal);
  if (ideal.generators().size() > kInclusionExclusionGuard) {
    throw GuardExceededError("inclusion-exclusion generator count",
                             std::to_string(ideal.generators().size()));
  }
  InclusionExclusion ie{ideal.generators(), box};
  ie.extend(Monomial(ideal.nvars()), 0, 0);
  return box.volume() - ie.total;
}

namespace {

// Recursive box walk from the most significant variable (x_n) down to x_1.
void walk(const MonomialIdeal& ideal, const ArtinianBox& box, std::vector<Exponent>& point,
          std::size_t var, std::vector<Monomial>& out) {
  for (Exponent e = 0; e < box.bounds[var]; ++e) {
    point[var] = e;
    // unassigned lower slots are 0, so membership of the prefix is inherited
    // by every completion and every larger e
    if (ideal.contains(Monomial(point))) {
      break;
    }
    if (var == 0) {
      out.emplace_back(point);
    } else {
      walk(ideal, box, point, var - 1, out);
    }
  }
  point[var] = 0;
}

}  // namespace

std::vector<Monomial> enumerate_standard(const MonomialIdeal& ideal) {
  const ArtinianBox box = artinian_box(ideal);
  const BigInt count = count_standard(ideal);
  if (count > kEnumerationGuard) {
    throw GuardExceededError("standard monomial enumeration", to_string(count));
  }
  std::vector<Monomial> out;
  if (ideal.is_unit()) {
    return out;
  }
  out.reserve(count.get_ui());
  std::vector<Exponent> point(ideal.nvars(), 0);
  walk(ideal, box, point, ideal.nvars() - 1, out);
  return out;
}

void write_exponent_vectors(std::ostream& out, std::span<const Monomial> monomials) {
  for (const auto& m : monomials) {
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      out << (i ? " " : "") << m[i];
    }
    out << '\n';
  }
}

bool is_lambda_parking(std::span<const Exponent> p, const LambdaSeq& lambda) {
  if (p.size() != lambda.size()) {
    throw std::invalid_argument("is_lambda_parking: length mismatch");
  }
  std::vector<Exponent> sorted(p.begin(), p.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  for (std::size_t i = 1; i <= n; ++i) {
    if (sorted[i - 1] >= lambda.at(n - i + 1)) {
      return false;
    }
  }
  return true;
}

namespace {

// Calls visit(point) for every point of prod [0, bounds[i]); odometer order
// with slot n-1 most significant.
template <typename Visit>
void for_each_box_point(const std::vector<Exponent>& bounds, Visit&& visit) {
  if (std::any_of(bounds.begin(), bounds.end(), [](Exponent b) { return b == 0; })) {
    return;
  }
  std::vector<Exponent> point(bounds.size(), 0);
  while (true) {
    visit(point);
    std::size_t i = 0;
    while (i < point.size() && ++point[i] == bounds[i]) {
      point[i] = 0;
      ++i;
    }
    if (i == point.size()) {
      return;
    }
  }
}

void check_box_guard(const std::vector<Exponent>& bounds, const char* what) {
  BigInt volume = 1;
  for (Exponent b : bounds) {
    volume *= b;
  }
  if (volume > 50'000'000) {
    throw GuardExceededError(what, to_string(volume));
  }
}

}  // namespace

BigInt count_lambda_parking(const LambdaSeq& lambda) {
  const std::vector<Exponent> bounds(lambda.size(), lambda.at(1));
  check_box_guard(bounds, "lambda-parking brute force box");
  std::uint64_t count = 0;
  for_each_box_point(bounds, [&](const std::vector<Exponent>& p) {
    if (is_lambda_parking(p, lambda)) {
      ++count;
    }
  });
  return from_u64(count);
}

bool is_g_parking(const Multigraph& g, std::span<const Exponent> p) {
  const std::size_t n = g.n();
  if (p.size() != n) {
    throw std::invalid_argument("is_g_parking: length mismatch");
  }
  if (n > 30) {
    throw std::invalid_argument("is_g_parking supports at most 30 non-root vertices");
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    bool some_below = false;
    for (std::size_t i = 1; i <= n && !some_below; ++i) {
      if (mask & (std::uint64_t{1} << (i - 1))) {
        some_below = outside_degree(g, mask, i) > p[i - 1];
      }
    }
    if (!some_below) {
      return false;
    }
  }
  return true;
}

BigInt count_g_parking(const Multigraph& g) {
  return from_u64(enumerate_g_parking(g).size());
}

std::vector<Monomial> enumerate_g_parking(const Multigraph& g) {
  std::vector<Exponent> bounds;
  for (std::size_t i = 1; i <= g.n(); ++i) {
    bounds.push_back(to_exponent(g.degree(i)));
  }
  check_box_guard(bounds, "G-parking brute force box");
  std::vector<Monomial> out;
  for_each_box_point(bounds, [&](const std::vector<Exponent>& p) {
    if (is_g_parking(g, p)) {
      out.emplace_back(p);
    }
  });
  return out;
}

}  // namespace skeldet
