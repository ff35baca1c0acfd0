#pragma once

// Monomials and monomial ideals in K[x_1, ..., x_n], stored as minimal
// generator lists. Variable x_{i+1} lives in slot i.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <vector>

#include <json.hpp>

#include "skeldet/integer_matrix.hpp"
#include "skeldet/lambda_seq.hpp"
#include "skeldet/multigraph.hpp"

namespace skeldet {

using Exponent = std::uint32_t;

/// Converts an exponent computed in arbitrary precision; throws
/// std::overflow_error when it is negative or too large for a machine word.
Exponent to_exponent(const BigInt& value);

class Monomial {
 public:
  /// The monomial 1 in nvars variables.
  explicit Monomial(std::size_t nvars) : exponents_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exponents) : exponents_(std::move(exponents)) {}

  /// x_{var+1}^e.
  static Monomial power(std::size_t nvars, std::size_t var, Exponent e);

  std::size_t nvars() const noexcept { return exponents_.size(); }
  Exponent operator[](std::size_t i) const { return exponents_[i]; }
  const std::vector<Exponent>& exponents() const noexcept { return exponents_; }

  bool is_one() const;
  std::uint64_t total_degree() const;

  /// True when this monomial divides `other`.
  bool divides(const Monomial& other) const;

  /// this / gcd(this, m): the generator of (<this> : m).
  Monomial quotient_by_gcd(const Monomial& m) const;

  Monomial lcm(const Monomial& other) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);

  /// Lexicographic on exponent vectors.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exponents_;
};

std::ostream& operator<<(std::ostream& out, const Monomial& m);

/// Drops generators divisible by another generator (and duplicates); the
/// result is sorted. Any generator equal to 1 collapses the list to {1}.
std::vector<Monomial> minimalize(std::vector<Monomial> generators);

class MonomialIdeal {
 public:
  /// Minimalizes eagerly. Every generator must have nvars slots.
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> generators);

  static MonomialIdeal unit(std::size_t nvars);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Monomial>& generators() const noexcept { return generators_; }
  bool is_unit() const;

  /// Some generator divides m.
  bool contains(const Monomial& m) const;

  /// Identical minimal generator sets.
  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t nvars_;
  std::vector<Monomial> generators_;
};

bool contains(const MonomialIdeal& ideal, const Monomial& m);

/// Equality of ideals; throws std::invalid_argument on an nvars mismatch.
bool equals(const MonomialIdeal& a, const MonomialIdeal& b);

/// m_A = prod_{i in A} x_i^{d_A(i)}.
Monomial parking_generator(const Multigraph& g, const VertexSet& a);

/// The m_A with 1 <= |A| <= k+1, before minimalization, with A running over
/// bit masks in increasing order (colexicographic order of subsets).
std::vector<Monomial> skeleton_generators(const Multigraph& g, std::size_t k);

/// M_G^(k) for 0 <= k <= n-1.
MonomialIdeal skeleton_ideal(const Multigraph& g, std::size_t k);

/// M_G, the G-parking function ideal (k = n-1).
MonomialIdeal parking_ideal(const Multigraph& g);

/// M_lambda = <(prod_{i in A} x_i)^{lambda_|A|} : A nonempty>.
MonomialIdeal lambda_ideal(const LambdaSeq& lambda);

/// omega(i) = a on the first n-r variables and a-1 on the last r.
struct WeightFunction {
  std::size_t n;
  std::size_t r;
  Exponent a;

  /// Validates 0 <= r <= n, a >= 1, and a >= 2 when r >= 1.
  WeightFunction(std::size_t n, std::size_t r, Exponent a);

  /// Weight of x_{var+1}.
  Exponent operator()(std::size_t var) const { return var < n - r ? a : a - 1; }
};

/// <x_i^{w(i)}, x_i^{w(i)-1} x_j^{w(j)-1} : i != j>.
MonomialIdeal weight_ideal(const WeightFunction& w);
MonomialIdeal weight_ideal(std::size_t n, std::size_t r, Exponent a);

/// J_H = <x_l^{h_ll}, x_i^{h_ii - h_ij} x_j^{h_jj - h_ij}> for H in class G_n.
/// Throws std::invalid_argument when H is not in the class.
MonomialIdeal matrix_ideal(const IntegerMatrix& h);

/// (I : m), generated by g / gcd(g, m).
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m);

/// <I, x_{var+1}^e>; e = 0 gives the unit ideal.
MonomialIdeal adjoin_power(const MonomialIdeal& ideal, std::size_t var, Exponent e);

/// One generator per line, exponents separated by spaces.
void write_ideal(std::ostream& out, const MonomialIdeal& ideal);

/// {"nvars": n, "generators": [["e1", ...], ...]} with decimal-string exponents.
nlohmann::json ideal_to_json(const MonomialIdeal& ideal);

}  // namespace skeldet
