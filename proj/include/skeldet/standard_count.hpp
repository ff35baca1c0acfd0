#pragma once

// Standard monomials of Artinian monomial quotients R/I, plus brute-force
// parking predicates used as independent oracles.
//
// dim_K R/I equals the number of standard monomials for every field K, so
// nothing here takes a field parameter.

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "skeldet/lambda_seq.hpp"
#include "skeldet/monomial_ideal.hpp"
#include "skeldet/multigraph.hpp"
#include "skeldet/numeric.hpp"

namespace skeldet {

/// bounds[i] = least e with x_{i+1}^e in I. Standard monomials lie in the
/// box prod [0, bounds[i]).
struct ArtinianBox {
  std::vector<Exponent> bounds;

  BigInt volume() const;
};

/// Throws NotArtinianError naming the first unbounded variable.
ArtinianBox artinian_box(const MonomialIdeal& ideal);

/// dim R/I.
///
/// Splits on the last variable: for x_n = e the standard monomials are those
/// of the ideal generated by the projections of generators with x_n-exponent
/// <= e, and that ideal only changes where e crosses a generator's
/// x_n-exponent. Each constant stretch contributes (length) * (count of the
/// projected ideal), so large boxes are never walked point by point.
BigInt count_standard(const MonomialIdeal& ideal);

inline constexpr std::size_t kInclusionExclusionGuard = 22;

/// Inclusion-exclusion over subsets of the non-pure-power generators, each
/// term counting box points divisible by an lcm. Independent of
/// count_standard; throws GuardExceededError above 22 minimal generators.
BigInt count_standard_ie(const MonomialIdeal& ideal);

inline constexpr std::uint64_t kEnumerationGuard = 1'000'000;

/// All standard monomials in lexicographic order with x_n the most
/// significant variable (then x_{n-1}, ...). Walks the box with prefix
/// pruning. Throws GuardExceededError above 10^6 monomials.
std::vector<Monomial> enumerate_standard(const MonomialIdeal& ideal);

/// One exponent vector per line, space-separated.
void write_exponent_vectors(std::ostream& out, std::span<const Monomial> monomials);

/// The sorted rearrangement q of p satisfies q_i < lambda_{n-i+1}.
bool is_lambda_parking(std::span<const Exponent> p, const LambdaSeq& lambda);

/// Brute force over [0, lambda_1)^n.
BigInt count_lambda_parking(const LambdaSeq& lambda);

/// Every nonempty A in [n] has some i in A with p_i < d_A(i).
bool is_g_parking(const Multigraph& g, std::span<const Exponent> p);

/// Brute force over the box prod [0, d_i) using is_g_parking.
BigInt count_g_parking(const Multigraph& g);

/// All G-parking functions, in the same order as enumerate_standard.
std::vector<Monomial> enumerate_g_parking(const Multigraph& g);

}  // namespace skeldet
