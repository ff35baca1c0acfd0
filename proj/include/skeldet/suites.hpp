#pragma once

// Verification suites. Each returns a report whose content depends only on
// its arguments (timing aside); random instances carry their own seeds so any
// trial can be replayed.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <optional>

#include "skeldet/integer_matrix.hpp"
#include "skeldet/monomial_ideal.hpp"
#include "skeldet/multigraph.hpp"
#include "skeldet/report.hpp"

namespace skeldet {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// M_G^(1), read as M_G^(0) = M_G when n = 1.
MonomialIdeal one_skeleton_ideal(const Multigraph& g);

/// dim R/M_G = det L~ for each graph.
VerificationReport suite_matrix_tree(std::span<const Multigraph> graphs);

/// K_{n+1}^{a,b} for small n, a, b; G_{n,r}; path P_4; a few random multigraphs.
std::vector<Multigraph> default_matrix_tree_corpus(std::uint64_t seed);

/// dim R/M_G^(1) = det Q~ on root-deleted subgraphs of K_{n+1}^{a,b}: the
/// exhaustive G_{n,r} grid (2 <= n <= n_max) against det_q_gnr, the
/// K_{n+1}^{a,b} grid against dim_skel1_kab, and `trials` random deletions.
VerificationReport suite_rc(std::size_t n_max, std::uint64_t a_max, std::uint64_t b_max,
                            std::size_t trials, std::uint64_t seed);

/// dim R/M_G^(1) >= det Q~ on random multigraphs, after the fixed witnesses
/// P_4 (strict) and K_4 (tight).
VerificationReport suite_ineq(std::size_t n_max, std::uint64_t mult_max, std::size_t trials,
                              std::uint64_t seed);

/// dim R/J_H >= det H on certified PSD members of class G_n.
VerificationReport suite_mt(std::size_t n_max, std::uint64_t entry_max, std::size_t trials,
                            std::uint64_t seed);

/// Colon identity (I_{n,r-1} : x_{n-r+1}) = I_{n,r}, the dimension recurrence,
/// and lemma2_sum against enumeration, for n <= n_max, 2 <= a <= a_max.
VerificationReport suite_lemma1(std::size_t n_max, std::uint64_t a_max);

/// Splitting identities, `trials` instances each:
///   (a) det Q~_G = det Q~_{G-e0} + det Q~_{G/j}
///   (b) dim M_G^(1) = dim M_{G-e0}^(1) + dim M_{G/j}^(1)
///   (c) det H = (h_pp - b) det H2 + det T
///   (d) dim J_H = prod (h_ll - b) dim J_{H1} + (h_pp - b) dim J_{H2}
VerificationReport suite_decomp(std::size_t trials, std::uint64_t seed);

/// steck_count = brute force = dim R/M_lambda for all lambda with n <= n_max,
/// lambda_1 <= lambda_max; n! f_n^b and n! g_n^b against steck_count on
/// arithmetic progressions (n <= ap_n_max, 1 <= x, b <= ap_max); and
/// n! g_n^b(a+(n-2)b) = dim_skel1_kab on the same grid.
VerificationReport suite_steck(std::size_t n_max, std::uint32_t lambda_max,
                               std::size_t ap_n_max, std::uint64_t ap_max);

/// I_{n,n}^<a> = I_{n,0}^<a-1> for n <= n_max, 2 <= a <= a_max, and the
/// numeric identity for n <= numeric_n_max, a in {-5..0} u {2..10}.
VerificationReport suite_remark(std::size_t n_max, std::uint64_t a_max,
                                std::size_t numeric_n_max);

/// Property checks on a seeded corpus: counting-oracle agreement, G-parking
/// equivalence, det routes, Hadamard and Fischer bounds, relabeling
/// invariance, and skeleton monotonicity.
VerificationReport suite_properties(std::uint64_t seed);

/// Random member of class G_n that passes is_psd, by one of three
/// strategies chosen from `strategy` mod 3. Returns nullopt for a rejected draw.
std::optional<IntegerMatrix> draw_psd_class_matrix(std::size_t n, std::uint64_t entry_max,
                                                   std::size_t strategy, std::uint64_t seed);

}  // namespace skeldet
