#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "skeldet/exact_linalg.hpp"
#include "skeldet/lambda_seq.hpp"
#include "skeldet/multigraph.hpp"
#include "skeldet/random.hpp"
#include "skeldet/standard_count.hpp"

namespace skeldet {
namespace {

class Seeded : public ::testing::TestWithParam<std::uint64_t> {};

INSTANTIATE_TEST_SUITE_P(Seeds, Seeded, ::testing::Range<std::uint64_t>(0, 40));

/// Artinian ideal: pure powers plus a few random mixed generators.
MonomialIdeal random_artinian_ideal(Rng& rng) {
  const std::size_t n = rng.uniform(1, 4);
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < n; ++i) {
    gens.push_back(Monomial::power(n, i, static_cast<Exponent>(rng.uniform(1, 6))));
  }
  const std::size_t extra = rng.uniform(0, 6);
  for (std::size_t k = 0; k < extra; ++k) {
    std::vector<Exponent> e(n);
    for (auto& x : e) {
      x = static_cast<Exponent>(rng.uniform(0, 4));
    }
    gens.emplace_back(e);
  }
  return MonomialIdeal(n, gens);
}

TEST_P(Seeded, ThreeCountingMethodsAgree) {
  Rng rng(GetParam());
  for (int k = 0; k < 5; ++k) {
    const MonomialIdeal i = random_artinian_ideal(rng);
    const BigInt fast = count_standard(i);
    EXPECT_EQ(fast, count_standard_ie(i));
    EXPECT_EQ(fast, BigInt(static_cast<unsigned long>(enumerate_standard(i).size())));
    for (const auto& m : enumerate_standard(i)) {
      EXPECT_FALSE(i.contains(m));
    }
  }
}

TEST_P(Seeded, GraphInvariants) {
  Rng rng(GetParam());
  const std::size_t n = rng.uniform(1, 5);
  const Multigraph g = random_multigraph(n, 3, rng.next());
  const Laplacians lap = laplacians(g);
  EXPECT_TRUE(g.adjacency().is_symmetric());
  EXPECT_TRUE(is_psd(lap.laplacian));
  EXPECT_TRUE(is_psd(lap.signless));
  EXPECT_TRUE(is_psd(lap.truncated_signless));
  EXPECT_EQ(count_standard(parking_ideal(g)), det(lap.truncated_laplacian));
  EXPECT_EQ(enumerate_g_parking(g), enumerate_standard(parking_ideal(g)));
  EXPECT_GE(count_standard(skeleton_ideal(g, std::min<std::size_t>(1, n - 1))),
            det(lap.truncated_signless));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    EXPECT_GE(count_standard(skeleton_ideal(g, k)), count_standard(skeleton_ideal(g, k + 1)));
  }
}

TEST_P(Seeded, GramMatricesArePsd) {
  Rng rng(GetParam());
  const std::size_t n = rng.uniform(1, 6);
  const std::size_t m = rng.uniform(1, 6);
  IntegerMatrix b(std::max(n, m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      b(i, j) = static_cast<long>(rng.uniform(0, 10)) - 5;
    }
  }
  const IntegerMatrix gram = b.transposed() * b;
  EXPECT_TRUE(is_psd(gram));
  EXPECT_LE(det(gram), diagonal_product(gram));
  std::vector<std::size_t> perm(gram.order());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::reverse(perm.begin(), perm.end());
  EXPECT_EQ(det(permuted(gram, perm)), det(gram));
  const BigInt sign = gram.order() % 2 == 0 ? 1 : -1;
  EXPECT_EQ(char_poly(gram).evaluate(0), BigInt(sign * det(gram)));
}

TEST(LambdaEquivalence, AllSmallSequences) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& lambda : all_lambda_sequences(n, 5)) {
      EXPECT_EQ(count_lambda_parking(lambda), count_standard(lambda_ideal(lambda)));
    }
  }
}

}  // namespace
}  // namespace skeldet
