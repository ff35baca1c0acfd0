#include <gtest/gtest.h>

#include <sstream>
#include <vector>

#include "skeldet/errors.hpp"
#include "skeldet/lambda_seq.hpp"
#include "skeldet/multigraph.hpp"
#include "skeldet/standard_count.hpp"
#include "test_helpers.hpp"

namespace skeldet {
namespace {

using testing::ideal;
using testing::mono;

TEST(CountStandard, Examples) {
  EXPECT_EQ(count_standard(ideal(2, {{1, 0}, {0, 1}})), 1);
  EXPECT_EQ(count_standard(parking_ideal(complete_multigraph(3, 1, 1))), 16);
  EXPECT_EQ(count_standard(skeleton_ideal(complete_multigraph(3, 1, 1), 1)), 20);
  EXPECT_EQ(count_standard(MonomialIdeal::unit(3)), 0);
}

TEST(CountStandard, NonArtinianNamesVariable) {
  try {
    count_standard(ideal(3, {{2, 0, 0}, {0, 0, 1}}));
    FAIL() << "expected NotArtinianError";
  } catch (const NotArtinianError& e) {
    EXPECT_EQ(e.variable(), 1u);
    EXPECT_NE(std::string(e.what()).find("x_2"), std::string::npos);
  }
  EXPECT_THROW(count_standard_ie(ideal(2, {{1, 1}})), NotArtinianError);
  EXPECT_THROW(enumerate_standard(ideal(2, {{1, 0}})), NotArtinianError);
}

TEST(CountStandard, LargeBoxIsNotWalked) {
  // box volume 10^18: only the split-by-stretch recursion can finish this
  const Exponent big = 1000000;
  const MonomialIdeal i = ideal(3, {{big, 0, 0}, {0, big, 0}, {0, 0, big}, {1, 1, 1}});
  const BigInt expected = ipow(big, 3) - ipow(big - 1, 3);
  EXPECT_EQ(count_standard(i), expected);
  EXPECT_EQ(count_standard_ie(i), expected);
}

TEST(CountStandardIe, Examples) {
  EXPECT_EQ(count_standard_ie(ideal(2, {{2, 0}, {0, 2}, {1, 1}})), 3);
  EXPECT_EQ(count_standard_ie(skeleton_ideal(g_n_r(3, 1), 1)), 12);
  EXPECT_EQ(count_standard_ie(MonomialIdeal::unit(2)), 0);
  EXPECT_THROW(count_standard_ie(parking_ideal(complete_multigraph(5, 1, 1))),
               GuardExceededError);
}

TEST(EnumerateStandard, Examples) {
  EXPECT_EQ(enumerate_standard(parking_ideal(complete_multigraph(2, 1, 1))),
            (std::vector<Monomial>{mono({0, 0}), mono({1, 0}), mono({0, 1})}));
  EXPECT_EQ(enumerate_standard(ideal(1, {{1}})), (std::vector<Monomial>{mono({0})}));
  EXPECT_EQ(enumerate_standard(skeleton_ideal(path_graph(3), 1)),
            (std::vector<Monomial>{mono({0, 0, 0}), mono({1, 0, 0})}));
  EXPECT_TRUE(enumerate_standard(MonomialIdeal::unit(2)).empty());
  const Exponent big = 2000;
  EXPECT_THROW(enumerate_standard(ideal(2, {{big, 0}, {0, big}})), GuardExceededError);
}

TEST(EnumerateStandard, ExponentVectorDump) {
  std::ostringstream out;
  const auto listed = enumerate_standard(parking_ideal(complete_multigraph(2, 1, 1)));
  write_exponent_vectors(out, listed);
  EXPECT_EQ(out.str(), "0 0\n1 0\n0 1\n");
}

TEST(LambdaParking, Examples) {
  const LambdaSeq l21({2, 1});
  const std::vector<Exponent> p10{1, 0};
  const std::vector<Exponent> p11{1, 1};
  const std::vector<Exponent> p1{1};
  EXPECT_TRUE(is_lambda_parking(p10, l21));
  EXPECT_FALSE(is_lambda_parking(p11, l21));
  EXPECT_THROW(is_lambda_parking(p1, l21), std::invalid_argument);
  EXPECT_EQ(count_lambda_parking(l21), 3);
  EXPECT_EQ(count_lambda_parking(LambdaSeq({3, 2, 1})), 16);
  EXPECT_EQ(count_lambda_parking(LambdaSeq({3, 2, 2})), 20);
  EXPECT_EQ(count_lambda_parking(LambdaSeq({4, 3, 3, 1})), 141);
  EXPECT_EQ(count_lambda_parking(LambdaSeq({4, 4, 2, 2})), 176);
}

TEST(GParking, Examples) {
  const Multigraph k3 = complete_multigraph(2, 1, 1);
  const std::vector<Exponent> p01{0, 1};
  const std::vector<Exponent> p11{1, 1};
  const std::vector<Exponent> p00{0, 0};
  const std::vector<Exponent> p0{0};
  EXPECT_TRUE(is_g_parking(k3, p01));
  EXPECT_FALSE(is_g_parking(k3, p11));
  EXPECT_TRUE(is_g_parking(k3, p00));
  EXPECT_THROW(is_g_parking(k3, p0), std::invalid_argument);
  EXPECT_EQ(count_g_parking(complete_multigraph(3, 1, 1)), 16);
  EXPECT_EQ(count_g_parking(complete_multigraph(2, 2, 1)), 8);
}

// frozen from the independent Python/sympy brute force in tests/oracles
TEST(FrozenOracle, CompleteGraphs) {
  const BigInt parking[] = {3, 16, 125, 1296};
  const BigInt skeleton[] = {3, 20, 189, 2304};
  for (std::size_t n = 2; n <= 5; ++n) {
    const Multigraph k = complete_multigraph(n, 1, 1);
    EXPECT_EQ(count_standard(parking_ideal(k)), parking[n - 2]) << "n=" << n;
    EXPECT_EQ(count_standard(skeleton_ideal(k, 1)), skeleton[n - 2]) << "n=" << n;
  }
  EXPECT_EQ(count_standard(skeleton_ideal(complete_multigraph(3, 2, 3), 1)), 350);
  EXPECT_EQ(count_standard(parking_ideal(complete_multigraph(2, 2, 1))), 8);
  EXPECT_EQ(count_standard(parking_ideal(path_graph(3))), 1);
  EXPECT_EQ(count_standard(skeleton_ideal(path_graph(3), 1)), 2);
}

TEST(FrozenOracle, GnrGrid) {
  const std::vector<std::vector<long>> expected = {
      {3, 1, 0}, {20, 12, 7, 4}, {189, 135, 96, 68, 48}, {2304, 1792, 1392, 1080, 837, 648}};
  for (std::size_t n = 2; n <= 5; ++n) {
    for (std::size_t r = 0; r <= n; ++r) {
      EXPECT_EQ(count_standard(skeleton_ideal(g_n_r(n, r), 1)), expected[n - 2][r])
          << "n=" << n << " r=" << r;
    }
  }
}

TEST(FrozenOracle, WeightIdeals) {
  struct Case {
    std::size_t n, r;
    Exponent a;
    long dim;
  };
  const Case cases[] = {{2, 1, 2, 1}, {2, 0, 2, 3}, {1, 0, 2, 2}, {3, 2, 3, 7},  {3, 1, 3, 12},
                        {3, 3, 3, 4}, {3, 0, 2, 4}, {4, 2, 4, 96}, {5, 5, 2, 0}};
  for (const auto& c : cases) {
    EXPECT_EQ(count_standard(weight_ideal(c.n, c.r, c.a)), c.dim)
        << c.n << "," << c.r << "," << c.a;
  }
}

}  // namespace
}  // namespace skeldet
