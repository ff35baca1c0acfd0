#include <gtest/gtest.h>

#include "skeldet/exact_linalg.hpp"
#include "skeldet/formulas.hpp"
#include "skeldet/lambda_seq.hpp"
#include "skeldet/multigraph.hpp"
#include "skeldet/standard_count.hpp"

namespace skeldet {
namespace {

TEST(Steck, Matrix) {
  const RationalMatrix m = steck_matrix(LambdaSeq({2, 1}));
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m[0][0], 1);
  EXPECT_EQ(m[0][1], Rational(1, 2));
  EXPECT_EQ(m[1][0], 1);
  EXPECT_EQ(m[1][1], 2);
  EXPECT_EQ(steck_matrix(LambdaSeq({1})), (RationalMatrix{{Rational(1)}}));
}

TEST(Steck, Counts) {
  EXPECT_EQ(steck_count(LambdaSeq({2, 1})), 3);
  EXPECT_EQ(steck_count(LambdaSeq({3, 2, 1})), 16);
  EXPECT_EQ(steck_count(LambdaSeq({3, 2, 2})), 20);
  EXPECT_EQ(steck_count(LambdaSeq({4, 3, 3, 1})), 141);
  EXPECT_EQ(steck_count(LambdaSeq({4, 4, 2, 2})), 176);
}

TEST(Steck, RationalDeterminant) {
  EXPECT_EQ(rational_det({{Rational(1, 2), 1}, {1, 4}}), 1);
  EXPECT_EQ(rational_det({{0, 1}, {1, 0}}), -1);
}

TEST(Polynomials, Theta) {
  EXPECT_EQ(theta(1, 5), 6);
  EXPECT_EQ(theta(3, 2), 20);
  EXPECT_EQ(theta_extended(0, 7), 1);
  EXPECT_EQ(theta_extended(2, 3), 15);
}

TEST(Polynomials, FAndG) {
  EXPECT_EQ(Rational(factorial(3)) * g_poly(3, 1, 2), 20);
  EXPECT_EQ(Rational(factorial(3)) * f_poly(3, 1, 1), 16);
  EXPECT_EQ(f_poly(2, 1, 1), Rational(3, 2));
}

TEST(ClosedForms, CompleteMultigraph) {
  EXPECT_EQ(dim_skel1_kab(3, 1, 1), 20);
  EXPECT_EQ(dim_skel1_kab(2, 1, 1), 3);
  EXPECT_EQ(dim_parking_kab(3, 1, 1), 16);
  EXPECT_EQ(dim_skel1_kab(3, 2, 3), 350);
  EXPECT_EQ(dim_parking_kab(2, 2, 1), 8);
  for (unsigned long n = 1; n <= 5; ++n) {
    for (long a = 1; a <= 3; ++a) {
      for (long b = 1; b <= 3; ++b) {
        const Multigraph k = complete_multigraph(n, a, b);
        EXPECT_EQ(dim_skel1_kab(n, a, b), det(laplacians(k).truncated_signless));
        EXPECT_EQ(dim_parking_kab(n, a, b), det(laplacians(k).truncated_laplacian));
      }
    }
  }
}

TEST(ClosedForms, DetQGnr) {
  EXPECT_EQ(det_q_gnr(3, 0), 20);
  EXPECT_EQ(det_q_gnr(3, 1), 12);
  EXPECT_EQ(det_q_gnr(3, 3), 4);
  EXPECT_EQ(det_q_gnr(2, 2), 0);
  for (unsigned long n = 2; n <= 6; ++n) {
    for (unsigned long r = 0; r <= n; ++r) {
      EXPECT_EQ(det_q_gnr(n, r), det(laplacians(g_n_r(n, r)).truncated_signless))
          << "n=" << n << " r=" << r;
    }
  }
  EXPECT_THROW(det_q_gnr(3, 4), FormulaDomainError);
  EXPECT_THROW(det_q_gnr(1, 0), FormulaDomainError);
}

TEST(ClosedForms, Lemma2Sum) {
  EXPECT_EQ(lemma2_sum(3, 1, 3), 12);
  EXPECT_EQ(lemma2_sum(3, 3, 3), 4);
  for (unsigned long n = 1; n <= 4; ++n) {
    for (long a = 2; a <= 5; ++a) {
      EXPECT_EQ(lemma2_sum(n, 0, a), theta(n, a - 1));
    }
  }
  EXPECT_EQ(lemma2_sum(5, 5, 2), 0);
}

TEST(ClosedForms, RemarkIdentity) {
  EXPECT_TRUE(remark_identity_check(2, 5));
  const auto [lhs, rhs] = remark_identity_sides(2, 5);
  EXPECT_EQ(lhs, 15);
  EXPECT_EQ(rhs, 15);
  EXPECT_TRUE(remark_identity_check(4, 0));
  EXPECT_TRUE(remark_identity_check(0, 2));
  EXPECT_THROW(remark_identity_check(3, 1), FormulaDomainError);
  for (unsigned long n = 0; n <= 8; ++n) {
    for (long a = -5; a <= 10; ++a) {
      if (a != 1) {
        EXPECT_TRUE(remark_identity_check(n, a)) << "n=" << n << " a=" << a;
      }
    }
  }
}

}  // namespace
}  // namespace skeldet
