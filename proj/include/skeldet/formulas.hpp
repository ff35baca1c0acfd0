#pragma once

// Closed-form sides of the dimension identities, evaluated in exact
// rationals with integrality asserted at the end.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "skeldet/lambda_seq.hpp"
#include "skeldet/numeric.hpp"

namespace skeldet {

/// A closed form left the domain where it is a (nonnegative) integer, or was
/// evaluated at an excluded point.
class FormulaDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Gaussian elimination over the rationals.
Rational rational_det(RationalMatrix m);

/// Upper-Hessenberg Steck matrix: entry (i, j) is
/// lambda_{n-i+1}^{j-i+1} / (j-i+1)! for i <= j+1 and 0 below the subdiagonal.
RationalMatrix steck_matrix(const LambdaSeq& lambda);

/// n! det(steck_matrix(lambda)), the number of lambda-parking functions.
/// Throws std::logic_error if the product is not an integer.
BigInt steck_count(const LambdaSeq& lambda);

/// x (x + n b)^{n-1} / n!
Rational f_poly(unsigned long n, const BigInt& b, const BigInt& x);

/// x^{n-1} (x + n b) / n!
Rational g_poly(unsigned long n, const BigInt& b, const BigInt& x);

/// theta_l(x) = x^{l-1} (x + l), l >= 1.
BigInt theta(unsigned long l, const BigInt& x);

/// theta_l(x) for l >= 0 where theta_0(x) = x^{-1} x is the constant 1.
Rational theta_extended(unsigned long l, const BigInt& x);

/// a (a + n b)^{n-1}: dim R/M_G for G = K_{n+1}^{a,b}.
BigInt dim_parking_kab(unsigned long n, const BigInt& a, const BigInt& b);

/// (a + (n-2) b)^{n-1} (a + (2n-2) b): dim R/M_G^(1) = det Q~ for K_{n+1}^{a,b}.
BigInt dim_skel1_kab(unsigned long n, const BigInt& a, const BigInt& b);

/// det Q~ of G_{n,r} in the expanded form
/// (n-1)^{n-r-1} [(2n-1)(n-2)^r + r (n-2)^{r-1}], with 0^0 = 1, the second
/// term dropped at r = 0, and (n-1)^{-1} read as a rational at r = n.
/// Requires n >= 2, 0 <= r <= n.
BigInt det_q_gnr(unsigned long n, unsigned long r);

/// sum_{i=0}^{r} (-1)^i C(r, i) theta_{n-i}(a-1), for 0 <= r <= n, a >= 2.
BigInt lemma2_sum(unsigned long n, unsigned long r, const BigInt& a);

/// Both sides of
///   (a-2)^{n-1} (a+n-2) = sum_{i=0}^{n} (-1)^i C(n,i) (a-1)^{n-i-1} (a+n-i-1),
/// i.e. theta_n(a-2) against sum (-1)^i C(n,i) theta_{n-i}(a-1), with theta_0 = 1.
/// Throws FormulaDomainError at a = 1.
std::pair<Rational, Rational> remark_identity_sides(unsigned long n, const BigInt& a);

bool remark_identity_check(unsigned long n, const BigInt& a);

}  // namespace skeldet
