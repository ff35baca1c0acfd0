#include "skeldet/formulas.hpp"

#include <stdexcept>
#include <string>

namespace skeldet {

namespace {

BigInt require_integer(const Rational& value, const char* what) {
  if (value.get_den() != 1) {
    throw FormulaDomainError(std::string(what) + " is not an integer: " + to_string(value));
  }
  return value.get_num();
}

BigInt require_nonnegative_integer(const Rational& value, const char* what) {
  BigInt out = require_integer(value, what);
  if (out < 0) {
    throw FormulaDomainError(std::string(what) + " is negative: " + to_string(out));
  }
  return out;
}

}  // namespace

Rational rational_det(RationalMatrix m) {
  const std::size_t n = m.size();
  Rational result = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) {
      ++pivot;
    }
    if (pivot == n) {
      return 0;
    }
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      result = -result;
    }
    result *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) {
        continue;
      }
      const Rational factor = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) {
        m[i][j] -= factor * m[k][j];
      }
    }
  }
  return result;
}

RationalMatrix steck_matrix(const LambdaSeq& lambda) {
  const std::size_t n = lambda.size();
  RationalMatrix m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 1; i <= n; ++i) {
    const BigInt base = lambda.at(n - i + 1);
    for (std::size_t j = 1; j <= n; ++j) {
      if (i > j + 1) {
        continue;
      }
      const unsigned long power = j + 1 - i;
      Rational entry(ipow(base, power), factorial(power));
      entry.canonicalize();
      m[i - 1][j - 1] = entry;
    }
  }
  return m;
}

BigInt steck_count(const LambdaSeq& lambda) {
  const Rational value = Rational(factorial(lambda.size())) * rational_det(steck_matrix(lambda));
  if (value.get_den() != 1) {
    throw std::logic_error("n! det(Steck) is not an integer: " + to_string(value));
  }
  return value.get_num();
}

Rational f_poly(unsigned long n, const BigInt& b, const BigInt& x) {
  if (n < 1) {
    throw FormulaDomainError("f_poly needs n >= 1");
  }
  Rational out(x * ipow(x + n * b, n - 1), factorial(n));
  out.canonicalize();
  return out;
}

Rational g_poly(unsigned long n, const BigInt& b, const BigInt& x) {
  if (n < 1) {
    throw FormulaDomainError("g_poly needs n >= 1");
  }
  Rational out(ipow(x, n - 1) * (x + n * b), factorial(n));
  out.canonicalize();
  return out;
}

BigInt theta(unsigned long l, const BigInt& x) {
  if (l < 1) {
    throw FormulaDomainError("theta needs l >= 1");
  }
  return ipow(x, l - 1) * (x + l);
}

Rational theta_extended(unsigned long l, const BigInt& x) {
  if (l == 0) {
    return 1;
  }
  return Rational(theta(l, x));
}

BigInt dim_parking_kab(unsigned long n, const BigInt& a, const BigInt& b) {
  if (n < 1 || a < 1 || b < 1) {
    throw FormulaDomainError("dim_parking_kab needs n, a, b >= 1");
  }
  return a * ipow(a + n * b, n - 1);
}

BigInt dim_skel1_kab(unsigned long n, const BigInt& a, const BigInt& b) {
  if (n < 1 || a < 1 || b < 1) {
    throw FormulaDomainError("dim_skel1_kab needs n, a, b >= 1");
  }
  const BigInt nn = from_u64(n);
  return ipow(a + (nn - 2) * b, n - 1) * (a + (2 * nn - 2) * b);
}

BigInt det_q_gnr(unsigned long n, unsigned long r) {
  if (n < 2 || r > n) {
    throw FormulaDomainError("det_q_gnr needs n >= 2 and 0 <= r <= n");
  }
  const Rational n_minus_1 = from_u64(n - 1);
  const Rational n_minus_2 = from_u64(n - 2);
  const long outer_power = static_cast<long>(n) - static_cast<long>(r) - 1;
  Rational bracket = Rational(from_u64(2 * n - 1)) * rpow(n_minus_2, static_cast<long>(r));
  if (r >= 1) {
    bracket += Rational(from_u64(r)) * rpow(n_minus_2, static_cast<long>(r) - 1);
  }
  return require_nonnegative_integer(rpow(n_minus_1, outer_power) * bracket,
                                     "det_q_gnr");
}

BigInt lemma2_sum(unsigned long n, unsigned long r, const BigInt& a) {
  if (r > n || a < 2) {
    throw FormulaDomainError("lemma2_sum needs 0 <= r <= n and a >= 2");
  }
  Rational total = 0;
  for (unsigned long i = 0; i <= r; ++i) {
    const Rational term = Rational(binomial(r, i)) * theta_extended(n - i, a - 1);
    total += (i % 2 == 0) ? term : -term;
  }
  return require_integer(total, "lemma2_sum");
}

std::pair<Rational, Rational> remark_identity_sides(unsigned long n, const BigInt& a) {
  if (a == 1) {
    throw FormulaDomainError("remark identity is evaluated only at a != 1");
  }
  const Rational lhs = theta_extended(n, a - 2);
  Rational rhs = 0;
  for (unsigned long i = 0; i <= n; ++i) {
    const Rational term = Rational(binomial(n, i)) * theta_extended(n - i, a - 1);
    rhs += (i % 2 == 0) ? term : -term;
  }
  return {lhs, rhs};
}

bool remark_identity_check(unsigned long n, const BigInt& a) {
  const auto [lhs, rhs] = remark_identity_sides(n, a);
  return lhs == rhs;
}

}  // namespace skeldet
