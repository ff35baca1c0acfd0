#include "skeldet/numeric.hpp"

#include <limits>
#include <stdexcept>

namespace skeldet {

std::string to_string(const BigInt& value) { return value.get_str(10); }

std::string to_string(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  if (q.get_den() == 1) {
    return q.get_num().get_str(10);
  }
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) {
    throw std::invalid_argument("not an integer: '" + s + "'");
  }
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw std::invalid_argument("not an integer: '" + s + "'");
    }
  }
  if (s[0] == '+') {
    s.erase(0, 1);
  }
  return BigInt(s, 10);
}

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt ipow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational rpow(const Rational& base, long exponent) {
  if (exponent >= 0) {
    auto e = static_cast<unsigned long>(exponent);
    Rational out(ipow(base.get_num(), e), ipow(base.get_den(), e));
    out.canonicalize();
    return out;
  }
  if (base == 0) {
    throw std::domain_error("zero raised to a negative power");
  }
  auto e = static_cast<unsigned long>(-exponent);
  Rational out(ipow(base.get_den(), e), ipow(base.get_num(), e));
  out.canonicalize();
  return out;
}

std::uint64_t to_u64(const BigInt& value) {
  if (value < 0 || value > BigInt(std::to_string(std::numeric_limits<std::uint64_t>::max()))) {
    throw std::overflow_error("value does not fit in 64 bits: " + to_string(value));
  }
  return std::stoull(value.get_str(10));
}

std::int64_t to_i64(const BigInt& value) {
  if (!value.fits_slong_p()) {
    throw std::overflow_error("value does not fit in 64 bits: " + to_string(value));
  }
  return value.get_si();
}

}  // namespace skeldet
