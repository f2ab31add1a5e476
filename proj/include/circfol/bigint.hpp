#pragma once

#include <gmpxx.h>

#include <string>

namespace circfol {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

inline BigInt big_abs(const BigInt& v) { return BigInt(abs(v)); }

inline BigInt big_pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// Exact integer square root when `v` is a perfect square.
inline bool exact_sqrt(const BigInt& v, BigInt& root) {
  if (v < 0 || mpz_perfect_square_p(v.get_mpz_t()) == 0) return false;
  mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
  return true;
}

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace circfol
