#pragma once

#include <gmpxx.h>

#include <string>

namespace dcp {

// All counting and polynomial arithmetic is exact; BigInt is the only
// coefficient type used anywhere in the library.
using BigInt = mpz_class;

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

// binomial(n, k) with the convention C(n,k) = 0 for k < 0 or k > n.
inline BigInt binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// k(k-1)...(k-j+1)
inline BigInt falling_factorial(const BigInt& k, unsigned long j) {
  BigInt r = 1;
  for (unsigned long i = 0; i < j; ++i) r *= k - static_cast<long>(i);
  return r;
}

inline std::string to_string(const BigInt& x) { return x.get_str(); }

}  // namespace dcp
