#pragma once

#include <gmpxx.h>

#include <string>

namespace crossnest {

// All counts are exact.  No floating point is used anywhere in this library.
using BigCount = mpz_class;
using Rational = mpq_class;

inline BigCount binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigCount b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return b;
}

inline BigCount big_pow(const BigCount& base, unsigned long e) {
  BigCount out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

inline std::string to_string(const BigCount& v) { return v.get_str(); }

}  // namespace crossnest
