#pragma once

#include <gmpxx.h>

#include <string>

namespace isotropy {

using ExactInt = mpz_class;
using ExactRatio = mpq_class;

inline std::string to_decimal(const ExactInt& value) { return value.get_str(10); }

// "p/q" in lowest terms, or just "p" when integral.
inline std::string to_decimal(const ExactRatio& value) {
  ExactRatio canonical(value);
  canonical.canonicalize();
  return canonical.get_str(10);
}

// num/den in canonical form. Construct ratios through this: GMP's equality
// test assumes canonical operands, and ExactRatio(10, 2) is not one.
inline ExactRatio fraction(const ExactInt& num, const ExactInt& den) {
  ExactRatio r(num, den);
  r.canonicalize();
  return r;
}

ExactInt binomial(long n, long k);

// Smallest integer m with m >= value.
ExactInt ceil_of(const ExactRatio& value);

}  // namespace isotropy
