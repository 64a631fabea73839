#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace orbq {

// Exact rational, always kept in canonical form (gcd(num, den) = 1, den > 0).
using Scalar = mpq_class;

// Accepts "p", "p/q" with optional sign. Throws SchemaError on anything else.
Scalar parse_scalar(std::string_view text, const std::string& location = "scalar");

std::string to_string(const Scalar& value);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

inline Scalar ratio(long numerator, long denominator) {
  Scalar r{mpz_class(numerator), mpz_class(denominator)};
  r.canonicalize();
  return r;
}

}  // namespace orbq
