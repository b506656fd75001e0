#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace polymin {

// Arbitrary-precision rational in canonical form (GMP keeps mpq_class
// reduced with a positive denominator after every arithmetic operation).
using BigRational = mpq_class;
using BigInt = mpz_class;

/// "num/den", or "num" when the denominator is 1.
std::string to_string(const BigRational& q);
/// Inverse of to_string. Throws std::invalid_argument.
BigRational parse_rational(std::string_view text);

}  // namespace polymin
