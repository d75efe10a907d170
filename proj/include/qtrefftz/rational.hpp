#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qtrefftz {

/// Exact rational number. GMP keeps every result of +,-,*,/ in lowest terms
/// with a positive denominator, so no explicit normalization is needed after
/// arithmetic; values built from raw numerator/denominator pairs must go
/// through make_rational() or parse_rational().
using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical num/den construction. Throws std::invalid_argument on a zero
/// denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "n" or "n/d" (optional leading sign on n). Throws
/// std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Always "num/den", e.g. "-3/2", "4/1", "0/1".
std::string to_string(const Rational& q);

} // namespace qtrefftz
