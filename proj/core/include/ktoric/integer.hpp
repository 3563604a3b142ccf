#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace ktoric {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Quotient rounded toward negative infinity. `b` must be nonzero.
Integer floor_div(const Integer& a, const Integer& b);

/// Remainder in [0, |b|). `b` must be nonzero.
Integer nonneg_mod(const Integer& a, const Integer& b);

/// g = gcd(a, b) >= 0 with g = s*a + t*b.
Integer extended_gcd(const Integer& a, const Integer& b, Integer& s, Integer& t);

/// Parses an optionally signed decimal integer; throws InputError.
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& value);

std::strong_ordering compare(const Integer& a, const Integer& b);
std::strong_ordering compare_lex(const IntVector& a, const IntVector& b);

bool is_zero(const IntVector& v);

} // namespace ktoric
