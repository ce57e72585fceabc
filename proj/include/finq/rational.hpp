#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace finq {

/// Exact rational, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// num/den in canonical form. Throws DomainError when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& q);

/// Inverse of to_string. Accepts optional sign and surrounding whitespace.
Rational parse_rational(std::string_view text);

}  // namespace finq
