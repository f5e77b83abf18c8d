#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace normsearch {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

// Floor square root of a non-negative integer.
Integer isqrt(const Integer& n);
bool is_square(const Integer& n);

Integer ipow(const Integer& base, unsigned long exp);
// Negative exponents allowed; base must be nonzero then.
Rational rpow(const Rational& base, long exp);

Integer binomial(unsigned long n, unsigned long k);

bool is_squarefree(long n);
bool is_prime(long n);

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

// Parses "p" or "p/q"; throws InvalidArgument naming `field` on failure.
Rational parse_rational(std::string_view text, std::string_view field);
Integer parse_integer(std::string_view text, std::string_view field);

}  // namespace normsearch
