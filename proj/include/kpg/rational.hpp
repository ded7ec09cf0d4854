#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace kpg {

using BigInt = mpz_class;

/// Exact rational number. GMP keeps every arithmetic result in lowest terms
/// with a positive denominator; values built from a numerator/denominator pair
/// go through make_rational, which canonicalizes.
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& r);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
BigInt pow2(unsigned e);
Rational pow(const Rational& base, unsigned e);

}  // namespace kpg
