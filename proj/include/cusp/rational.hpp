#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cusp {

using Integer = mpz_class;
using Rational = mpq_class;

/// p-adic valuation of a nonzero rational.
int valuation(const Rational& x, long p);
int valuation(const Integer& x, long p);

/// "a/b" or "a" when b = 1.
std::string to_string(const Rational& x);
Rational parse_rational(const std::string& s);

/// Residue of an integral (denominator prime to m's prime) rational modulo m.
/// Caller guarantees gcd(den, m) = 1.
long residue_mod(const Rational& x, long m);

long mod_floor(long a, long m);
long ipow(long base, int exp);
bool is_prime(long p);
Rational qpow(long base, int exp);

/// True when x = +-q^k for some integer k.
bool is_signed_power_of(const Rational& x, long q, int* exponent = nullptr);

}  // namespace cusp
