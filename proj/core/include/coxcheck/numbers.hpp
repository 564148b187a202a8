#pragma once

// Exact arithmetic helpers shared by the whole library.  Everything here is a
// thin layer over GMP's C++ interface: BigInt and Rational are aliases for
// mpz_class and mpq_class, plus the handful of operations (floor/ceil of a
// rational, falling factorials, interval counts, "p/q" formatting) the rest of
// the code needs constantly.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace coxcheck {

using BigInt = mpz_class;
using Rational = mpq_class;

// num/den in lowest terms.  The two-argument mpq constructor does not reduce,
// and GMP's rational arithmetic assumes canonical operands, so every ratio
// built from a numerator/denominator pair must go through here.
// Throws std::invalid_argument when den is zero.
Rational make_rational(const BigInt& num, const BigInt& den);

// Floor of a rational as an integer (works for negative values too).
BigInt floor_rat(const Rational& q);

// Ceiling of a rational as an integer.
BigInt ceil_rat(const Rational& q);

// True iff q has denominator 1.
bool is_integer(const Rational& q);

// Number of integers z with lo <= z <= hi, endpoints included when integral.
// Throws std::invalid_argument when lo > hi.
BigInt integers_in_closed_interval(const Rational& lo, const Rational& hi);

// The integers z with lo <= z <= hi, in increasing order.  Intended for small
// intervals; callers asking for astronomically many integers get an exception.
// Throws std::invalid_argument when lo > hi.
std::vector<BigInt> integers_in(const Rational& lo, const Rational& hi);

// Falling factorial x(x-1)...(x-k+1); the empty product for k = 0.
Rational falling_factorial(const Rational& x, unsigned long k);
BigInt falling_factorial(const BigInt& x, unsigned long k);

// Binomial coefficient n over k for n >= 0 (throws otherwise); 0 when k < 0
// or k > n.
BigInt binomial(long n, long k);

// gcd of two machine integers, always >= 0.
std::int64_t gcd_i64(std::int64_t a, std::int64_t b);

// Extended gcd: returns g = gcd(a, b) >= 0 and sets x, y with a*x + b*y = g.
BigInt ext_gcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y);

// Renders a rational as "p/q", or just "p" when the denominator is 1.
std::string rational_to_string(const Rational& q);

// Parses "p/q" or "p" (optional leading '-'); returns nullopt on malformed
// input or a zero denominator.
std::optional<Rational> parse_rational(const std::string& text);

// Parses a decimal integer into BigInt; nullopt on malformed input.
std::optional<BigInt> parse_bigint(const std::string& text);

// True when v fits in a signed 64-bit integer.
bool fits_i64(const BigInt& v);

// Converts to int64, throwing std::overflow_error when it does not fit.
std::int64_t to_i64(const BigInt& v);

}  // namespace coxcheck
