#pragma once
#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>

namespace bhlink {

using Integer = mpz_class;
using Rational = mpq_class;

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
// gcd of an empty range is 0, lcm of an empty range is 1.
Integer gcd_of(std::span<const Integer> values);
Integer lcm_of(std::span<const Integer> values);

Rational make_rational(const Integer& num, const Integer& den);
bool is_integer(const Rational& q);
Integer floor(const Rational& q);
bool divides(const Integer& a, const Integer& b);

// Rational power with an arbitrary sign exponent; throws on 0^negative.
Rational power(const Rational& base, const Integer& exponent);

std::optional<std::int64_t> to_int64(const Integer& z);
std::string to_string(const Integer& z);
std::string to_string(const Rational& q);
// Accepts an optional sign and decimal digits only.
std::optional<Integer> parse_integer(std::string_view text);

}  // namespace bhlink
