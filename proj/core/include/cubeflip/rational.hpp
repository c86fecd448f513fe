#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace cubeflip {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational numbers. cpp_rational keeps values reduced (gcd 1) with a
// positive denominator, which is exactly the invariant the geometry needs:
// nothing in this library ever rounds.
using Rational = boost::multiprecision::cpp_rational;

BigInt rat_num(const Rational& q);
BigInt rat_den(const Rational& q);

/// Prints "num/den", den always present ("3/1", "-2/3").
std::string rat_str(const Rational& q);

/// Accepts "num/den" or a bare integer. Throws Errc::parse on anything else.
Rational parse_rational(const std::string& text);

}  // namespace cubeflip
