#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace confchi {

// Exact arbitrary-precision arithmetic everywhere; nothing in this project
// ever rounds. cpp_rational keeps values in lowest terms with a positive
// denominator, which is exactly the canonical form the serialization needs.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p" when the denominator is 1, "p/q" otherwise.
std::string format_rational(const Rational& q);

// Inverse of format_rational; also accepts redundant forms like "6/4".
// Throws ParseError on malformed text or a non-positive denominator.
Rational parse_rational(std::string_view text);

} // namespace confchi
