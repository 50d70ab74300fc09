#include "confchi/rational.hpp"

#include <stdexcept>

#include "confchi/errors.hpp"

namespace confchi {

std::string format_rational(const Rational& q) {
    if (denominator(q) == 1) {
        return numerator(q).str();
    }
    return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
    if (text.empty()) {
        throw ParseError("malformed rational '" + std::string(whole) + "'");
    }
    try {
        return BigInt(std::string(text));
    } catch (const std::exception&) {
        throw ParseError("malformed rational '" + std::string(whole) + "'");
    }
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    const BigInt num = parse_integer(text.substr(0, slash), text);
    const BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den <= 0) {
        throw ParseError("denominator must be positive in '" + std::string(text) + "'");
    }
    return Rational(num) / Rational(den);
}

} // namespace confchi
