#pragma once

#include <stdexcept>

namespace confchi {

// Input document violates the expected schema (missing key, wrong type,
// malformed fraction string). Distinct from nlohmann's parse_error, which
// covers JSON syntax itself; the CLI maps both to the same exit code.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A domain invariant does not hold for the given data; the message names
// the offending stratum, field or facet.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A quantity that is contractually an integer (n! times an EGF coefficient,
// chi(F)/n!) turned out fractional.
struct IntegralityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace confchi
