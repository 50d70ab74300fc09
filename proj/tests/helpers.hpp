#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "confchi/rational.hpp"
#include "confchi/series.hpp"

namespace confchi::testing {

inline Rational Q(long long num, long long den = 1) {
    return Rational(num) / Rational(den);
}

inline EgfSeries series_of(std::initializer_list<long long> ints) {
    std::vector<Rational> coeffs;
    coeffs.reserve(ints.size());
    for (long long v : ints) {
        coeffs.emplace_back(v);
    }
    return EgfSeries(std::move(coeffs));
}

// Deterministic generator; avoids std::uniform_int_distribution so runs are
// reproducible regardless of the standard library.
struct Rng {
    std::mt19937_64 gen;

    explicit Rng(std::uint64_t seed) : gen(seed) {}

    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

inline EgfSeries random_series(Rng& rng, int order, long long lo = -9, long long hi = 9) {
    std::vector<Rational> coeffs;
    coeffs.reserve(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        long long den = rng.range(1, 4);
        coeffs.push_back(Q(rng.range(lo, hi), den));
    }
    return EgfSeries(std::move(coeffs));
}

} // namespace confchi::testing
