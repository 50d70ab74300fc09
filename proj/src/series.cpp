#include "confchi/series.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "confchi/combinatorics.hpp"
#include "confchi/errors.hpp"

namespace confchi {

EgfSeries::EgfSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw std::invalid_argument("series needs at least the constant coefficient");
    }
}

EgfSeries EgfSeries::one(int order) {
    if (order < 0) {
        throw std::invalid_argument("series order must be non-negative");
    }
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    c[0] = 1;
    return EgfSeries(std::move(c));
}

const Rational& EgfSeries::coeff(int n) const {
    if (n < 0 || n > order()) {
        throw std::out_of_range("coefficient index " + std::to_string(n) +
                                " outside order " + std::to_string(order()));
    }
    return coeffs_[static_cast<std::size_t>(n)];
}

namespace {

void check_same_order(const EgfSeries& a, const EgfSeries& b) {
    if (a.order() != b.order()) {
        throw std::invalid_argument("series order mismatch: " + std::to_string(a.order()) +
                                    " vs " + std::to_string(b.order()));
    }
}

} // namespace

EgfSeries operator+(const EgfSeries& a, const EgfSeries& b) {
    check_same_order(a, b);
    std::vector<Rational> c(a.coeffs().begin(), a.coeffs().end());
    for (int n = 0; n <= b.order(); ++n) {
        c[static_cast<std::size_t>(n)] += b.coeff(n);
    }
    return EgfSeries(std::move(c));
}

EgfSeries operator*(const EgfSeries& a, const EgfSeries& b) {
    check_same_order(a, b);
    const int order = a.order();
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= order; ++i) {
        if (a.coeff(i) == 0) {
            continue;
        }
        for (int j = 0; i + j <= order; ++j) {
            if (b.coeff(j) == 0) {
                continue;
            }
            c[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
        }
    }
    return EgfSeries(std::move(c));
}

EgfSeries binomial_series(std::int64_t c, std::int64_t e, int order) {
    if (order < 0) {
        throw std::invalid_argument("series order must be non-negative");
    }
    std::vector<Rational> out(static_cast<std::size_t>(order) + 1);
    out[0] = 1;
    Rational term = 1;  // binom(e,n) * c^n
    for (int n = 1; n <= order; ++n) {
        term *= (Rational(e) - Rational(n - 1)) / Rational(n);
        term *= c;
        out[static_cast<std::size_t>(n)] = term;
        if (term == 0) {
            break;  // once the falling factor hits zero the tail stays zero
        }
    }
    return EgfSeries(std::move(out));
}

EgfSeries inverse(const EgfSeries& a) {
    if (a.coeff(0) == 0) {
        throw std::domain_error("series with zero constant term is not invertible");
    }
    const int order = a.order();
    const Rational lead = Rational(1) / a.coeff(0);
    std::vector<Rational> b(static_cast<std::size_t>(order) + 1);
    b[0] = lead;
    for (int n = 1; n <= order; ++n) {
        Rational acc = 0;
        for (int k = 1; k <= n; ++k) {
            acc += a.coeff(k) * b[static_cast<std::size_t>(n - k)];
        }
        b[static_cast<std::size_t>(n)] = -lead * acc;
    }
    return EgfSeries(std::move(b));
}

EgfSeries scale_t(const EgfSeries& a, std::int64_t lambda) {
    std::vector<Rational> out(a.coeffs().begin(), a.coeffs().end());
    Rational power = 1;
    for (int n = 1; n <= a.order(); ++n) {
        power *= lambda;
        out[static_cast<std::size_t>(n)] *= power;
    }
    return EgfSeries(std::move(out));
}

BigInt chi_coefficient(const EgfSeries& a, int n) {
    const Rational value = a.coeff(n) * Rational(factorial(n));
    if (denominator(value) != 1) {
        throw IntegralityError("chi at n=" + std::to_string(n) + " is not an integer: " +
                               format_rational(value));
    }
    return numerator(value);
}

EgfSeries product_serial(std::span<const EgfSeries> factors, int order) {
    EgfSeries acc = EgfSeries::one(order);
    for (const EgfSeries& f : factors) {
        acc = acc * f;
    }
    return acc;
}

EgfSeries product_parallel(std::span<const EgfSeries> factors, int order) {
#ifdef _OPENMP
    const std::size_t n = factors.size();
    if (n < 2) {
        return product_serial(factors, order);
    }
    int chunks = omp_get_max_threads();
    if (static_cast<std::size_t>(chunks) > n) {
        chunks = static_cast<int>(n);
    }
    std::vector<EgfSeries> partial(static_cast<std::size_t>(chunks), EgfSeries::one(order));
#pragma omp parallel for schedule(static)
    for (int c = 0; c < chunks; ++c) {
        const std::size_t lo = n * static_cast<std::size_t>(c) / static_cast<std::size_t>(chunks);
        const std::size_t hi =
            n * (static_cast<std::size_t>(c) + 1) / static_cast<std::size_t>(chunks);
        partial[static_cast<std::size_t>(c)] =
            product_serial(factors.subspan(lo, hi - lo), order);
    }
    return product_serial(partial, order);
#else
    return product_serial(factors, order);
#endif
}

EgfSeries product(std::span<const EgfSeries> factors, int order) {
    // The per-factor work is tiny, so parallelism only pays off for bulk
    // inputs; either path yields the same exact coefficients.
    constexpr std::size_t parallel_cutoff = 64;
    if (factors.size() >= parallel_cutoff) {
        return product_parallel(factors, order);
    }
    return product_serial(factors, order);
}

std::string to_pretty_string(const EgfSeries& a) {
    std::string out;
    for (int n = 0; n <= a.order(); ++n) {
        const Rational& c = a.coeff(n);
        if (c == 0) {
            continue;
        }
        const bool negative = c < 0;
        if (out.empty()) {
            if (negative) {
                out += "-";
            }
        } else {
            out += negative ? " - " : " + ";
        }
        out += format_rational(negative ? Rational(-c) : c);
        if (n == 1) {
            out += "·t";
        } else if (n > 1) {
            out += "·t^" + std::to_string(n);
        }
    }
    if (out.empty()) {
        return "0";
    }
    return out;
}

} // namespace confchi
