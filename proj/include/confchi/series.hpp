#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "confchi/rational.hpp"

namespace confchi {

/*
 * Truncated power series over exact rationals, the ring every generating
 * function in this project is evaluated in. Coefficients follow the EGF
 * convention: the coefficient of t^n is chi/n! for an integer Euler
 * characteristic chi, recovered by chi_coefficient().
 *
 * A series carries its truncation order explicitly. Combining series of
 * different orders throws instead of silently re-truncating; mismatches
 * are caller bugs, not data.
 *
 * Immutable after construction, so freely shareable across threads.
 */
class EgfSeries {
public:
    // order = coeffs.size() - 1; coeffs must be non-empty.
    explicit EgfSeries(std::vector<Rational> coeffs);

    // 1 + 0*t + ... + 0*t^order
    static EgfSeries one(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    // Range-checked: throws std::out_of_range unless 0 <= n <= order.
    const Rational& coeff(int n) const;

    std::span<const Rational> coeffs() const { return coeffs_; }

    friend bool operator==(const EgfSeries&, const EgfSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

// Termwise sum / Cauchy product, truncated at the common order.
// Order mismatch throws std::invalid_argument.
EgfSeries operator+(const EgfSeries& a, const EgfSeries& b);
EgfSeries operator*(const EgfSeries& a, const EgfSeries& b);

// (1 + c*t)^e with the generalized binomial expansion; e may be negative or
// zero. The coefficient of t^n is binom(e,n)*c^n, built incrementally as
// binom(e,n) = binom(e,n-1)*(e-n+1)/n in rational arithmetic.
EgfSeries binomial_series(std::int64_t c, std::int64_t e, int order);

// Multiplicative inverse: inverse(a)*a == one(a.order()).
// Throws std::domain_error when the constant term is zero.
EgfSeries inverse(const EgfSeries& a);

// Substitution t -> lambda*t, i.e. c_n -> c_n * lambda^n.
EgfSeries scale_t(const EgfSeries& a, std::int64_t lambda);

// n! * c_n, the Euler characteristic the EGF stores at t^n. Throws
// std::out_of_range for n beyond the truncation order and IntegralityError
// when n!*c_n is not an integer.
BigInt chi_coefficient(const EgfSeries& a, int n);

// Product of factors sharing the given order; the empty product is
// one(order). product() switches to the OpenMP kernel for large inputs.
// Multiplication of exact rationals is commutative and associative with no
// rounding, so all three return bit-identical results; product_serial is
// the reference the parallel kernel is tested against.
EgfSeries product(std::span<const EgfSeries> factors, int order);
EgfSeries product_serial(std::span<const EgfSeries> factors, int order);
EgfSeries product_parallel(std::span<const EgfSeries> factors, int order);

// "1 + 1·t + 3·t^2 - 5·t^3"; zero terms are skipped, the zero series is "0".
std::string to_pretty_string(const EgfSeries& a);

} // namespace confchi
