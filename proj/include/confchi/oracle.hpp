#pragma once

#include <cstdint>

#include "confchi/rational.hpp"

namespace confchi {

// Deliberately naive cross-checks for the closed-form series. No shortcuts
// beyond the Stirling tables; an oracle has to be obviously correct.

// chi_c(F(X,k)) recovered from chi_c(X) by signed-Stirling inversion:
// sum over n of s(k,n) * chi_c(X)^n. k = 0 gives 1 (a single empty
// configuration).
BigInt chi_config_by_inversion(std::int64_t chi_c_X, int k);

// Checks chi_c(X)^n == sum over set partitions T of {1..n} of
// chi_c(F(X,|T|)), the stratification of X^n by coincidence patterns.
// Guarded at n <= 8.
bool diagonal_identity_check(std::int64_t chi_c_X, int n);

// Exhaustively enumerates all maps {1..n} -> {1..m} and counts the
// injective ones, i.e. the points of F(X,n) for X a discrete m-point
// space. Guarded at m, n <= 8.
BigInt count_injections(int m, int n);

} // namespace confchi
