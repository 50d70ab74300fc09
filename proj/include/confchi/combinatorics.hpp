#pragma once

#include <vector>

#include "confchi/rational.hpp"

namespace confchi {

BigInt factorial(int n);

// x(x-1)...(x-n+1); the empty product (n=0) is 1.
BigInt falling_factorial(const BigInt& x, int n);

// x(x+1)...(x+n-1).
BigInt rising_factorial(const BigInt& x, int n);

/*
 * Stirling numbers of both kinds as a pair of mutually inverse
 * lower-triangular matrices:
 *
 *   S(n,k)  second kind, set partitions of an n-set into k blocks,
 *           S(n,k) = k*S(n-1,k) + S(n-1,k-1)
 *   s(n,k)  signed first kind, coefficients of the falling factorial,
 *           s(n,k) = s(n-1,k-1) - (n-1)*s(n-1,k)
 *
 * sum_k s(n,k)*S(k,m) = [n=m], which is what makes the inversion between
 * powers of chi_c and configuration-space characteristics work.
 * Entries grow past 64 bits quickly (|s(12,k)| already does), hence BigInt.
 */
class StirlingTable {
public:
    explicit StirlingTable(int max_n);

    int max_n() const { return max_n_; }

    // Zero outside the triangle (k < 0 or k > n); n must be <= max_n.
    const BigInt& second(int n, int k) const;
    const BigInt& first_signed(int n, int k) const;

private:
    int max_n_;
    std::vector<std::vector<BigInt>> second_;
    std::vector<std::vector<BigInt>> first_signed_;
};

// Partition of {1..n} into disjoint non-empty blocks. Blocks are ordered by
// their smallest element, elements ascending within a block.
struct SetPartition {
    std::vector<std::vector<int>> blocks;
};

// Every set partition of {1..n} exactly once (Bell(n) of them), in a fixed
// deterministic order. Guarded at n <= 10: Bell(10) = 115975.
std::vector<SetPartition> enumerate_set_partitions(int n);

// Partitions of the integer n with parts in decreasing order, e.g.
// [3], [2,1], [1,1,1]. These label the conjugacy classes of S_n.
std::vector<std::vector<int>> integer_partitions(int n);

} // namespace confchi
