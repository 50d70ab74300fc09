#include "confchi/oracle.hpp"

#include <stdexcept>

#include "confchi/combinatorics.hpp"

namespace confchi {

BigInt chi_config_by_inversion(std::int64_t chi_c_X, int k) {
    if (k < 0) {
        throw std::invalid_argument("configuration size must be >= 0");
    }
    if (k == 0) {
        return 1;
    }
    const StirlingTable table(k);
    BigInt acc = 0;
    BigInt power = 1;
    for (int n = 1; n <= k; ++n) {
        power *= chi_c_X;
        acc += table.first_signed(k, n) * power;
    }
    return acc;
}

bool diagonal_identity_check(std::int64_t chi_c_X, int n) {
    if (n < 1 || n > 8) {
        throw std::invalid_argument("diagonal identity check is guarded at 1 <= n <= 8");
    }
    BigInt lhs = 1;
    for (int i = 0; i < n; ++i) {
        lhs *= chi_c_X;
    }
    BigInt rhs = 0;
    for (const SetPartition& T : enumerate_set_partitions(n)) {
        rhs += chi_config_by_inversion(chi_c_X, static_cast<int>(T.blocks.size()));
    }
    return lhs == rhs;
}

BigInt count_injections(int m, int n) {
    if (m < 0 || n < 0 || m > 8 || n > 8) {
        throw std::invalid_argument("injection counting is guarded at 0 <= m, n <= 8");
    }
    if (n == 0) {
        return 1;  // the empty map
    }
    if (m == 0) {
        return 0;
    }
    // Walk every map {1..n} -> {1..m} with an odometer and keep the
    // injective ones.
    std::vector<int> f(static_cast<std::size_t>(n), 0);
    BigInt count = 0;
    for (;;) {
        bool injective = true;
        for (int i = 0; i < n && injective; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (f[i] == f[j]) {
                    injective = false;
                    break;
                }
            }
        }
        if (injective) {
            ++count;
        }
        int pos = n - 1;
        while (pos >= 0 && f[pos] == m - 1) {
            f[pos] = 0;
            --pos;
        }
        if (pos < 0) {
            break;
        }
        ++f[pos];
    }
    return count;
}

} // namespace confchi
