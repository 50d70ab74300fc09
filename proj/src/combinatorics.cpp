#include "confchi/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace confchi {

BigInt factorial(int n) {
    if (n < 0) {
        throw std::invalid_argument("factorial of negative argument");
    }
    BigInt acc = 1;
    for (int i = 2; i <= n; ++i) {
        acc *= i;
    }
    return acc;
}

BigInt falling_factorial(const BigInt& x, int n) {
    if (n < 0) {
        throw std::invalid_argument("falling factorial needs n >= 0");
    }
    BigInt acc = 1;
    for (int i = 0; i < n; ++i) {
        acc *= x - i;
    }
    return acc;
}

BigInt rising_factorial(const BigInt& x, int n) {
    if (n < 0) {
        throw std::invalid_argument("rising factorial needs n >= 0");
    }
    BigInt acc = 1;
    for (int i = 0; i < n; ++i) {
        acc *= x + i;
    }
    return acc;
}

StirlingTable::StirlingTable(int max_n) : max_n_(max_n) {
    if (max_n < 0) {
        throw std::invalid_argument("StirlingTable needs max_n >= 0");
    }
    second_.resize(static_cast<std::size_t>(max_n) + 1);
    first_signed_.resize(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) {
        second_[n].assign(static_cast<std::size_t>(n) + 1, 0);
        first_signed_[n].assign(static_cast<std::size_t>(n) + 1, 0);
    }
    second_[0][0] = 1;
    first_signed_[0][0] = 1;
    // Recurrences; entries outside the previous row's triangle are zero.
    for (int n = 1; n <= max_n; ++n) {
        for (int k = 1; k <= n; ++k) {
            BigInt s2 = second_[n - 1][k - 1];
            if (k <= n - 1) {
                s2 += BigInt(k) * second_[n - 1][k];
            }
            second_[n][k] = s2;

            BigInt s1 = first_signed_[n - 1][k - 1];
            if (k <= n - 1) {
                s1 -= BigInt(n - 1) * first_signed_[n - 1][k];
            }
            first_signed_[n][k] = s1;
        }
    }
}

namespace {
const BigInt zero_entry = 0;
}

const BigInt& StirlingTable::second(int n, int k) const {
    if (n < 0 || n > max_n_) {
        throw std::out_of_range("Stirling index n=" + std::to_string(n) + " beyond table");
    }
    if (k < 0 || k > n) {
        return zero_entry;
    }
    return second_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

const BigInt& StirlingTable::first_signed(int n, int k) const {
    if (n < 0 || n > max_n_) {
        throw std::out_of_range("Stirling index n=" + std::to_string(n) + " beyond table");
    }
    if (k < 0 || k > n) {
        return zero_entry;
    }
    return first_signed_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

namespace {

void emit_partitions(int next, int n, int used_blocks, std::vector<int>& block_of,
                     std::vector<SetPartition>& out) {
    if (next == n) {
        SetPartition p;
        p.blocks.assign(static_cast<std::size_t>(used_blocks), {});
        for (int i = 0; i < n; ++i) {
            p.blocks[static_cast<std::size_t>(block_of[i])].push_back(i + 1);
        }
        out.push_back(std::move(p));
        return;
    }
    // Restricted growth: element next+1 may join an existing block or open
    // the next fresh one, which yields each partition exactly once.
    for (int b = 0; b <= used_blocks; ++b) {
        block_of[next] = b;
        emit_partitions(next + 1, n, std::max(used_blocks, b + 1), block_of, out);
    }
}

} // namespace

std::vector<SetPartition> enumerate_set_partitions(int n) {
    if (n < 1) {
        throw std::invalid_argument("set partitions need n >= 1");
    }
    if (n > 10) {
        throw std::invalid_argument("set partition enumeration is guarded at n <= 10");
    }
    std::vector<SetPartition> out;
    std::vector<int> block_of(static_cast<std::size_t>(n), 0);
    emit_partitions(1, n, 1, block_of, out);  // element 1 always opens block 0
    return out;
}

namespace {

void emit_integer_partitions(int remaining, int max_part, std::vector<int>& current,
                             std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        emit_integer_partitions(remaining - part, part, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> integer_partitions(int n) {
    if (n < 0) {
        throw std::invalid_argument("integer partitions need n >= 0");
    }
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    emit_integer_partitions(n, n == 0 ? 1 : n, current, out);
    return out;
}

} // namespace confchi
