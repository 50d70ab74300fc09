#include "confchi/equivariant.hpp"

#include <stdexcept>

#include "confchi/combinatorics.hpp"
#include "confchi/errors.hpp"

namespace confchi {

BigInt chi_unordered(const BigInt& chi_F, int n) {
    if (n < 1) {
        throw std::invalid_argument("chi_unordered needs n >= 1");
    }
    const BigInt fact = factorial(n);
    if (chi_F % fact != 0) {
        throw IntegralityError("n! = " + fact.str() + " does not divide chi(F) = " +
                               chi_F.str());
    }
    return chi_F / fact;
}

EquivariantChar equivariant_character(const BigInt& chi_F, int n) {
    EquivariantChar ec;
    ec.n = n;
    ec.multiplicity = chi_unordered(chi_F, n);
    for (const std::vector<int>& cycle_type : integer_partitions(n)) {
        const bool is_identity =
            static_cast<int>(cycle_type.size()) == n;  // all cycles of length 1
        ec.character.emplace(cycle_type, is_identity ? chi_F : BigInt(0));
    }
    return ec;
}

BigInt conjugacy_class_size(const std::vector<int>& cycle_type) {
    int n = 0;
    for (int k : cycle_type) {
        if (k < 1) {
            throw std::invalid_argument("cycle lengths must be positive");
        }
        n += k;
    }
    // n! / z with z = prod k^(m_k) * m_k!, the centralizer order.
    BigInt z = 1;
    int run_length = 0;
    for (std::size_t i = 0; i < cycle_type.size(); ++i) {
        z *= cycle_type[i];
        run_length = (i > 0 && cycle_type[i] == cycle_type[i - 1]) ? run_length + 1 : 1;
        z *= run_length;
    }
    return factorial(n) / z;
}

} // namespace confchi
