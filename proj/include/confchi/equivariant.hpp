#pragma once

#include <map>
#include <vector>

#include "confchi/rational.hpp"

namespace confchi {

/*
 * The S_n-equivariant Euler characteristic of an ordered configuration
 * space. Because S_n acts freely, the character vanishes off the identity
 * and the whole virtual character is an integer multiple of the regular
 * representation; that multiple is chi of the unordered space.
 */
struct EquivariantChar {
    int n = 1;
    BigInt multiplicity;  // chi(B(X,n)) = chi(F(X,n)) / n!
    // Keyed by cycle type, an integer partition of n in decreasing order.
    // chi(F) at the identity class [1,...,1], zero everywhere else.
    std::map<std::vector<int>, BigInt> character;
};

// chi(F)/n!; throws IntegralityError when n! does not divide chi(F).
BigInt chi_unordered(const BigInt& chi_F, int n);

EquivariantChar equivariant_character(const BigInt& chi_F, int n);

// Size of the conjugacy class with the given cycle type: n!/z, with
// z = prod over cycle lengths k of k^(m_k) * m_k!.
BigInt conjugacy_class_size(const std::vector<int>& cycle_type);

} // namespace confchi
