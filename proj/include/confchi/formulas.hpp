#pragma once

#include <cstdint>

#include "confchi/series.hpp"
#include "confchi/simplicial.hpp"
#include "confchi/stratified.hpp"

namespace confchi {

enum class Parity { even, odd };

// EGF of chi_c(F(X,n), K^(boxtimes n)) for a stratified space with
// stratumwise sheaf ranks:
//
//   prod over strata (1 + sheaf_rank * t)^chi_c
//
// Requires sheaf_rank on every stratum.
EgfSeries egf_theorem(const StratifiedSpace& space, int order);

// EGF of the ordinary chi(F(X,n)): substitutes the dualizing rank
// (-1)^dim (1 - chi(link)) for each stratum's sheaf rank, then evaluates
// the same product. Requires link_chi on every stratum.
EgfSeries egf_corollary(const StratifiedSpace& space, int order);

// (1 + t)^chi_c, the constant-coefficient EGF valid on any space.
EgfSeries egf_getzler(std::int64_t chi_c, int order);

// Gal's cell-by-cell product over all faces of a finite simplicial complex:
//
//   prod over faces (1 + (-1)^d (1 - v) t)^((-1)^d),  v = chi(link)
//
// Assembled directly from the faces, not via cell_stratification, so it
// cross-checks egf_corollary as an independent code path.
EgfSeries egf_gal(const SimplicialComplex& X, int order);

// Manifold case: (1+t)^chi when dim is even, (1-t)^(-chi) when odd.
EgfSeries egf_manifold(std::int64_t chi, Parity parity, int order);

// The same characteristics as a closed product: chi(F(M,n)) is the falling
// factorial of chi for even dimension, the rising factorial for odd.
BigInt manifold_chi_product(std::int64_t chi, Parity parity, int n);

} // namespace confchi
