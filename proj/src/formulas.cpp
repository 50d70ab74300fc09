#include "confchi/formulas.hpp"

#include "confchi/combinatorics.hpp"

namespace confchi {

EgfSeries egf_theorem(const StratifiedSpace& space, int order) {
    validate(space, {.require_links = false, .require_sheaf = true});
    std::vector<EgfSeries> factors;
    factors.reserve(space.strata.size());
    for (const Stratum& s : space.strata) {
        factors.push_back(binomial_series(*s.sheaf_rank, s.chi_c, order));
    }
    return product(factors, order);
}

EgfSeries egf_corollary(const StratifiedSpace& space, int order) {
    validate(space, {.require_links = true, .require_sheaf = false});
    StratifiedSpace dualized = space;
    for (Stratum& s : dualized.strata) {
        s.sheaf_rank = dualizing_rank(s);
    }
    return egf_theorem(dualized, order);
}

EgfSeries egf_getzler(std::int64_t chi_c, int order) {
    return binomial_series(1, chi_c, order);
}

EgfSeries egf_gal(const SimplicialComplex& X, int order) {
    // One factor per cell, straight from the cell formula with its own link
    // computation; egf_corollary(cell_stratification(X)) must agree.
    std::vector<EgfSeries> factors;
    factors.reserve(X.faces().size());
    for (const Simplex& sigma : X.faces()) {
        const std::int64_t sign = sigma.dim() % 2 == 0 ? 1 : -1;
        const std::int64_t v = euler_char(link(X, sigma));
        factors.push_back(binomial_series(sign * (1 - v), sign, order));
    }
    return product(factors, order);
}

EgfSeries egf_manifold(std::int64_t chi, Parity parity, int order) {
    if (parity == Parity::even) {
        return binomial_series(1, chi, order);
    }
    return binomial_series(-1, -chi, order);
}

BigInt manifold_chi_product(std::int64_t chi, Parity parity, int n) {
    if (parity == Parity::even) {
        return falling_factorial(BigInt(chi), n);
    }
    return rising_factorial(BigInt(chi), n);
}

} // namespace confchi
