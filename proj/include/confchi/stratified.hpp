#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace confchi {

/*
 * One stratum of a topologically stratified space of finite type, reduced
 * to the four numbers the generating functions consume. A record may stand
 * for
 * a disjoint union of manifolds as long as they share the same link, with
 * chi_c summed over the pieces.
 */
struct Stratum {
    std::string name;
    int dim = 0;
    std::int64_t chi_c = 0;                  // compactly supported characteristic
    std::optional<std::int64_t> link_chi;    // chi of the link; empty link is 0
    std::optional<std::int64_t> sheaf_rank;  // chi of the sheaf complex on the stratum

    // Strata are manifolds, so chi = (-1)^dim * chi_c. Derived, never stored.
    std::int64_t chi_ordinary() const;
};

struct StratifiedSpace {
    std::vector<Stratum> strata;
};

struct ValidationFlags {
    bool require_links = false;  // needed by the dualizing-complex route
    bool require_sheaf = false;  // needed by the sheaf-coefficient route
};

// Checks non-emptiness, unique names, dim >= 0, and presence of whichever
// optional fields the flags demand. Throws ValidationError naming the
// stratum and field.
void validate(const StratifiedSpace& space, ValidationFlags flags = {});

// (-1)^dim * (1 - chi(link)): the stratumwise rank of the dualizing
// complex. Requires link_chi.
std::int64_t dualizing_rank(const Stratum& s);

// Replace the named stratum by |parts| strata with the same dim, link and
// sheaf data and chi_c taken from parts. parts must sum to the stratum's
// chi_c; compactly supported characteristics are additive, so every
// generating function is unchanged under refinement.
StratifiedSpace refine(const StratifiedSpace& space, const std::string& name,
                       const std::vector<std::int64_t>& parts);

// Inverse direction: merge strata sharing (dim, link_chi, sheaf_rank) by
// summing chi_c. Also leaves every generating function unchanged.
StratifiedSpace group_strata(const StratifiedSpace& space);

} // namespace confchi
