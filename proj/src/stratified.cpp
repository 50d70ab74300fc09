#include "confchi/stratified.hpp"

#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "confchi/errors.hpp"

namespace confchi {

std::int64_t Stratum::chi_ordinary() const {
    return dim % 2 == 0 ? chi_c : -chi_c;
}

void validate(const StratifiedSpace& space, ValidationFlags flags) {
    if (space.strata.empty()) {
        throw ValidationError("stratified space has no strata");
    }
    std::set<std::string> seen;
    for (const Stratum& s : space.strata) {
        if (s.name.empty()) {
            throw ValidationError("stratum with empty name");
        }
        if (!seen.insert(s.name).second) {
            throw ValidationError("duplicate stratum name '" + s.name + "'");
        }
        if (s.dim < 0) {
            throw ValidationError("stratum '" + s.name + "': dim must be >= 0");
        }
        if (flags.require_links && !s.link_chi) {
            throw ValidationError("stratum '" + s.name + "': link_chi is required here");
        }
        if (flags.require_sheaf && !s.sheaf_rank) {
            throw ValidationError("stratum '" + s.name + "': sheaf_rank is required here");
        }
    }
}

std::int64_t dualizing_rank(const Stratum& s) {
    if (!s.link_chi) {
        throw ValidationError("stratum '" + s.name + "': link_chi is required here");
    }
    const std::int64_t sign = s.dim % 2 == 0 ? 1 : -1;
    return sign * (1 - *s.link_chi);
}

StratifiedSpace refine(const StratifiedSpace& space, const std::string& name,
                       const std::vector<std::int64_t>& parts) {
    if (parts.empty()) {
        throw ValidationError("refinement of '" + name + "' needs at least one part");
    }
    StratifiedSpace out;
    bool found = false;
    for (const Stratum& s : space.strata) {
        if (s.name != name) {
            out.strata.push_back(s);
            continue;
        }
        found = true;
        const std::int64_t total = std::accumulate(parts.begin(), parts.end(), std::int64_t{0});
        if (total != s.chi_c) {
            throw ValidationError("refinement parts of '" + name + "' sum to " +
                                  std::to_string(total) + ", stratum has chi_c " +
                                  std::to_string(s.chi_c));
        }
        for (std::size_t i = 0; i < parts.size(); ++i) {
            Stratum piece = s;
            piece.name = name + "#" + std::to_string(i + 1);
            piece.chi_c = parts[i];
            out.strata.push_back(std::move(piece));
        }
    }
    if (!found) {
        throw ValidationError("no stratum named '" + name + "'");
    }
    validate(out);
    return out;
}

StratifiedSpace group_strata(const StratifiedSpace& space) {
    using Key = std::tuple<int, std::optional<std::int64_t>, std::optional<std::int64_t>>;
    std::map<Key, std::size_t> index;
    StratifiedSpace out;
    for (const Stratum& s : space.strata) {
        const Key key{s.dim, s.link_chi, s.sheaf_rank};
        auto [it, inserted] = index.emplace(key, out.strata.size());
        if (inserted) {
            out.strata.push_back(s);
        } else {
            Stratum& merged = out.strata[it->second];
            merged.chi_c += s.chi_c;
            merged.name += "+" + s.name;
        }
    }
    return out;
}

} // namespace confchi
