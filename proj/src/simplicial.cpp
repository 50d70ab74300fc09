#include "confchi/simplicial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "confchi/errors.hpp"

namespace confchi {

Simplex make_simplex(std::vector<Vertex> vertices) {
    if (vertices.empty()) {
        throw ValidationError("simplex needs at least one vertex");
    }
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
        Simplex raw{std::move(vertices)};
        throw ValidationError("duplicate vertex in facet " + format_simplex(raw));
    }
    return Simplex{std::move(vertices)};
}

std::string format_simplex(const Simplex& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        if (const auto* n = std::get_if<std::int64_t>(&s.vertices[i])) {
            out += std::to_string(*n);
        } else {
            out += "\"" + std::get<std::string>(s.vertices[i]) + "\"";
        }
    }
    out += "]";
    return out;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Simplex> facets) {
    if (facets.empty()) {
        throw ValidationError("complex needs at least one facet");
    }
    std::set<Simplex> closure;
    for (Simplex& f : facets) {
        f = make_simplex(std::move(f).vertices);
        const std::size_t k = f.vertices.size();
        if (k > 20) {
            throw ValidationError("facet " + format_simplex(f) + " is too large (> 20 vertices)");
        }
        // Every non-empty subset, by bitmask.
        for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
            Simplex face;
            for (std::size_t i = 0; i < k; ++i) {
                if (mask & (1u << i)) {
                    face.vertices.push_back(f.vertices[i]);
                }
            }
            closure.insert(std::move(face));
        }
    }

    SimplicialComplex X;
    X.faces_.assign(closure.begin(), closure.end());
    // The maximal members of the input are the true facets; drop dominated
    // and duplicate entries.
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    for (const Simplex& f : facets) {
        const bool dominated = std::any_of(facets.begin(), facets.end(), [&](const Simplex& g) {
            return g.vertices.size() > f.vertices.size() &&
                   std::includes(g.vertices.begin(), g.vertices.end(), f.vertices.begin(),
                                 f.vertices.end());
        });
        if (!dominated) {
            X.facets_.push_back(f);
        }
    }
    return X;
}

SimplicialComplex SimplicialComplex::from_closed_faces(std::vector<Simplex> faces) {
    std::sort(faces.begin(), faces.end());
    SimplicialComplex X;
    X.faces_ = std::move(faces);
    for (const Simplex& f : X.faces_) {
        const bool dominated =
            std::any_of(X.faces_.begin(), X.faces_.end(), [&](const Simplex& g) {
                return g.vertices.size() > f.vertices.size() &&
                       std::includes(g.vertices.begin(), g.vertices.end(), f.vertices.begin(),
                                     f.vertices.end());
            });
        if (!dominated) {
            X.facets_.push_back(f);
        }
    }
    return X;
}

bool SimplicialComplex::contains(const Simplex& s) const {
    return std::binary_search(faces_.begin(), faces_.end(), s);
}

std::int64_t euler_char(const SimplicialComplex& X) {
    std::int64_t chi = 0;
    for (const Simplex& f : X.faces()) {
        chi += f.dim() % 2 == 0 ? 1 : -1;
    }
    return chi;
}

SimplicialComplex link(const SimplicialComplex& X, const Simplex& sigma) {
    if (!X.contains(sigma)) {
        throw std::invalid_argument("link of a non-face " + format_simplex(sigma));
    }
    std::vector<Simplex> faces;
    for (const Simplex& tau : X.faces()) {
        std::vector<Vertex> joint;
        std::set_union(tau.vertices.begin(), tau.vertices.end(), sigma.vertices.begin(),
                       sigma.vertices.end(), std::back_inserter(joint));
        if (joint.size() != tau.vertices.size() + sigma.vertices.size()) {
            continue;  // not disjoint
        }
        if (X.contains(Simplex{std::move(joint)})) {
            faces.push_back(tau);
        }
    }
    return SimplicialComplex::from_closed_faces(std::move(faces));
}

StratifiedSpace cell_stratification(const SimplicialComplex& X) {
    StratifiedSpace space;
    for (const Simplex& sigma : X.faces()) {
        Stratum s;
        s.name = format_simplex(sigma);
        s.dim = sigma.dim();
        s.chi_c = sigma.dim() % 2 == 0 ? 1 : -1;  // open cell
        s.link_chi = euler_char(link(X, sigma));
        space.strata.push_back(std::move(s));
    }
    return space;
}

} // namespace confchi
