#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "confchi/stratified.hpp"

namespace confchi {

// Vertex identifiers are opaque sortable tokens; all integers order before
// all strings, so mixed complexes still have a canonical form.
using Vertex = std::variant<std::int64_t, std::string>;

// Non-empty, strictly increasing vertex list.
struct Simplex {
    std::vector<Vertex> vertices;

    int dim() const { return static_cast<int>(vertices.size()) - 1; }

    auto operator<=>(const Simplex&) const = default;
};

// Canonicalizes (sorts) the vertex list; duplicates are a ValidationError.
Simplex make_simplex(std::vector<Vertex> vertices);

// "[1,3]" for integer vertices, strings quoted: ["a","b"].
std::string format_simplex(const Simplex& s);

/*
 * Finite abstract simplicial complex given by its facets. Construction
 * takes the downward closure, so faces() is every non-empty subset of a
 * facet, each exactly once, in sorted order. The empty complex (no faces)
 * only arises as a link; from_facets rejects empty input.
 */
class SimplicialComplex {
public:
    static SimplicialComplex from_facets(std::vector<Simplex> facets);

    const std::vector<Simplex>& facets() const { return facets_; }
    const std::vector<Simplex>& faces() const { return faces_; }

    bool contains(const Simplex& s) const;
    bool empty() const { return faces_.empty(); }

private:
    friend SimplicialComplex link(const SimplicialComplex&, const Simplex&);

    // From an already downward-closed family; facets are derived as the
    // maximal members.
    static SimplicialComplex from_closed_faces(std::vector<Simplex> faces);

    SimplicialComplex() = default;

    std::vector<Simplex> facets_;
    std::vector<Simplex> faces_;
};

// Alternating face count, sum of (-1)^dim over all faces. The empty
// complex has characteristic 0 (the empty face is never counted), which is
// what makes top cells contribute their exponent-only factors.
std::int64_t euler_char(const SimplicialComplex& X);

// {tau : tau disjoint from sigma and tau union sigma is a face}. sigma must
// itself be a face (std::invalid_argument otherwise); facets have empty
// links.
SimplicialComplex link(const SimplicialComplex& X, const Simplex& sigma);

// The stratification of X by its open cells: one stratum per face sigma
// with dim d, chi_c = (-1)^d and link_chi the characteristic of the
// simplicial link. Sheaf ranks are left unset; the dualizing specialization
// fills them.
StratifiedSpace cell_stratification(const SimplicialComplex& X);

} // namespace confchi
