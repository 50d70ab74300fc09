#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "confchi/errors.hpp"
#include "confchi/simplicial.hpp"

#include "helpers.hpp"

using namespace confchi;
using confchi::testing::Rng;

namespace {

Simplex sx(std::initializer_list<std::int64_t> vs) {
    std::vector<Vertex> vertices;
    for (auto v : vs) {
        vertices.emplace_back(v);
    }
    return Simplex{std::move(vertices)};
}

SimplicialComplex full_triangle() {
    return SimplicialComplex::from_facets({sx({1, 2, 3})});
}

SimplicialComplex hollow_triangle() {
    return SimplicialComplex::from_facets({sx({1, 2}), sx({2, 3}), sx({1, 3})});
}

SimplicialComplex tetrahedron_boundary() {
    return SimplicialComplex::from_facets(
        {sx({1, 2, 3}), sx({1, 2, 4}), sx({1, 3, 4}), sx({2, 3, 4})});
}

} // namespace

TEST_CASE("downward closure") {
    CHECK(full_triangle().faces().size() == 7);
    CHECK(hollow_triangle().faces().size() == 6);
    CHECK(SimplicialComplex::from_facets({sx({1})}).faces().size() == 1);

    // Unsorted input is canonicalized; duplicates rejected.
    const auto X = SimplicialComplex::from_facets({sx({3, 1, 2})});
    CHECK(X.contains(sx({1, 3})));
    CHECK_THROWS_AS(SimplicialComplex::from_facets({sx({1, 2, 1})}), ValidationError);
    CHECK_THROWS_AS(SimplicialComplex::from_facets({}), ValidationError);

    // Dominated facets drop out of facets() but stay in faces().
    const auto Y = SimplicialComplex::from_facets({sx({1, 2, 3}), sx({2, 3})});
    CHECK(Y.facets().size() == 1);
    CHECK(Y.faces().size() == 7);
}

TEST_CASE("euler characteristics") {
    CHECK(euler_char(full_triangle()) == 1);
    CHECK(euler_char(hollow_triangle()) == 0);
    CHECK(euler_char(tetrahedron_boundary()) == 2);
}

TEST_CASE("links") {
    const auto circle = hollow_triangle();
    const auto vertex_link = link(circle, sx({1}));
    CHECK(vertex_link.faces().size() == 2);
    CHECK(euler_char(vertex_link) == 2);

    const auto edge_link = link(circle, sx({1, 2}));
    CHECK(edge_link.empty());
    CHECK(euler_char(edge_link) == 0);

    const auto triangle = full_triangle();
    const auto opposite = link(triangle, sx({1}));
    CHECK(euler_char(opposite) == 1);
    CHECK(opposite.contains(sx({2, 3})));

    CHECK_THROWS_AS(link(circle, sx({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("links are complexes, facets have empty links") {
    Rng rng(101);
    for (int round = 0; round < 50; ++round) {
        std::vector<Simplex> facets;
        const int count = static_cast<int>(rng.range(1, 5));
        for (int i = 0; i < count; ++i) {
            std::vector<Vertex> vs;
            for (std::int64_t v = 1; v <= 5; ++v) {
                if (rng.range(0, 1)) {
                    vs.emplace_back(v);
                }
            }
            if (vs.empty()) {
                vs.emplace_back(rng.range(1, 5));
            }
            facets.push_back(Simplex{std::move(vs)});
        }
        const auto X = SimplicialComplex::from_facets(std::move(facets));

        for (const Simplex& f : X.facets()) {
            CHECK(link(X, f).empty());
        }
        for (const Simplex& sigma : X.faces()) {
            const auto L = link(X, sigma);
            // Downward closed: every non-empty subset of a link face is a
            // link face.
            for (const Simplex& tau : L.faces()) {
                const std::size_t k = tau.vertices.size();
                for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
                    std::vector<Vertex> sub;
                    for (std::size_t i = 0; i < k; ++i) {
                        if (mask & (1u << i)) {
                            sub.push_back(tau.vertices[i]);
                        }
                    }
                    CHECK(L.contains(Simplex{std::move(sub)}));
                }
            }
        }
    }
}

TEST_CASE("cell stratification") {
    const auto pt = SimplicialComplex::from_facets({sx({1})});
    const auto pt_strata = cell_stratification(pt);
    REQUIRE(pt_strata.strata.size() == 1);
    CHECK(pt_strata.strata[0].dim == 0);
    CHECK(pt_strata.strata[0].chi_c == 1);
    CHECK(pt_strata.strata[0].link_chi == 0);
    CHECK(!pt_strata.strata[0].sheaf_rank.has_value());

    const auto edge = cell_stratification(SimplicialComplex::from_facets({sx({1, 2})}));
    REQUIRE(edge.strata.size() == 3);
    int open_edges = 0;
    for (const Stratum& s : edge.strata) {
        if (s.dim == 1) {
            ++open_edges;
            CHECK(s.chi_c == -1);
            CHECK(s.link_chi == 0);
        } else {
            CHECK(s.dim == 0);
            CHECK(s.chi_c == 1);
            CHECK(s.link_chi == 1);
        }
    }
    CHECK(open_edges == 1);

    const auto circle = cell_stratification(hollow_triangle());
    CHECK(circle.strata.size() == 6);
    std::int64_t total = 0;
    for (const Stratum& s : circle.strata) {
        total += s.chi_c;
    }
    CHECK(total == 0);
}

TEST_CASE("open cells add up to the euler characteristic") {
    // Compact complexes: chi = chi_c, and chi_c is additive over the cells.
    Rng rng(107);
    for (int round = 0; round < 50; ++round) {
        std::vector<Simplex> facets;
        const int count = static_cast<int>(rng.range(1, 4));
        for (int i = 0; i < count; ++i) {
            std::vector<Vertex> vs;
            for (std::int64_t v = 1; v <= 5; ++v) {
                if (rng.range(0, 1)) {
                    vs.emplace_back(v);
                }
            }
            if (vs.empty()) {
                vs.emplace_back(1);
            }
            facets.push_back(Simplex{std::move(vs)});
        }
        const auto X = SimplicialComplex::from_facets(std::move(facets));
        std::int64_t total = 0;
        for (const Stratum& s : cell_stratification(X).strata) {
            total += s.chi_c;
        }
        CHECK(total == euler_char(X));
    }
}

TEST_CASE("mixed vertex tokens") {
    std::vector<Vertex> vs{std::int64_t{1}, std::string("a")};
    const auto X = SimplicialComplex::from_facets({Simplex{vs}});
    CHECK(X.faces().size() == 3);
    CHECK(format_simplex(X.facets()[0]) == "[1,\"a\"]");
    // Integer 1 and string "1" are distinct vertices.
    std::vector<Vertex> tricky{std::int64_t{1}, std::string("1")};
    const auto Y = SimplicialComplex::from_facets({Simplex{tricky}});
    CHECK(Y.faces().size() == 3);
}
