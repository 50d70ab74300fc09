#include "confchi/json_io.hpp"

#include <limits>

#include "confchi/errors.hpp"

namespace confchi {

using nlohmann::json;

namespace {

const json& require_key(const json& j, const char* key, const char* where) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string(where) + ": missing key '" + key + "'");
    }
    return j.at(key);
}

std::int64_t as_integer(const json& j, const std::string& what) {
    if (!j.is_number_integer()) {
        throw ParseError(what + " must be an integer");
    }
    return j.get<std::int64_t>();
}

// BigInt values go out as JSON numbers when they fit in int64, otherwise as
// exact decimal strings.
json bigint_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(v);
    }
    return v.str();
}

} // namespace

json series_to_json(const EgfSeries& a) {
    json coeffs = json::array();
    for (const Rational& c : a.coeffs()) {
        coeffs.push_back(format_rational(c));
    }
    return json{{"order", a.order()}, {"coeffs", std::move(coeffs)}};
}

EgfSeries series_from_json(const json& j) {
    const std::int64_t order = as_integer(require_key(j, "order", "series"), "series order");
    if (order < 0) {
        throw ParseError("series order must be non-negative");
    }
    const json& coeffs = require_key(j, "coeffs", "series");
    if (!coeffs.is_array()) {
        throw ParseError("series coeffs must be an array");
    }
    if (static_cast<std::int64_t>(coeffs.size()) != order + 1) {
        throw ParseError("series coeffs must have order+1 entries");
    }
    std::vector<Rational> out;
    out.reserve(coeffs.size());
    for (const json& c : coeffs) {
        if (c.is_string()) {
            out.push_back(parse_rational(c.get<std::string>()));
        } else if (c.is_number_integer()) {
            out.push_back(Rational(c.get<std::int64_t>()));
        } else {
            throw ParseError("series coefficient must be a fraction string or integer");
        }
    }
    return EgfSeries(std::move(out));
}

SimplicialComplex complex_from_json(const json& j) {
    const json& facets = require_key(j, "facets", "complex");
    if (!facets.is_array()) {
        throw ParseError("facets must be an array");
    }
    std::vector<Simplex> parsed;
    parsed.reserve(facets.size());
    for (const json& facet : facets) {
        if (!facet.is_array()) {
            throw ParseError("each facet must be an array of vertices");
        }
        std::vector<Vertex> vertices;
        vertices.reserve(facet.size());
        for (const json& v : facet) {
            if (v.is_number_integer()) {
                vertices.emplace_back(v.get<std::int64_t>());
            } else if (v.is_string()) {
                vertices.emplace_back(v.get<std::string>());
            } else {
                throw ParseError("vertices must be integers or strings");
            }
        }
        parsed.push_back(Simplex{std::move(vertices)});
    }
    return SimplicialComplex::from_facets(std::move(parsed));
}

StratifiedSpace space_from_json(const json& j) {
    const json& strata = require_key(j, "strata", "stratified space");
    if (!strata.is_array()) {
        throw ParseError("strata must be an array");
    }
    StratifiedSpace space;
    space.strata.reserve(strata.size());
    for (const json& record : strata) {
        if (!record.is_object()) {
            throw ParseError("each stratum must be an object");
        }
        Stratum s;
        const json& name = require_key(record, "name", "stratum");
        if (!name.is_string()) {
            throw ParseError("stratum name must be a string");
        }
        s.name = name.get<std::string>();
        const std::int64_t dim =
            as_integer(require_key(record, "dim", "stratum"), "stratum '" + s.name + "' dim");
        if (dim > 1000000 || dim < -1000000) {
            throw ParseError("stratum '" + s.name + "' dim out of range");
        }
        s.dim = static_cast<int>(dim);
        s.chi_c = as_integer(require_key(record, "chi_c", "stratum"),
                             "stratum '" + s.name + "' chi_c");
        if (record.contains("link_chi")) {
            s.link_chi = as_integer(record.at("link_chi"), "stratum '" + s.name + "' link_chi");
        }
        if (record.contains("sheaf_rank")) {
            s.sheaf_rank =
                as_integer(record.at("sheaf_rank"), "stratum '" + s.name + "' sheaf_rank");
        } else {
            s.sheaf_rank = 1;  // constant sheaf
        }
        space.strata.push_back(std::move(s));
    }
    return space;
}

json space_to_json(const StratifiedSpace& space) {
    json strata = json::array();
    for (const Stratum& s : space.strata) {
        json record{{"name", s.name}, {"dim", s.dim}, {"chi_c", s.chi_c}};
        if (s.link_chi) {
            record["link_chi"] = *s.link_chi;
        }
        if (s.sheaf_rank) {
            record["sheaf_rank"] = *s.sheaf_rank;
        }
        strata.push_back(std::move(record));
    }
    return json{{"strata", std::move(strata)}};
}

json equivariant_to_json(const EquivariantChar& ec) {
    json character = json::object();
    for (const auto& [cycle_type, value] : ec.character) {
        std::string key = "[";
        for (std::size_t i = 0; i < cycle_type.size(); ++i) {
            if (i > 0) {
                key += ",";
            }
            key += std::to_string(cycle_type[i]);
        }
        key += "]";
        character[key] = bigint_to_json(value);
    }
    return json{{"n", ec.n},
                {"multiplicity", bigint_to_json(ec.multiplicity)},
                {"character", std::move(character)}};
}

} // namespace confchi
