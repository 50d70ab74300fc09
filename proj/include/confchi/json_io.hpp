#pragma once

#include <json.hpp>

#include "confchi/equivariant.hpp"
#include "confchi/series.hpp"
#include "confchi/simplicial.hpp"
#include "confchi/stratified.hpp"

namespace confchi {

// {"order": N, "coeffs": ["p/q", ...]} with exact fraction strings.
nlohmann::json series_to_json(const EgfSeries& a);

// Accepts the emitted form plus integer coefficients for convenience.
// Schema violations throw ParseError.
EgfSeries series_from_json(const nlohmann::json& j);

// {"facets": [[1,2,3],[3,"a"], ...]}, vertices integers or strings.
SimplicialComplex complex_from_json(const nlohmann::json& j);

// {"strata": [{"name":..., "dim":..., "chi_c":..., "link_chi":...,
// "sheaf_rank":...}, ...]}. link_chi is optional with no default (only the
// dualizing route needs it); sheaf_rank defaults to 1, the constant sheaf.
StratifiedSpace space_from_json(const nlohmann::json& j);

nlohmann::json space_to_json(const StratifiedSpace& space);

// {"n":..., "multiplicity":..., "character": {"[1,1]":..., "[2]":0}}.
// Values outside the int64 range are emitted as decimal strings.
nlohmann::json equivariant_to_json(const EquivariantChar& ec);

} // namespace confchi
