#pragma once

#include <json.hpp>
#include <string>

#include "wurst/bisset.hpp"
#include "wurst/coherent.hpp"

namespace wurst {

using Json = nlohmann::json;

/// {"cap", "levels", "face", "degen", "labels"}; face[n][i][x] = d_i x, degen[n][i][x] = s_i x,
/// labels keyed by level. Reading validates through the SimplicialSet constructor.
Json to_json(const SimplicialSet& x);
SimplicialSet simplicial_set_from_json(const Json& j);

/// {"range": {"ch", "cv", "total"}, "levels": [[count]], "hface", "vface", "hdegen", "vdegen",
/// "labels"}, all indexed [i][j][k][x].
Json to_json(const BiSimplicialSet& b);
BiSimplicialSet bisimplicial_set_from_json(const Json& j);

/// {"source", "target", "components"}.
Json to_json(const SimplicialMap& f);
SimplicialMap simplicial_map_from_json(const Json& j);

/// {"carrier", "base0", "base1"}.
Json to_json(const PointedDirected& k);
PointedDirected pointed_directed_from_json(const Json& j);

/// {"objects", "maps": [[set]], "compose": [[[components]]], "identities"}, where
/// compose[x][y][z] lists the components of map[y][z] x map[x][y] -> map[x][z]. The short form
/// {"free_directed": set} builds the directed two-object category on that mapping complex.
Json to_json(const EnrichedCategory& c);
EnrichedCategory enriched_category_from_json(const Json& j);

/// File helpers; parse errors and missing files raise InputError.
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace wurst
