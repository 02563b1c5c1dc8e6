#pragma once

#include <json.hpp>

#include "tnt/constructions.hpp"
#include "tnt/counting.hpp"
#include "tnt/hypergraph.hpp"
#include "tnt/pattern.hpp"
#include "tnt/search.hpp"

namespace tnt {

using Json = nlohmann::json;

// Patterns serialize as their part list, [2, 3].
void to_json(Json& j, const MultipartitePattern& p);
void from_json(const Json& j, MultipartitePattern& p);

// {"family": "...", "params": [...], "patterns": [[...], ...], "seed": n}
// with patterns and seed optional.
void to_json(Json& j, const ConstructionSpec& s);
void from_json(const Json& j, ConstructionSpec& s);

void to_json(Json& j, const SearchResult& r);
void from_json(const Json& j, SearchResult& r);

// {"n": 7, "r": 3, "edges": [[0, 1, 2], ...]}
void to_json(Json& j, const Hypergraph& h);
void from_json(const Json& j, Hypergraph& h);

void to_json(Json& j, const NeighborHistogram& h);
void to_json(Json& j, const BSetClassification& c);
void to_json(Json& j, const PlacementReport& r);

} // namespace tnt
