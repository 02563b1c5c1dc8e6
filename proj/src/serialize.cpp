#include "tnt/serialize.hpp"

namespace tnt {

void to_json(Json& j, const MultipartitePattern& p)
{
    j = p.parts();
}

void from_json(const Json& j, MultipartitePattern& p)
{
    if (!j.is_array())
        throw InputError("pattern must be a JSON array of part sizes");
    p = MultipartitePattern(j.get<std::vector<int>>());
}

void to_json(Json& j, const ConstructionSpec& s)
{
    j = Json{{"family", to_string(s.family)}, {"params", s.params}};
    if (!s.patterns.empty())
        j["patterns"] = s.patterns;
    if (s.seed)
        j["seed"] = *s.seed;
}

void from_json(const Json& j, ConstructionSpec& s)
{
    if (!j.is_object() || !j.contains("family"))
        throw InputError("construction spec needs an object with a \"family\" field");
    s = ConstructionSpec{};
    s.family = family_from_string(j.at("family").get<std::string>());
    if (j.contains("params"))
        s.params = j.at("params").get<std::vector<int>>();
    if (j.contains("patterns"))
        s.patterns = j.at("patterns").get<std::vector<MultipartitePattern>>();
    if (j.contains("seed") && !j.at("seed").is_null())
        s.seed = j.at("seed").get<std::uint64_t>();
}

void to_json(Json& j, const SearchResult& r)
{
    j = Json{
        {"n", r.n},
        {"H", r.h},
        {"F", r.f},
        {"value", r.value},
        {"exhaustive", r.exhaustive},
        {"certificates", r.certificates},
        {"engine", to_string(r.engine)},
        {"runtime_ms", r.runtime_ms},
        {"seed", r.seed},
    };
}

void from_json(const Json& j, SearchResult& r)
{
    r = SearchResult{};
    r.n = j.at("n").get<int>();
    r.h = j.at("H").get<MultipartitePattern>();
    r.f = j.at("F").get<MultipartitePattern>();
    r.value = j.at("value").get<Count>();
    r.exhaustive = j.at("exhaustive").get<bool>();
    r.certificates = j.at("certificates").get<std::vector<std::string>>();
    r.engine = engine_from_string(j.at("engine").get<std::string>());
    r.runtime_ms = j.value("runtime_ms", 0.0);
    r.seed = j.value("seed", std::uint64_t{0});
}

void to_json(Json& j, const Hypergraph& h)
{
    Json edges = Json::array();
    for (VertexSet e : h.edges())
        edges.push_back(members(e));
    j = Json{{"n", h.order()}, {"r", h.uniformity()}, {"edges", edges}};
}

void from_json(const Json& j, Hypergraph& h)
{
    h = Hypergraph::from_lists(j.at("n").get<int>(), j.at("r").get<int>(),
                               j.at("edges").get<std::vector<std::vector<Vertex>>>());
}

void to_json(Json& j, const NeighborHistogram& h)
{
    Json counts = Json::object();
    for (auto [size, count] : h.histogram)
        counts[std::to_string(size)] = count;
    j = Json{{"subset_size", h.subset_size}, {"histogram", counts}};
}

void to_json(Json& j, const BSetClassification& c)
{
    j = Json{{"b", c.b}, {"s", c.s}, {"good", c.good}, {"bad", c.bad}, {"over", c.over}};
}

void to_json(Json& j, const PlacementReport& r)
{
    j = Json{{"linear", r.linear},
             {"pattern_absent", r.pattern_absent},
             {"premises_hold", r.premises_hold},
             {"t0", r.t0},
             {"placed_free", r.placed_free}};
}

} // namespace tnt
