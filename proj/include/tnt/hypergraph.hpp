#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <vector>

#include "tnt/graph.hpp"
#include "tnt/pattern.hpp"

namespace tnt {

/// r-uniform hypergraph on at most 64 vertices; each edge is a vertex mask.
class Hypergraph {
public:
    Hypergraph() = default;
    /// Throws InputError on an edge of the wrong size, an out-of-range
    /// vertex or a duplicate edge.
    Hypergraph(int n, int r, std::vector<VertexSet> edges);
    static Hypergraph from_lists(int n, int r, const std::vector<std::vector<Vertex>>& edges);

    int order() const noexcept { return n_; }
    int uniformity() const noexcept { return r_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<VertexSet>& edges() const noexcept { return edges_; }
    VertexSet edge(std::size_t i) const { return edges_.at(i); }

    Hypergraph with_edge(VertexSet e) const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    int n_ = 0;
    int r_ = 2;
    std::vector<VertexSet> edges_;
};

bool is_linear(const Hypergraph& h);

/// Length of a shortest Berge cycle; nullopt when there is none. Two edges
/// sharing two or more vertices form a cycle of length 2.
std::optional<int> berge_girth(const Hypergraph& h);

enum class BergeMode { berge, expansion };

struct BergeQuery {
    MultipartitePattern pattern;
    BergeMode mode = BergeMode::berge;
};

bool contains_berge(const Hypergraph& h, const BergeQuery& q);
/// Same search for an arbitrary pattern graph without isolated vertices.
bool contains_berge(const Hypergraph& h, const Graph& pattern, BergeMode mode);

/// Random greedy: adds uniformly random r-sets that keep the hypergraph
/// linear with Berge girth >= 5, until target_m edges or 10^5 consecutive
/// rejections. Throws InputError unless 2 <= r <= n <= 64.
Hypergraph generate_girth5_linear(int n, int r, std::uint64_t seed,
                                  std::optional<std::size_t> target_m = std::nullopt);

enum class PlacementRule { lowest_lex, seeded_random };

/// One K_{a,b} per hyperedge. lowest_lex puts the a smallest vertices on
/// the small side; seeded_random draws the small side from the seed.
/// Throws InputError unless r = a + b.
Graph place_bipartite(const Hypergraph& h, int a, int b, PlacementRule rule = PlacementRule::lowest_lex,
                      std::uint64_t seed = 0);

struct PlacementReport {
    bool linear = false;
    bool pattern_absent = false;
    bool premises_hold = false;
    long t0 = 0;
    bool placed_free = false;
};

/// Threshold t0 above which a placement into a hypergraph without the
/// forbidden Berge-K_{s,p} (or expansion K_{s,p}^{+(a+b)}) is K_{s,t0}-free.
long placement_threshold(int s, int p, int a, int b, BergeMode mode);

/// Throws InputError unless 2 <= s < a <= b and p >= s.
PlacementReport check_placement_premises(const Hypergraph& h, int s, int p, int a, int b, BergeMode mode,
                                         PlacementRule rule = PlacementRule::lowest_lex);

/// "r n m" header then m lines of r vertex indices; '#' lines are skipped.
Hypergraph read_hypergraph(std::istream& in);
void write_hypergraph(std::ostream& out, const Hypergraph& h);

namespace named {
Hypergraph fano_plane();
} // namespace named

} // namespace tnt
