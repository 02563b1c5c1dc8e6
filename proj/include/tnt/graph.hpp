#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tnt {

using Vertex = int;
using VertexSet = std::uint64_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet singleton(Vertex v) { return VertexSet{1} << v; }
constexpr VertexSet prefix_mask(int n) { return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }
constexpr int set_size(VertexSet s) { return std::popcount(s); }
constexpr bool contains(VertexSet s, Vertex v) { return (s >> v) & 1U; }

/// Calls f(v) for each member of s in increasing order.
template <class F>
void for_each_vertex(VertexSet s, F&& f)
{
    while (s != 0) {
        f(std::countr_zero(s));
        s &= s - 1;
    }
}

std::vector<Vertex> members(VertexSet s);
VertexSet make_set(std::span<const Vertex> vs);

/// Base class for rejected caller input.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class OrderOutOfRange : public InputError {
public:
    using InputError::InputError;
};

class VertexOutOfRange : public InputError {
public:
    using InputError::InputError;
};

class SelfLoop : public InputError {
public:
    using InputError::InputError;
};

/// Simple undirected graph on at most 64 vertices; one bitset word per
/// adjacency row. Values are immutable: every edit returns a new graph.
class Graph {
public:
    Graph() = default;

    /// Throws OrderOutOfRange, VertexOutOfRange or SelfLoop on bad input.
    static Graph from_edges(int n, std::span<const Edge> edges);
    /// Builds from adjacency rows; rows are symmetrised and validated.
    static Graph from_rows(int n, std::span<const VertexSet> rows);
    static Graph empty(int n);
    static Graph complete(int n);

    int order() const noexcept { return n_; }
    VertexSet vertices() const noexcept { return prefix_mask(n_); }
    VertexSet neighbors(Vertex v) const { return rows_[v]; }
    bool adjacent(Vertex u, Vertex v) const { return contains(rows_[u], v); }
    int degree(Vertex v) const { return set_size(rows_[v]); }
    std::size_t edge_count() const noexcept;
    std::vector<Edge> edges() const;
    std::vector<int> degree_sequence() const;

    Graph with_edge(Vertex u, Vertex v) const;
    Graph without_edge(Vertex u, Vertex v) const;
    /// Appends vertex n adjacent to the members of nbrs.
    Graph with_vertex(VertexSet nbrs) const;
    /// Relabels: vertex v of this graph becomes perm[v].
    Graph permuted(std::span<const Vertex> perm) const;
    /// Vertex-disjoint union; the other graph's vertices are shifted by order().
    Graph disjoint_union(const Graph& other) const;

    friend bool operator==(const Graph& x, const Graph& y) noexcept;

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::array<VertexSet, kMaxVertices> rows_{};
};

Graph make_graph(int n, std::span<const Edge> edges);
inline Graph make_graph(int n, std::initializer_list<Edge> edges)
{
    return make_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Vertices adjacent to every member of s. Throws InputError for an empty s.
VertexSet common_neighbors(const Graph& g, VertexSet s);

/// True iff some s-subset has at least t common neighbours (g contains K_{s,t}).
bool contains_complete_bipartite(const Graph& g, int s, int t);

/// As contains_complete_bipartite, restricted to copies that use vertex v.
/// Used when g minus v is already known to be K_{s,t}-free.
bool contains_complete_bipartite_at(const Graph& g, int s, int t, Vertex v);

/// True iff s-1 vertices are adjacent to all other vertices; with closed,
/// those s-1 vertices must also be pairwise adjacent.
bool contains_spanning_split(const Graph& g, int s, bool closed);

/// Length of a shortest cycle, or 0 when the graph is a forest.
int girth(const Graph& g);

/// Named small graphs used across tests and constructions.
namespace named {
Graph cycle(int n);
Graph path(int n);
Graph star(int leaves);
Graph complete_bipartite(int m, int k);
Graph petersen();
Graph wheel(int rim);
} // namespace named

} // namespace tnt
