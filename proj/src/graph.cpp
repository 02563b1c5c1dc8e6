#include "tnt/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace tnt {

std::vector<Vertex> members(VertexSet s)
{
    std::vector<Vertex> out;
    out.reserve(set_size(s));
    for_each_vertex(s, [&](Vertex v) { out.push_back(v); });
    return out;
}

VertexSet make_set(std::span<const Vertex> vs)
{
    VertexSet s = 0;
    for (Vertex v : vs) {
        if (v < 0 || v >= kMaxVertices)
            throw VertexOutOfRange("vertex " + std::to_string(v) + " outside [0, 64)");
        s |= singleton(v);
    }
    return s;
}

namespace {

void check_order(int n)
{
    if (n < 1 || n > kMaxVertices)
        throw OrderOutOfRange("vertex count " + std::to_string(n) + " outside [1, 64]");
}

} // namespace

Graph Graph::empty(int n)
{
    check_order(n);
    Graph g;
    g.n_ = n;
    return g;
}

Graph Graph::complete(int n)
{
    Graph g = empty(n);
    for (Vertex v = 0; v < n; ++v)
        g.rows_[v] = prefix_mask(n) & ~singleton(v);
    return g;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges)
{
    Graph g = empty(n);
    for (auto [u, v] : edges) {
        g.check_vertex(u);
        g.check_vertex(v);
        if (u == v)
            throw SelfLoop("self-loop at vertex " + std::to_string(u));
        g.rows_[u] |= singleton(v);
        g.rows_[v] |= singleton(u);
    }
    return g;
}

Graph Graph::from_rows(int n, std::span<const VertexSet> rows)
{
    Graph g = empty(n);
    if (rows.size() != static_cast<std::size_t>(n))
        throw InputError("expected " + std::to_string(n) + " adjacency rows");
    for (Vertex v = 0; v < n; ++v) {
        if (rows[v] & ~prefix_mask(n))
            throw VertexOutOfRange("row " + std::to_string(v) + " has bits beyond n");
        if (contains(rows[v], v))
            throw SelfLoop("self-loop at vertex " + std::to_string(v));
        for_each_vertex(rows[v], [&](Vertex u) {
            g.rows_[v] |= singleton(u);
            g.rows_[u] |= singleton(v);
        });
    }
    return g;
}

void Graph::check_vertex(Vertex v) const
{
    if (v < 0 || v >= n_)
        throw VertexOutOfRange("vertex " + std::to_string(v) + " outside [0, " + std::to_string(n_) + ")");
}

std::size_t Graph::edge_count() const noexcept
{
    std::size_t twice = 0;
    for (Vertex v = 0; v < n_; ++v)
        twice += set_size(rows_[v]);
    return twice / 2;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u)
        for_each_vertex(rows_[u] & ~prefix_mask(u + 1), [&](Vertex v) { out.emplace_back(u, v); });
    return out;
}

std::vector<int> Graph::degree_sequence() const
{
    std::vector<int> out(n_);
    for (Vertex v = 0; v < n_; ++v)
        out[v] = degree(v);
    return out;
}

Graph Graph::with_edge(Vertex u, Vertex v) const
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw SelfLoop("self-loop at vertex " + std::to_string(u));
    Graph g = *this;
    g.rows_[u] |= singleton(v);
    g.rows_[v] |= singleton(u);
    return g;
}

Graph Graph::without_edge(Vertex u, Vertex v) const
{
    check_vertex(u);
    check_vertex(v);
    Graph g = *this;
    g.rows_[u] &= ~singleton(v);
    g.rows_[v] &= ~singleton(u);
    return g;
}

Graph Graph::with_vertex(VertexSet nbrs) const
{
    if (n_ >= kMaxVertices)
        throw OrderOutOfRange("cannot grow past 64 vertices");
    if (nbrs & ~prefix_mask(n_))
        throw VertexOutOfRange("new vertex neighbourhood has bits beyond n");
    Graph g = *this;
    Vertex x = n_;
    g.n_ = n_ + 1;
    g.rows_[x] = nbrs;
    for_each_vertex(nbrs, [&](Vertex u) { g.rows_[u] |= singleton(x); });
    return g;
}

Graph Graph::permuted(std::span<const Vertex> perm) const
{
    if (perm.size() != static_cast<std::size_t>(n_))
        throw InputError("permutation size does not match vertex count");
    Graph g;
    g.n_ = n_;
    for (Vertex v = 0; v < n_; ++v) {
        VertexSet row = 0;
        for_each_vertex(rows_[v], [&](Vertex u) { row |= singleton(perm[u]); });
        g.rows_[perm[v]] = row;
    }
    return g;
}

Graph Graph::disjoint_union(const Graph& other) const
{
    if (n_ + other.n_ > kMaxVertices)
        throw OrderOutOfRange("disjoint union exceeds 64 vertices");
    Graph g = *this;
    g.n_ = n_ + other.n_;
    for (Vertex v = 0; v < other.n_; ++v)
        g.rows_[n_ + v] = other.rows_[v] << n_;
    return g;
}

bool operator==(const Graph& x, const Graph& y) noexcept
{
    return x.n_ == y.n_ && std::equal(x.rows_.begin(), x.rows_.begin() + x.n_, y.rows_.begin());
}

Graph make_graph(int n, std::span<const Edge> edges)
{
    return Graph::from_edges(n, edges);
}

VertexSet common_neighbors(const Graph& g, VertexSet s)
{
    if (s == 0)
        throw InputError("common_neighbors of an empty set");
    if (s & ~g.vertices())
        throw VertexOutOfRange("vertex set has members beyond n");
    VertexSet common = g.vertices();
    for_each_vertex(s, [&](Vertex v) { common &= g.neighbors(v); });
    return common;
}

namespace {

void check_biclique_params(int s, int t)
{
    if (s < 1 || s > t)
        throw InputError("K_{s,t} requires 1 <= s <= t");
}

// Is there a `need`-subset of `pool` whose rows jointly keep at least `t`
// members of `common`?
bool extend_biclique(const Graph& g, VertexSet pool, VertexSet common, int need, int t)
{
    if (need == 0)
        return true;
    while (set_size(pool) >= need) {
        Vertex v = std::countr_zero(pool);
        pool &= pool - 1;
        VertexSet next = common & g.neighbors(v);
        if (set_size(next) >= t && extend_biclique(g, pool, next, need - 1, t))
            return true;
    }
    return false;
}

} // namespace

bool contains_complete_bipartite(const Graph& g, int s, int t)
{
    check_biclique_params(s, t);
    if (s + t > g.order())
        return false;
    return extend_biclique(g, g.vertices(), g.vertices(), s, t);
}

bool contains_complete_bipartite_at(const Graph& g, int s, int t, Vertex v)
{
    check_biclique_params(s, t);
    if (v < 0 || v >= g.order())
        throw VertexOutOfRange("vertex outside graph");
    if (s + t > g.order())
        return false;
    VertexSet others = g.vertices() & ~singleton(v);
    VertexSet nv = g.neighbors(v);
    // v on the small side: the large side lies inside N(v).
    if (set_size(nv) >= t && extend_biclique(g, others, nv, s - 1, t))
        return true;
    // v on the large side: the small side lies inside N(v) and v is a common neighbour.
    return extend_biclique(g, nv, g.vertices(), s, t);
}

bool contains_spanning_split(const Graph& g, int s, bool closed)
{
    const int n = g.order();
    if (s < 2 || s > n)
        throw InputError("spanning split requires 2 <= s <= n");
    // A dominating vertex is adjacent to all others; the s-1 hubs must all dominate.
    VertexSet dominating = 0;
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) == n - 1)
            dominating |= singleton(v);
    if (set_size(dominating) >= s - 1)
        return true;
    if (closed)
        return false;
    // Open form: hubs need only reach the other n-s+1 vertices. Each hub
    // has degree >= n-s+1; try every (s-1)-set of such candidates.
    VertexSet candidates = 0;
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) >= n - s + 1)
            candidates |= singleton(v);
    std::vector<Vertex> cand = members(candidates);
    const int k = s - 1;
    if (static_cast<int>(cand.size()) < k)
        return false;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        VertexSet hubs = 0;
        for (int i : idx)
            hubs |= singleton(cand[i]);
        VertexSet rest = g.vertices() & ~hubs;
        bool ok = true;
        for (int i : idx)
            if ((g.neighbors(cand[i]) & rest) != rest) {
                ok = false;
                break;
            }
        if (ok)
            return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == static_cast<int>(cand.size()) - k + i)
            --i;
        if (i < 0)
            return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

int girth(const Graph& g)
{
    const int n = g.order();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(n), parent(n);
    for (Vertex root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<Vertex> queue{root};
        dist[root] = 0;
        parent[root] = -1;
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop_front();
            for (Vertex y : members(g.neighbors(x))) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if (parent[x] != y) {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
    }
    return best == std::numeric_limits<int>::max() ? 0 : best;
}

namespace named {

Graph cycle(int n)
{
    if (n < 3)
        throw InputError("cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (Vertex v = 0; v < n; ++v)
        e.emplace_back(v, (v + 1) % n);
    return make_graph(n, e);
}

Graph path(int n)
{
    std::vector<Edge> e;
    for (Vertex v = 0; v + 1 < n; ++v)
        e.emplace_back(v, v + 1);
    return make_graph(n, e);
}

Graph star(int leaves) { return complete_bipartite(1, leaves); }

Graph complete_bipartite(int m, int k)
{
    if (m < 0 || k < 0)
        throw InputError("negative part size");
    std::vector<Edge> e;
    for (Vertex u = 0; u < m; ++u)
        for (Vertex v = m; v < m + k; ++v)
            e.emplace_back(u, v);
    return make_graph(m + k, e);
}

Graph petersen()
{
    std::vector<Edge> e;
    for (Vertex v = 0; v < 5; ++v) {
        e.emplace_back(v, (v + 1) % 5);
        e.emplace_back(v, v + 5);
        e.emplace_back(5 + v, 5 + (v + 2) % 5);
    }
    return make_graph(10, e);
}

Graph wheel(int rim)
{
    if (rim < 3)
        throw InputError("wheel rim needs at least 3 vertices");
    std::vector<Edge> e;
    for (Vertex v = 1; v <= rim; ++v) {
        e.emplace_back(0, v);
        e.emplace_back(v, v % rim + 1);
    }
    return make_graph(rim + 1, e);
}

} // namespace named

} // namespace tnt
