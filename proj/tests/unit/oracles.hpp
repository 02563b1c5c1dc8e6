#pragma once
// Brute-force reference implementations. Deliberately slow and independent
// of the library's algorithms: they only read adjacency bits.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "tnt/graph.hpp"
#include "tnt/hypergraph.hpp"

namespace oracle {

using tnt::Graph;
using tnt::Vertex;

inline Graph random_graph(int n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    std::vector<tnt::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.emplace_back(u, v);
    return tnt::make_graph(n, edges);
}

inline Graph graph_from_bits(int n, std::uint64_t bits)
{
    std::vector<tnt::Edge> edges;
    int k = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++k)
            if ((bits >> k) & 1U)
                edges.emplace_back(u, v);
    return tnt::make_graph(n, edges);
}

inline bool fully_joined(const Graph& g, const std::vector<int>& x, const std::vector<int>& y)
{
    for (int u : x)
        for (int v : y)
            if (!g.adjacent(u, v))
                return false;
    return true;
}

inline std::vector<std::vector<int>> subsets_of(const std::vector<int>& pool, int k)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t j = i; j < pool.size(); ++j) {
            cur.push_back(pool[j]);
            rec(j + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

// Ordered tuples of disjoint, pairwise completely joined vertex sets of the
// given sizes, divided by the number of orderings of equal-sized parts.
inline std::uint64_t count_copies(const Graph& g, const std::vector<int>& parts)
{
    std::uint64_t ordered = 0;
    std::vector<std::vector<int>> chosen;
    std::function<void(std::size_t, std::vector<bool>&)> rec = [&](std::size_t i, std::vector<bool>& used) {
        if (i == parts.size()) {
            ++ordered;
            return;
        }
        std::vector<int> pool;
        for (int v = 0; v < g.order(); ++v)
            if (!used[v])
                pool.push_back(v);
        for (const auto& s : subsets_of(pool, parts[i])) {
            bool ok = true;
            for (const auto& prev : chosen)
                ok = ok && fully_joined(g, prev, s);
            if (!ok)
                continue;
            for (int v : s)
                used[v] = true;
            chosen.push_back(s);
            rec(i + 1, used);
            chosen.pop_back();
            for (int v : s)
                used[v] = false;
        }
    };
    std::vector<bool> used(g.order(), false);
    rec(0, used);
    std::map<int, int> mult;
    for (int p : parts)
        ++mult[p];
    std::uint64_t sym = 1;
    for (auto [size, m] : mult)
        for (int i = 2; i <= m; ++i)
            sym *= static_cast<std::uint64_t>(i);
    return ordered / sym;
}

inline bool contains_kst(const Graph& g, int s, int t)
{
    std::vector<int> all(g.order());
    for (int v = 0; v < g.order(); ++v)
        all[v] = v;
    for (const auto& x : subsets_of(all, s)) {
        std::vector<int> rest;
        for (int v : all)
            if (std::find(x.begin(), x.end(), v) == x.end())
                rest.push_back(v);
        for (const auto& y : subsets_of(rest, t))
            if (fully_joined(g, x, y))
                return true;
    }
    return false;
}

inline std::vector<int> degrees(const Graph& g)
{
    std::vector<int> out(g.order(), 0);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v)
            if (u != v && g.adjacent(u, v))
                ++out[u];
    return out;
}

// Berge copy of `pattern` (edge list on vertices 0..k-1): try every
// injective vertex map and every injective edge map. In expansion mode the
// image hyperedges must meet the embedded vertices only in their own
// endpoints and each other only in shared endpoints.
inline bool contains_berge(const tnt::Hypergraph& h, int k, const std::vector<tnt::Edge>& pattern, bool expansion)
{
    const int n = h.order();
    const auto& he = h.edges();
    std::vector<int> phi(k, -1);
    std::vector<bool> used_v(n, false);
    std::vector<int> img(pattern.size(), -1);
    std::vector<bool> used_e(he.size(), false);

    auto bit = [](int v) { return tnt::VertexSet{1} << v; };
    std::function<bool(std::size_t)> edges_rec = [&](std::size_t i) -> bool {
        if (i == pattern.size()) {
            if (!expansion)
                return true;
            tnt::VertexSet core = 0;
            for (int v : phi)
                core |= bit(v);
            for (std::size_t a = 0; a < pattern.size(); ++a) {
                auto [u, v] = pattern[a];
                if ((he[img[a]] & core) != (bit(phi[u]) | bit(phi[v])))
                    return false;
                for (std::size_t b = a + 1; b < pattern.size(); ++b) {
                    auto [x, y] = pattern[b];
                    tnt::VertexSet shared = 0;
                    for (int p : {u, v})
                        if (p == x || p == y)
                            shared |= bit(phi[p]);
                    if ((he[img[a]] & he[img[b]]) != shared)
                        return false;
                }
            }
            return true;
        }
        auto [u, v] = pattern[i];
        tnt::VertexSet need = bit(phi[u]) | bit(phi[v]);
        for (std::size_t e = 0; e < he.size(); ++e) {
            if (used_e[e] || (he[e] & need) != need)
                continue;
            used_e[e] = true;
            img[i] = static_cast<int>(e);
            bool ok = edges_rec(i + 1);
            used_e[e] = false;
            if (ok)
                return true;
        }
        return false;
    };
    std::function<bool(int)> vertex_rec = [&](int i) -> bool {
        if (i == k)
            return edges_rec(0);
        for (int v = 0; v < n; ++v) {
            if (used_v[v])
                continue;
            used_v[v] = true;
            phi[i] = v;
            bool ok = vertex_rec(i + 1);
            used_v[v] = false;
            if (ok)
                return true;
        }
        return false;
    };
    return vertex_rec(0);
}

struct BergeInstance {
    tnt::Hypergraph h;
    int k = 0; ///< pattern vertices
    std::vector<tnt::Edge> pattern;
};

// Random hypergraph (3..7 vertices, up to 6 edges) and a random pattern of
// 1..4 edges without isolated vertices.
inline BergeInstance random_berge_instance(std::mt19937_64& rng)
{
    const int n = 3 + static_cast<int>(rng() % 5);
    const int r = 2 + static_cast<int>(rng() % std::min(3, n - 1));
    const int m = 1 + static_cast<int>(rng() % 6);
    std::vector<tnt::VertexSet> edges;
    for (int tries = 0; tries < 200 && static_cast<int>(edges.size()) < m; ++tries) {
        std::vector<int> pool(n);
        for (int v = 0; v < n; ++v)
            pool[v] = v;
        std::shuffle(pool.begin(), pool.end(), rng);
        tnt::VertexSet e = 0;
        for (int i = 0; i < r; ++i)
            e |= tnt::VertexSet{1} << pool[i];
        if (std::find(edges.begin(), edges.end(), e) == edges.end())
            edges.push_back(e);
    }

    const int k = 2 + static_cast<int>(rng() % 4);
    const int want = 1 + static_cast<int>(rng() % 4);
    std::vector<tnt::Edge> pattern;
    for (int tries = 0; tries < 100 && static_cast<int>(pattern.size()) < want; ++tries) {
        auto u = static_cast<Vertex>(rng() % k);
        auto v = static_cast<Vertex>(rng() % k);
        if (u == v)
            continue;
        tnt::Edge e{std::min(u, v), std::max(u, v)};
        if (std::find(pattern.begin(), pattern.end(), e) == pattern.end())
            pattern.push_back(e);
    }
    // Relabel the touched vertices to 0..k'-1.
    std::vector<int> relabel(k, -1);
    for (auto [u, v] : pattern)
        relabel[u] = relabel[v] = 0;
    int kk = 0;
    for (int v = 0; v < k; ++v)
        if (relabel[v] == 0)
            relabel[v] = kk++;
    for (auto& [u, v] : pattern) {
        u = static_cast<Vertex>(relabel[u]);
        v = static_cast<Vertex>(relabel[v]);
    }
    return {tnt::Hypergraph(n, r, edges), kk, pattern};
}

} // namespace oracle
