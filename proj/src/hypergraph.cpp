#include "tnt/hypergraph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <random>
#include <sstream>

#include "tnt/combinatorics.hpp"
#include "tnt/graph_io.hpp"

namespace tnt {

Hypergraph::Hypergraph(int n, int r, std::vector<VertexSet> edges) : n_(n), r_(r), edges_(std::move(edges))
{
    if (n < 0 || n > kMaxVertices)
        throw OrderOutOfRange("hypergraph order " + std::to_string(n) + " outside [0, 64]");
    if (r < 1)
        throw InputError("uniformity must be positive");
    std::vector<VertexSet> sorted = edges_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (set_size(sorted[i]) != r)
            throw InputError("hyperedge with " + std::to_string(set_size(sorted[i])) + " vertices in a " +
                             std::to_string(r) + "-uniform hypergraph");
        if ((sorted[i] & ~prefix_mask(n)) != 0)
            throw VertexOutOfRange("hyperedge vertex outside [0, " + std::to_string(n) + ")");
        if (i > 0 && sorted[i] == sorted[i - 1])
            throw InputError("duplicate hyperedge");
    }
}

Hypergraph Hypergraph::from_lists(int n, int r, const std::vector<std::vector<Vertex>>& edges)
{
    std::vector<VertexSet> masks;
    masks.reserve(edges.size());
    for (const auto& e : edges) {
        VertexSet mask = 0;
        for (Vertex v : e) {
            if (v < 0 || v >= n)
                throw VertexOutOfRange("hyperedge vertex " + std::to_string(v) + " outside [0, " + std::to_string(n) +
                                       ")");
            if (contains(mask, v))
                throw InputError("repeated vertex " + std::to_string(v) + " in a hyperedge");
            mask |= singleton(v);
        }
        masks.push_back(mask);
    }
    return Hypergraph(n, r, std::move(masks));
}

Hypergraph Hypergraph::with_edge(VertexSet e) const
{
    auto edges = edges_;
    edges.push_back(e);
    return Hypergraph(n_, r_, std::move(edges));
}

bool is_linear(const Hypergraph& h)
{
    const auto& e = h.edges();
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            if (set_size(e[i] & e[j]) > 1)
                return false;
    return true;
}

std::optional<int> berge_girth(const Hypergraph& h)
{
    if (!is_linear(h))
        return 2;
    // Shortest cycle of the vertex/edge incidence graph, halved.
    const int n = h.order();
    const int total = n + static_cast<int>(h.edge_count());
    std::vector<std::vector<int>> adj(total);
    for (std::size_t j = 0; j < h.edge_count(); ++j)
        for_each_vertex(h.edge(j), [&](Vertex v) {
            adj[v].push_back(n + static_cast<int>(j));
            adj[n + j].push_back(v);
        });
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(total), parent(total);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[root] = 0;
        parent[root] = -1;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            if (2 * dist[x] + 1 >= best)
                break;
            for (int y : adj[x]) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if (y != parent[x]) {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max())
        return std::nullopt;
    return best / 2;
}

namespace {

// Backtracking over images of pattern vertices. Each node keeps a matching
// of the fully mapped pattern edges into distinct hyperedges containing
// their images; in expansion mode the leaf additionally assigns hyperedges
// subject to the pairwise intersection rule.
class BergeSearch {
public:
    BergeSearch(const Hypergraph& h, const Graph& p, BergeMode mode) : h_(h), p_(p), mode_(mode)
    {
        const int k = p.order();
        link_.assign(h.order(), 0);
        load_.assign(h.order(), 0);
        for (VertexSet e : h.edges())
            for_each_vertex(e, [&](Vertex v) {
                link_[v] |= e & ~singleton(v);
                ++load_[v];
            });
        // Highest degree first, then always the vertex with most placed
        // neighbours so adjacency constraints bite early.
        VertexSet placed = 0;
        while (static_cast<int>(order_.size()) < k) {
            Vertex best = -1;
            auto key = [&](Vertex u) { return std::pair{set_size(p.neighbors(u) & placed), p.degree(u)}; };
            for (Vertex u = 0; u < k; ++u)
                if (!contains(placed, u) && (best < 0 || key(u) > key(best)))
                    best = u;
            order_.push_back(best);
            placed |= singleton(best);
        }
        closes_.assign(k, {});
        VertexSet before = 0;
        for (Vertex u : order_) {
            for_each_vertex(p.neighbors(u) & before, [&](Vertex w) {
                closes_[u].push_back(static_cast<int>(pattern_edges_.size()));
                pattern_edges_.emplace_back(w, u);
            });
            before |= singleton(u);
        }
        image_.assign(k, -1);
    }

    bool run()
    {
        if (p_.order() > h_.order() || pattern_edges_.size() > h_.edge_count())
            return false;
        return place(0);
    }

private:
    bool place(std::size_t i)
    {
        if (i == order_.size())
            return mode_ == BergeMode::berge || assign_expansion();
        const Vertex u = order_[i];
        VertexSet candidates = prefix_mask(h_.order()) & ~used_;
        for_each_vertex(p_.neighbors(u), [&](Vertex w) {
            if (image_[w] >= 0)
                candidates &= link_[image_[w]];
        });
        const std::size_t active = active_edges(i + 1);
        for (Vertex x : members(candidates)) {
            if (load_[x] < p_.degree(u))
                continue;
            image_[u] = x;
            used_ |= singleton(x);
            if (matchable(active) && place(i + 1))
                return true;
            used_ &= ~singleton(x);
            image_[u] = -1;
        }
        return false;
    }

    // Pattern edges are stored in placement order, so the first `count`
    // have both endpoints among the first `placed` vertices.
    std::size_t active_edges(std::size_t placed) const
    {
        std::size_t count = 0;
        for (std::size_t j = 0; j < placed; ++j)
            count += closes_[order_[j]].size();
        return count;
    }

    VertexSet image_of(std::size_t e) const
    {
        return singleton(image_[pattern_edges_[e].first]) | singleton(image_[pattern_edges_[e].second]);
    }

    bool matchable(std::size_t active)
    {
        std::vector<std::vector<int>> options(active);
        for (std::size_t e = 0; e < active; ++e) {
            VertexSet need = image_of(e);
            for (std::size_t j = 0; j < h_.edge_count(); ++j)
                if ((h_.edge(j) & need) == need)
                    options[e].push_back(static_cast<int>(j));
            if (options[e].empty())
                return false;
        }
        std::vector<int> owner(h_.edge_count(), -1);
        for (std::size_t e = 0; e < active; ++e) {
            std::vector<char> seen(h_.edge_count(), 0);
            if (!augment(static_cast<int>(e), options, owner, seen))
                return false;
        }
        return true;
    }

    static bool augment(int e, const std::vector<std::vector<int>>& options, std::vector<int>& owner,
                        std::vector<char>& seen)
    {
        for (int j : options[e]) {
            if (seen[j])
                continue;
            seen[j] = 1;
            if (owner[j] < 0 || augment(owner[j], options, owner, seen)) {
                owner[j] = e;
                return true;
            }
        }
        return false;
    }

    bool assign_expansion()
    {
        const VertexSet core = used_;
        std::vector<std::vector<VertexSet>> options(pattern_edges_.size());
        for (std::size_t e = 0; e < pattern_edges_.size(); ++e) {
            VertexSet need = image_of(e);
            for (VertexSet f : h_.edges())
                if ((f & core) == need)
                    options[e].push_back(f);
            if (options[e].empty())
                return false;
        }
        std::vector<VertexSet> chosen;
        auto walk = [&](auto&& self, std::size_t e) -> bool {
            if (e == pattern_edges_.size())
                return true;
            for (VertexSet f : options[e]) {
                bool ok = true;
                for (std::size_t d = 0; d < chosen.size() && ok; ++d)
                    ok = (chosen[d] & f) == (image_of(d) & image_of(e));
                if (!ok)
                    continue;
                chosen.push_back(f);
                if (self(self, e + 1))
                    return true;
                chosen.pop_back();
            }
            return false;
        };
        return walk(walk, 0);
    }

    const Hypergraph& h_;
    const Graph& p_;
    BergeMode mode_;
    std::vector<VertexSet> link_;
    std::vector<int> load_;
    std::vector<Vertex> order_;
    std::vector<std::vector<int>> closes_;
    std::vector<Edge> pattern_edges_;
    std::vector<Vertex> image_;
    VertexSet used_ = 0;
};

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

VertexSet random_subset(std::mt19937_64& rng, int n, int r)
{
    std::vector<Vertex> pool(n);
    for (int i = 0; i < n; ++i)
        pool[i] = i;
    VertexSet out = 0;
    for (int i = 0; i < r; ++i) {
        auto j = i + static_cast<int>(below(rng, static_cast<std::uint64_t>(n - i)));
        std::swap(pool[i], pool[j]);
        out |= singleton(pool[i]);
    }
    return out;
}

} // namespace

bool contains_berge(const Hypergraph& h, const Graph& pattern, BergeMode mode)
{
    for (Vertex v = 0; v < pattern.order(); ++v)
        if (pattern.degree(v) == 0)
            throw InputError("Berge pattern has an isolated vertex");
    return BergeSearch(h, pattern, mode).run();
}

bool contains_berge(const Hypergraph& h, const BergeQuery& q)
{
    return contains_berge(h, q.pattern.to_graph(), q.mode);
}

Hypergraph generate_girth5_linear(int n, int r, std::uint64_t seed, std::optional<std::size_t> target_m)
{
    if (r < 2 || n < r || n > kMaxVertices)
        throw InputError("generate_girth5_linear needs 2 <= r <= n <= 64, got n = " + std::to_string(n) +
                         ", r = " + std::to_string(r));
    constexpr int kPatience = 100'000;
    std::mt19937_64 rng(seed);
    std::vector<VertexSet> edges;
    // link[v]: vertices sharing an edge with v.
    std::vector<VertexSet> link(n, 0);
    int failures = 0;
    while (failures < kPatience && (!target_m || edges.size() < *target_m)) {
        VertexSet e = random_subset(rng, n, r);
        // The new edge closes a Berge cycle of length <= 4 (or breaks
        // linearity) iff two of its vertices are within distance 3.
        bool ok = true;
        for_each_vertex(e, [&](Vertex x) {
            if (!ok)
                return;
            VertexSet ball = singleton(x);
            for (int step = 0; step < 3; ++step) {
                VertexSet next = ball;
                for_each_vertex(ball, [&](Vertex y) { next |= link[y]; });
                ball = next;
            }
            ok = (ball & e) == singleton(x);
        });
        if (!ok) {
            ++failures;
            continue;
        }
        failures = 0;
        edges.push_back(e);
        for_each_vertex(e, [&](Vertex v) { link[v] |= e & ~singleton(v); });
    }
    return Hypergraph(n, r, std::move(edges));
}

Graph place_bipartite(const Hypergraph& h, int a, int b, PlacementRule rule, std::uint64_t seed)
{
    if (a < 1 || b < 1 || a + b != h.uniformity())
        throw InputError("place_bipartite needs a + b = r = " + std::to_string(h.uniformity()));
    std::mt19937_64 rng(seed);
    std::vector<VertexSet> rows(h.order(), 0);
    for (VertexSet e : h.edges()) {
        std::vector<Vertex> vs = members(e);
        if (rule == PlacementRule::seeded_random)
            for (int i = 0; i < a; ++i)
                std::swap(vs[i], vs[i + below(rng, vs.size() - i)]);
        VertexSet small = 0;
        for (int i = 0; i < a; ++i)
            small |= singleton(vs[i]);
        VertexSet large = e & ~small;
        for_each_vertex(small, [&](Vertex v) { rows[v] |= large; });
        for_each_vertex(large, [&](Vertex v) { rows[v] |= small; });
    }
    return Graph::from_rows(h.order(), rows);
}

long placement_threshold(int s, int p, int a, int b, BergeMode mode)
{
    const long w = a + b;
    const long pairs = static_cast<long>(binomial(s, 2));
    if (mode == BergeMode::berge) {
        long power = 1;
        for (int i = 0; i < s; ++i)
            power *= w - 1;
        return (w - 2) * pairs + power * p;
    }
    return static_cast<long>(p - 1) * s * (s - 1) * (w - 2) * (w - 2) + (w - 2) * pairs + 1;
}

PlacementReport check_placement_premises(const Hypergraph& h, int s, int p, int a, int b, BergeMode mode,
                                         PlacementRule rule)
{
    if (!(2 <= s && s < a && a <= b && p >= s))
        throw InputError("check_placement_premises needs 2 <= s < a <= b and p >= s");
    if (a + b != h.uniformity())
        throw InputError("check_placement_premises needs a + b = r");
    PlacementReport out;
    out.linear = is_linear(h);
    out.pattern_absent = !contains_berge(h, MultipartitePattern::bipartite(s, p).to_graph(), mode);
    out.premises_hold = out.linear && out.pattern_absent;
    out.t0 = placement_threshold(s, p, a, b, mode);
    Graph g = place_bipartite(h, a, b, rule);
    out.placed_free = out.t0 > h.order() || !contains_complete_bipartite(g, s, static_cast<int>(out.t0));
    return out;
}

Hypergraph read_hypergraph(std::istream& in)
{
    std::string line;
    int line_no = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            auto first = line.find_first_not_of(" \t\r");
            if (first != std::string::npos && line[first] != '#')
                return true;
        }
        return false;
    };
    if (!next_line())
        throw ParseError("hypergraph: missing 'r n m' header");
    std::istringstream header(line);
    int r = 0;
    int n = 0;
    long m = 0;
    std::string extra;
    if (!(header >> r >> n >> m) || (header >> extra) || r < 1 || n < 0 || m < 0)
        throw ParseError("hypergraph: bad header on line " + std::to_string(line_no));
    std::vector<std::vector<Vertex>> edges;
    for (long i = 0; i < m; ++i) {
        if (!next_line())
            throw ParseError("hypergraph: expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        std::istringstream row(line);
        std::vector<Vertex> e;
        Vertex v = 0;
        while (row >> v)
            e.push_back(v);
        if (!row.eof() || static_cast<int>(e.size()) != r)
            throw ParseError("hypergraph: line " + std::to_string(line_no) + " needs " + std::to_string(r) +
                             " vertex indices");
        edges.push_back(std::move(e));
    }
    try {
        return Hypergraph::from_lists(n, r, edges);
    } catch (const ParseError&) {
        throw;
    } catch (const InputError& err) {
        throw ParseError(std::string("hypergraph: ") + err.what());
    }
}

void write_hypergraph(std::ostream& out, const Hypergraph& h)
{
    out << h.uniformity() << ' ' << h.order() << ' ' << h.edge_count() << '\n';
    for (VertexSet e : h.edges()) {
        const char* sep = "";
        for_each_vertex(e, [&](Vertex v) {
            out << sep << v;
            sep = " ";
        });
        out << '\n';
    }
}

namespace named {

Hypergraph fano_plane()
{
    return Hypergraph::from_lists(7, 3, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

} // namespace named

} // namespace tnt
