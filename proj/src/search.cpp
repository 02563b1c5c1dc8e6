#include "tnt/search.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <thread>
#include <unordered_set>

#include "tnt/canonical.hpp"
#include "tnt/counting.hpp"
#include "tnt/graph_io.hpp"

namespace tnt {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void check_exhaustive(int n, const SearchOptions& opts)
{
    if (n < 1)
        throw InputError("search needs n >= 1");
    if (n > kHardCap)
        throw SearchCapError("exhaustive search refused: n = " + std::to_string(n) + " exceeds the hard cap " +
                             std::to_string(kHardCap));
    if (n > kAdvisoryCap && !opts.force)
        throw SearchCapError("exhaustive search at n = " + std::to_string(n) + " exceeds the advisory cap " +
                             std::to_string(kAdvisoryCap) + "; pass force to run anyway");
    if (opts.workers < 1)
        throw InputError("workers must be at least 1");
}

// Runs body(w) for w in [0, workers) on separate threads (inline for one).
template <class Body>
void fan_out(unsigned workers, Body&& body)
{
    if (workers <= 1) {
        body(0U);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&body, w] { body(w); });
    for (auto& t : pool)
        t.join();
}

// Children of `parent` (k vertices): one per neighbourhood mask of the new
// vertex k, keeping those still F-free.
template <class Visit>
void for_each_child(const Graph& parent, const MultipartitePattern& f, Visit&& visit)
{
    const int k = parent.order();
    const int smallest = f.part(0);
    for (VertexSet mask = 0; mask < (VertexSet{1} << k); ++mask) {
        Graph child = parent.with_vertex(mask);
        // A vertex of degree below the smallest part lies in no copy of F.
        if (set_size(mask) >= smallest && contains_multipartite_at(child, f, k))
            continue;
        visit(child);
    }
}

std::vector<std::string> merge_shards(std::vector<std::unordered_set<std::string>>& shards)
{
    std::vector<std::string> out;
    for (auto& s : shards) {
        out.insert(out.end(), s.begin(), s.end());
        s.clear();
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::string> expand_level(const std::vector<std::string>& level, const MultipartitePattern& f,
                                      unsigned workers)
{
    std::vector<std::unordered_set<std::string>> shards(workers);
    fan_out(workers, [&](unsigned w) {
        for (std::size_t i = w; i < level.size(); i += workers)
            for_each_child(graph6_decode(level[i]), f,
                           [&](const Graph& child) { shards[w].insert(canonical_form(child).bytes); });
    });
    return merge_shards(shards);
}

// Upper bound on the copies of H through one vertex of an n-vertex graph.
Count per_vertex_increment(int n, const MultipartitePattern& h)
{
    Count whole = count_multipartite(Graph::complete(n), h);
    return checked_mul(whole, static_cast<Count>(h.vertex_count())) / static_cast<Count>(n) + 1;
}

struct Extremal {
    Count value = 0;
    std::vector<std::string> certificates;
};

// Expands the level below n and keeps only children attaining the maximum.
Extremal final_level(int n, const MultipartitePattern& h, const MultipartitePattern& f, const SearchOptions& opts)
{
    std::vector<std::string> level{graph6_encode(Graph::empty(1))};
    if (n == 1) {
        Graph g = Graph::empty(1);
        return {count_multipartite(g, h), {canonical_form(g).bytes}};
    }

    Count incumbent = 0;
    Count step = 0;
    if (opts.prune_bounds) {
        SearchOptions quick = opts;
        quick.budget = std::min<long>(opts.budget, 2000);
        incumbent = heuristic_max(n, h, f, quick).value;
        step = per_vertex_increment(n, h);
    }
    auto hopeless = [&](const Graph& g) {
        if (!opts.prune_bounds)
            return false;
        Count rest = checked_mul(step, static_cast<Count>(n - g.order()));
        return checked_add(count_multipartite(g, h), rest) < incumbent;
    };

    for (int k = 1; k + 1 < n; ++k) {
        level = expand_level(level, f, opts.workers);
        if (opts.prune_bounds)
            std::erase_if(level, [&](const std::string& s) { return hopeless(graph6_decode(s)); });
    }

    struct Shard {
        Count value = 0;
        bool any = false;
        std::unordered_set<std::string> best;
    };
    std::vector<Shard> shards(opts.workers);
    fan_out(opts.workers, [&](unsigned w) {
        Shard& mine = shards[w];
        for (std::size_t i = w; i < level.size(); i += opts.workers)
            for_each_child(graph6_decode(level[i]), f, [&](const Graph& child) {
                Count c = count_multipartite(child, h);
                if (mine.any && c < mine.value)
                    return;
                if (!mine.any || c > mine.value) {
                    mine.any = true;
                    mine.value = c;
                    mine.best.clear();
                }
                if (opts.collect_certificates)
                    mine.best.insert(canonical_form(child).bytes);
            });
    });

    Extremal out;
    for (const auto& s : shards)
        if (s.any)
            out.value = std::max(out.value, s.value);
    std::vector<std::unordered_set<std::string>> winners;
    for (auto& s : shards)
        if (s.any && s.value == out.value)
            winners.push_back(std::move(s.best));
    out.certificates = merge_shards(winners);
    return out;
}

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

bool stays_free(const Graph& g, const MultipartitePattern& f, Vertex u)
{
    return !contains_multipartite_at(g, f, u);
}

} // namespace

std::string to_string(Engine e)
{
    return e == Engine::exhaustive ? "exhaustive" : "heuristic";
}

Engine engine_from_string(const std::string& name)
{
    if (name == "exhaustive")
        return Engine::exhaustive;
    if (name == "heuristic")
        return Engine::heuristic;
    throw InputError("unknown engine '" + name + "' (expected exhaustive or heuristic)");
}

std::vector<std::vector<std::string>> f_free_levels(int n, const MultipartitePattern& f, unsigned workers)
{
    SearchOptions opts;
    opts.workers = workers;
    check_exhaustive(n, opts);
    std::vector<std::vector<std::string>> levels;
    levels.push_back({graph6_encode(Graph::empty(1))});
    while (static_cast<int>(levels.size()) < n)
        levels.push_back(expand_level(levels.back(), f, std::max(1U, workers)));
    return levels;
}

SearchResult exhaustive_max(int n, const MultipartitePattern& h, const MultipartitePattern& f,
                            const SearchOptions& opts)
{
    check_exhaustive(n, opts);
    if (h.vertex_count() > n)
        throw InputError("pattern " + h.label() + " has more than n = " + std::to_string(n) + " vertices");
    auto start = Clock::now();
    Extremal best = final_level(n, h, f, opts);
    SearchResult r;
    r.n = n;
    r.h = h;
    r.f = f;
    r.value = best.value;
    r.exhaustive = true;
    r.certificates = std::move(best.certificates);
    r.engine = Engine::exhaustive;
    r.seed = opts.seed;
    r.runtime_ms = elapsed_ms(start);
    return r;
}

std::vector<std::string> enumerate_extremal(int n, const MultipartitePattern& h, const MultipartitePattern& f,
                                            const SearchOptions& opts)
{
    SearchOptions all = opts;
    all.collect_certificates = true;
    return exhaustive_max(n, h, f, all).certificates;
}

SearchResult heuristic_max(int n, const MultipartitePattern& h, const MultipartitePattern& f,
                           const SearchOptions& opts)
{
    if (n < 1 || n > kMaxVertices)
        throw InputError("heuristic search needs 1 <= n <= 64");
    if (opts.budget < 1)
        throw InputError("heuristic search needs budget >= 1");
    auto start = Clock::now();
    std::mt19937_64 rng(opts.seed);

    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);

    auto try_add = [&](Graph& g, Edge e) {
        if (g.adjacent(e.first, e.second))
            return false;
        Graph next = g.with_edge(e.first, e.second);
        if (!stays_free(next, f, e.first))
            return false;
        g = next;
        return true;
    };
    auto saturate = [&](Graph& g, Edge banned) {
        std::shuffle(pairs.begin(), pairs.end(), rng);
        for (Edge e : pairs)
            if (e != banned)
                try_add(g, e);
    };

    // Adds, one at a time, the admissible edge with the largest resulting
    // count; ties go to the earliest pair in a fresh random order.
    auto greedy = [&](Graph& g, Edge banned) {
        for (;;) {
            std::shuffle(pairs.begin(), pairs.end(), rng);
            Graph best_next;
            Count best_count = 0;
            bool found = false;
            for (Edge e : pairs) {
                if (e == banned || g.adjacent(e.first, e.second))
                    continue;
                Graph next = g.with_edge(e.first, e.second);
                if (!stays_free(next, f, e.first))
                    continue;
                Count c = count_multipartite(next, h);
                if (!found || c > best_count) {
                    best_next = next;
                    best_count = c;
                    found = true;
                }
            }
            if (!found)
                return;
            g = best_next;
        }
    };

    const long restarts = std::max<long>(1, opts.budget / 2500);
    const long per_restart = std::max<long>(1, opts.budget / restarts);
    Graph best = Graph::empty(n);
    Count best_value = 0;
    bool have_best = false;
    for (long round = 0; round < restarts; ++round) {
        Graph g = Graph::empty(n);
        greedy(g, {-1, -1});
        Count value = count_multipartite(g, h);
        for (long it = 0; it < per_restart; ++it) {
            auto edges = g.edges();
            if (edges.empty())
                break;
            // Kick: drop one edge (two with some probability) and re-saturate
            // in random order; keep the move unless the count drops.
            Graph trial = g;
            Edge dropped = edges[below(rng, edges.size())];
            trial = trial.without_edge(dropped.first, dropped.second);
            if (edges.size() > 1 && below(rng, 4) == 0) {
                Edge extra = edges[below(rng, edges.size())];
                if (extra != dropped)
                    trial = trial.without_edge(extra.first, extra.second);
            }
            if (below(rng, 8) == 0)
                greedy(trial, dropped);
            else
                saturate(trial, dropped);
            Count c = count_multipartite(trial, h);
            if (c >= value) {
                g = trial;
                value = c;
            }
            if (!have_best || value > best_value) {
                best = g;
                best_value = value;
                have_best = true;
            }
        }
        if (!have_best || value > best_value) {
            best = g;
            best_value = value;
            have_best = true;
        }
    }

    SearchResult r;
    r.n = n;
    r.h = h;
    r.f = f;
    r.value = best_value;
    r.exhaustive = false;
    r.engine = Engine::heuristic;
    r.seed = opts.seed;
    r.certificates = {canonical_form(best).bytes};
    if (!certificates_valid(r))
        throw std::logic_error("heuristic certificate failed re-verification");
    r.runtime_ms = elapsed_ms(start);
    return r;
}

SearchResult run_search(int n, const MultipartitePattern& h, const MultipartitePattern& f, const SearchOptions& opts)
{
    return opts.engine == Engine::exhaustive ? exhaustive_max(n, h, f, opts) : heuristic_max(n, h, f, opts);
}

bool certificates_valid(const SearchResult& r)
{
    for (const auto& cert : r.certificates) {
        Graph g;
        try {
            g = graph6_decode(cert);
        } catch (const InputError&) {
            return false;
        }
        if (g.order() != r.n || contains_multipartite(g, r.f) || count_multipartite(g, r.h) != r.value)
            return false;
    }
    return true;
}

} // namespace tnt
