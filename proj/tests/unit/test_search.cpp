#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "tnt/canonical.hpp"
#include "tnt/constructions.hpp"
#include "tnt/counting.hpp"
#include "tnt/graph_io.hpp"
#include "tnt/search.hpp"
#include "tnt/serialize.hpp"

using namespace tnt;

namespace {

MultipartitePattern kab(int a, int b) { return MultipartitePattern::bipartite(a, b); }

// All labelled graphs on n vertices avoiding K_{s,t}, collapsed to canonical
// forms.
std::set<std::string> naive_free_classes(int n, int s, int t)
{
    std::set<std::string> out;
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
        Graph g = oracle::graph_from_bits(n, bits);
        if (!oracle::contains_kst(g, s, t))
            out.insert(canonical_form(g).bytes);
    }
    return out;
}

// ex(n, H, F) and its attainers over every labelled graph.
std::pair<Count, std::set<std::string>> naive_extremal(int n, const std::vector<int>& h, int s, int t)
{
    Count best = 0;
    std::set<std::string> attainers;
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
        Graph g = oracle::graph_from_bits(n, bits);
        if (oracle::contains_kst(g, s, t))
            continue;
        Count c = oracle::count_copies(g, h);
        if (c > best) {
            best = c;
            attainers.clear();
        }
        if (c == best)
            attainers.insert(canonical_form(g).bytes);
    }
    return {best, attainers};
}

} // namespace

TEST_CASE("exhaustive search examples")
{
    CHECK(exhaustive_max(5, kab(1, 1), kab(1, 3)).value == 5);

    SearchResult r = exhaustive_max(8, kab(2, 2), kab(1, 3));
    CHECK(r.value == 2);
    CHECK(r.exhaustive);
    Graph two_c4 = named::cycle(4).disjoint_union(named::cycle(4));
    CHECK(std::find(r.certificates.begin(), r.certificates.end(), canonical_form(two_c4).bytes) !=
          r.certificates.end());

    SearchResult paw = exhaustive_max(4, kab(1, 2), kab(2, 2));
    CHECK(paw.value == 5);
    Graph expected = make_graph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
    CHECK(paw.certificates == std::vector<std::string>{canonical_form(expected).bytes});

    CHECK(exhaustive_max(3, kab(1, 1), kab(1, 2)).value == 1);
}

TEST_CASE("exhaustive search input errors")
{
    CHECK_THROWS_AS(exhaustive_max(17, kab(1, 1), kab(1, 2)), SearchCapError);
    CHECK_THROWS_AS(exhaustive_max(14, kab(1, 1), kab(1, 2)), SearchCapError);
    CHECK_THROWS_AS(exhaustive_max(3, kab(2, 2), kab(1, 3)), InputError);
    // A forbidden pattern larger than n simply never appears.
    CHECK(exhaustive_max(4, kab(1, 1), kab(3, 3)).value == 6);
}

TEST_CASE("F-free levels match the labelled brute force up to 6 vertices")
{
    for (auto [s, t] : {std::pair{1, 3}, {2, 2}}) {
        auto levels = f_free_levels(6, kab(s, t));
        REQUIRE(levels.size() == 6);
        for (int n = 1; n <= 6; ++n) {
            auto naive = naive_free_classes(n, s, t);
            std::set<std::string> found(levels[n - 1].begin(), levels[n - 1].end());
            CHECK(found.size() == levels[n - 1].size());
            CHECK(found == naive);
        }
    }
}

TEST_CASE("extremal values and graphs match the labelled brute force")
{
    struct Case {
        int n;
        std::vector<int> h;
        int s, t;
    };
    for (const Case& c : {Case{5, {1, 1}, 1, 3}, Case{4, {1, 2}, 2, 2}, Case{3, {1, 1}, 1, 2}, Case{6, {1, 2}, 2, 2},
                          Case{6, {2, 2}, 1, 3}, Case{6, {1, 3}, 2, 2}, Case{5, {1, 1, 1}, 2, 2},
                          Case{6, {1, 4}, 2, 3}}) {
        auto [value, attainers] = naive_extremal(c.n, c.h, c.s, c.t);
        MultipartitePattern h(c.h);
        SearchResult r = exhaustive_max(c.n, h, kab(c.s, c.t));
        CHECK(r.value == value);
        auto listed = enumerate_extremal(c.n, h, kab(c.s, c.t));
        CHECK(std::set<std::string>(listed.begin(), listed.end()) == attainers);
        CHECK(std::set<std::string>(r.certificates.begin(), r.certificates.end()) == attainers);
    }
}

TEST_CASE("certificates are sound")
{
    for (auto [h, f] : {std::pair{kab(1, 2), kab(2, 2)}, {kab(2, 2), kab(1, 3)}, {kab(1, 3), kab(2, 3)},
                        {MultipartitePattern({1, 1, 1}), kab(2, 2)}}) {
        SearchResult r = exhaustive_max(8, h, f);
        CHECK(certificates_valid(r));
        for (const auto& cert : r.certificates) {
            Graph g = graph6_decode(cert);
            CHECK(g.order() == 8);
            CHECK(count_multipartite(g, h) == r.value);
            CHECK_FALSE(contains_multipartite(g, f));
        }
        SearchResult broken = r;
        broken.value += 1;
        CHECK_FALSE(certificates_valid(broken));
    }
}

TEST_CASE("values are monotone in n and respect the bounds")
{
    for (auto [a, b, s, t] : {std::tuple{1, 2, 2, 2}, {1, 3, 2, 2}, {2, 2, 1, 3}, {2, 3, 2, 4}, {2, 2, 2, 3}}) {
        Count prev = 0;
        for (int n = a + b; n <= 8; ++n) {
            Count v = exhaustive_max(n, kab(a, b), kab(s, t)).value;
            CHECK(v >= prev);
            prev = v;
            if (s <= a && b <= t)
                CHECK(v <= bound_gemevi(n, a, b, s, t));
            if (a < s && s <= b)
                CHECK(v <= bound_smallside(n, a, b, s, t));
            if (s == 1 && b < t)
                CHECK(v <= bound_star_per_vertex(n, a, b, t));
        }
    }
}

TEST_CASE("worker count does not change exhaustive results")
{
    SearchOptions one;
    SearchOptions many;
    many.workers = 4;
    for (auto [h, f] : {std::pair{kab(2, 2), kab(1, 3)}, {kab(1, 3), kab(2, 2)}}) {
        SearchResult a = exhaustive_max(8, h, f, one);
        SearchResult b = exhaustive_max(8, h, f, many);
        CHECK(a.value == b.value);
        CHECK(a.certificates == b.certificates);
    }
    CHECK(f_free_levels(7, kab(2, 2), 1) == f_free_levels(7, kab(2, 2), 3));
}

TEST_CASE("bound pruning keeps the exact value")
{
    SearchOptions pruned;
    pruned.prune_bounds = true;
    for (auto [h, f, n] : {std::tuple{kab(1, 2), kab(2, 2), 8}, {kab(2, 2), kab(1, 3), 9}, {kab(1, 3), kab(2, 3), 8}}) {
        SearchResult exact = exhaustive_max(n, h, f);
        SearchResult fast = exhaustive_max(n, h, f, pruned);
        CHECK(fast.value == exact.value);
        CHECK(certificates_valid(fast));
    }
}

TEST_CASE("heuristic search")
{
    SearchOptions opts;
    opts.engine = Engine::heuristic;
    opts.budget = 10'000;
    int hits = 0;
    // The friendship graph plus one vertex joined to the centre.
    const Count windmill = 189;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        opts.seed = seed;
        SearchResult r = run_search(20, kab(1, 2), kab(2, 2), opts);
        CHECK_FALSE(r.exhaustive);
        CHECK(certificates_valid(r));
        CHECK(r.value <= bound_smallside(20, 1, 2, 2, 2));
        hits += r.value >= windmill;
    }
    CHECK(hits >= 8);

    opts.seed = 7;
    SearchResult a = heuristic_max(20, kab(1, 2), kab(2, 2), opts);
    SearchResult b = heuristic_max(20, kab(1, 2), kab(2, 2), opts);
    CHECK(a.value == b.value);
    CHECK(a.certificates == b.certificates);

    // F inside H: no copy of H can survive.
    CHECK(heuristic_max(10, kab(2, 3), kab(2, 2), opts).value == 0);

    opts.budget = 3000;
    for (auto [h, f] : {std::pair{kab(2, 2), kab(1, 3)}, {kab(1, 2), kab(2, 2)}}) {
        for (int n = 5; n <= 8; ++n)
            CHECK(heuristic_max(n, h, f, opts).value <= exhaustive_max(n, h, f).value);
    }
}

TEST_CASE("search results serialize")
{
    SearchResult r = exhaustive_max(6, kab(1, 2), kab(2, 2));
    Json j = r;
    for (const char* key : {"n", "H", "F", "value", "exhaustive", "certificates", "engine", "runtime_ms", "seed"})
        CHECK(j.contains(key));
    SearchResult back = j.get<SearchResult>();
    CHECK(back.value == r.value);
    CHECK(back.certificates == r.certificates);
    CHECK(back.h == r.h);
    CHECK(back.f == r.f);
    CHECK(engine_from_string("heuristic") == Engine::heuristic);
    CHECK_THROWS_AS(engine_from_string("sat"), InputError);
}
