#include <doctest.h>

#include "oracles.hpp"
#include "tnt/counting.hpp"
#include "tnt/graph_io.hpp"
#include "tnt/search.hpp"

using namespace tnt;

TEST_CASE("count_bipartite examples")
{
    CHECK(count_bipartite(named::cycle(3), 1, 1) == 3);
    CHECK(count_bipartite(named::cycle(4), 2, 2) == 1);
    CHECK(count_bipartite(named::complete_bipartite(2, 6), 1, 2) == 36);
    CHECK(count_bipartite(named::complete_bipartite(3, 3), 2, 2) == 9);
}

TEST_CASE("count_multipartite examples")
{
    Graph k4 = graph6_decode("C~");
    CHECK(count_multipartite(k4, MultipartitePattern({1, 1, 1, 1})) == 1);
    CHECK(count_multipartite(k4, MultipartitePattern({1, 1, 2})) == 6);
    CHECK(count_multipartite(named::cycle(5), MultipartitePattern({1, 1, 1})) == 0);
    CHECK(count_multipartite(k4, MultipartitePattern({1, 1, 1})) == 4);
}

TEST_CASE("count_stars examples")
{
    CHECK(count_stars(named::star(3), 3) == 1);
    CHECK(count_stars(named::star(5), 2) == 10);
    CHECK(count_stars(named::wheel(5), 4) == 5);
}

TEST_CASE("neighbour histogram examples")
{
    auto c4 = neighbor_histogram(named::cycle(4), 2);
    CHECK(c4.histogram == std::map<int, Count>{{0, 4}, {2, 2}});
    CHECK(neighbor_histogram(named::cycle(3), 2).histogram == std::map<int, Count>{{1, 3}});
    CHECK(neighbor_histogram(named::complete_bipartite(2, 5), 2).histogram ==
          std::map<int, Count>{{0, 10}, {2, 10}, {5, 1}});
}

TEST_CASE("b-set classification examples")
{
    auto k25 = classify_bsets(named::complete_bipartite(2, 5), 3, 3);
    CHECK(k25.good == 10);
    CHECK(k25.bad == 25);
    CHECK(k25.over == 0);
    auto empty = classify_bsets(make_graph(5, {}), 2, 2);
    CHECK(empty.good == 0);
    CHECK(empty.bad == 10);
    CHECK(empty.over == 0);
    auto k5 = classify_bsets(graph6_decode("D~{"), 2, 4);
    CHECK(k5.good == 10);
    CHECK(k5.bad == 0);
    CHECK(k5.over == 0);
}

TEST_CASE("bound examples")
{
    CHECK(bound_gemevi(10, 2, 3, 2, 4) == 45);
    CHECK(bound_gemevi(9, 3, 3, 3, 3) == binomial(9, 3) * binomial(2, 3));
    CHECK(bound_gemevi(9, 2, 2, 2, 2) == binomial(9, 2) * binomial(1, 2));
    CHECK(bound_gemevi(9, 2, 2, 2, 4) == 36 * 3);
    CHECK(bound_smallside(8, 1, 3, 2, 2) == 56);
    CHECK(bound_smallside(8, 1, 4, 3, 3) == 140);
    CHECK(bound_star_per_vertex(8, 2, 2, 3) == 4);
    // floor(12/3 * (C(2,1)C(2,1) + C(2,2)C(2,0))) = 20
    CHECK(bound_star_per_vertex(12, 1, 2, 3) == 20);
    CHECK_THROWS_AS(bound_gemevi(10, 3, 2, 2, 4), InputError);
    CHECK_THROWS_AS(bound_smallside(10, 2, 3, 2, 4), InputError);
}

TEST_CASE("closed_count_biclique_host matches the generic counter")
{
    CHECK(closed_count_biclique_host(2, 2, 2, 2) == 1);
    CHECK(closed_count_biclique_host(2, 6, 1, 2) == 36);
    CHECK(closed_count_biclique_host(3, 5, 2, 3) == 40);
    for (int m = 1; m <= 8; ++m)
        for (int k = 1; k <= 8; ++k)
            for (int a = 1; a <= 4; ++a)
                for (int b = a; b <= 4; ++b)
                    REQUIRE(closed_count_biclique_host(m, k, a, b) ==
                            count_bipartite(named::complete_bipartite(m, k), a, b));
}

TEST_CASE("counting matches the brute force on 300 random graphs")
{
    const std::vector<std::vector<int>> patterns{{1, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 3}, {1, 4}, {3, 3},
                                                 {2, 4}, {1, 5}, {1, 1, 1}, {1, 1, 2}, {1, 2, 2}, {2, 2, 2},
                                                 {1, 1, 1, 1}, {1, 1, 1, 2}, {1, 1, 1, 1, 1}, {1, 1, 1, 1, 2}};
    std::mt19937_64 rng(300);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        Graph g = oracle::random_graph(n, 0.3 + 0.6 * static_cast<double>(rng() % 100) / 100.0, rng);
        for (const auto& parts : patterns) {
            int total = 0;
            for (int p : parts)
                total += p;
            if (total > n)
                continue;
            Count expected = oracle::count_copies(g, parts);
            REQUIRE(count_multipartite(g, MultipartitePattern(parts)) == expected);
            if (parts.size() == 2) {
                REQUIRE(count_bipartite(g, parts[0], parts[1]) == expected);
                REQUIRE(count_bipartite(g, parts[0], parts[1], 3) == expected);
            }
        }
    }
}

TEST_CASE("counting identities")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 12);
        Graph g = oracle::random_graph(n, 0.5, rng);
        CHECK(count_bipartite(g, 1, 1) == g.edge_count());
        for (int b = 2; b <= 4; ++b)
            CHECK(count_bipartite(g, 1, b) == count_stars(g, b));
        for (int k = 1; k <= std::min(n, 3); ++k) {
            auto h = neighbor_histogram(g, k);
            Count total = 0;
            for (auto [size, c] : h.histogram)
                total += c;
            CHECK(total == binomial(n, k));
        }
        for (int b = 1; b <= std::min(n, 4); ++b) {
            auto cls = classify_bsets(g, b, 2);
            CHECK(cls.good + cls.bad + cls.over == binomial(n, b));
        }
    }
}

TEST_CASE("adding an edge never lowers a count")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 4 + static_cast<int>(rng() % 8);
        Graph g = oracle::random_graph(n, 0.4, rng);
        Vertex u = static_cast<Vertex>(rng() % n);
        Vertex v = static_cast<Vertex>(rng() % n);
        if (u == v || g.adjacent(u, v))
            continue;
        Graph h = g.with_edge(u, v);
        for (auto [a, b] : {std::pair{1, 2}, {2, 2}, {2, 3}})
            CHECK(count_bipartite(h, a, b) >= count_bipartite(g, a, b));
    }
}

TEST_CASE("worker count does not change counts")
{
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = oracle::random_graph(24, 0.5, rng);
        Count one = count_bipartite(g, 2, 3, 1);
        CHECK(count_bipartite(g, 2, 3, 4) == one);
        CHECK(count_bipartite(g, 2, 3, 7) == one);
    }
}

TEST_CASE("over is empty for K_{s,t}-free graphs when b >= t")
{
    for (const auto& cert : f_free_levels(7, MultipartitePattern::bipartite(2, 2)).back()) {
        Graph g = graph6_decode(cert);
        CHECK(classify_bsets(g, 2, 2).over == 0);
        CHECK(classify_bsets(g, 3, 2).over == 0);
    }
}

// Bounds applied to every F-free graph up to isomorphism, n <= 7.
TEST_CASE("bounds are sound on all F-free graphs up to 7 vertices")
{
    struct Case {
        int s, t;
    };
    long violations = 0;
    long checked = 0;
    for (Case f : {Case{1, 2}, Case{1, 3}, Case{1, 4}, Case{2, 2}, Case{2, 3}, Case{2, 4}, Case{3, 3}}) {
        auto levels = f_free_levels(7, MultipartitePattern::bipartite(f.s, f.t));
        for (int n = 1; n <= 7; ++n) {
            for (const auto& cert : levels[n - 1]) {
                Graph g = graph6_decode(cert);
                for (int a = 1; a <= 4; ++a) {
                    for (int b = a; b <= 5; ++b) {
                        if (a + b > n)
                            continue;
                        Count c = count_bipartite(g, a, b);
                        if (f.s <= a && b <= f.t) {
                            ++checked;
                            violations += c > bound_gemevi(n, a, b, f.s, f.t);
                        }
                        if (a < f.s && f.s <= b) {
                            ++checked;
                            violations += c > bound_smallside(n, a, b, f.s, f.t);
                        }
                        if (f.s == 1 && b < f.t) {
                            ++checked;
                            violations += c > bound_star_per_vertex(n, a, b, f.t);
                        }
                    }
                }
            }
        }
    }
    CHECK(checked > 10000);
    CHECK(violations == 0);
}
