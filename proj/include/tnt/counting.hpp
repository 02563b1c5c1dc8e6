#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tnt/combinatorics.hpp"
#include "tnt/graph.hpp"
#include "tnt/pattern.hpp"

namespace tnt {

// Copies are unlabelled subgraphs identified by their edge sets. A copy of
// K_{a,a} is counted once, and copies of K_{a_1,...,a_r} once per unordered
// family of parts.

/// Copies of K_{a,b} (1 <= a <= b): sum over a-sets A of C(|N(A)|, b),
/// halved when a == b. Work is split over the first vertex of A; the result
/// does not depend on `workers`.
Count count_bipartite(const Graph& g, int a, int b, unsigned workers = 1);

/// Copies of any complete multipartite pattern.
Count count_multipartite(const Graph& g, const MultipartitePattern& p);

/// Sum over v of C(deg v, b), b >= 2.
Count count_stars(const Graph& g, int b);

/// Parts of one copy of p in g (in pattern order), if any.
std::optional<std::vector<VertexSet>> find_multipartite(const Graph& g, const MultipartitePattern& p);
bool contains_multipartite(const Graph& g, const MultipartitePattern& p);
/// Copy containment given that g minus v is already p-free.
bool contains_multipartite_at(const Graph& g, const MultipartitePattern& p, Vertex v);

struct NeighborHistogram {
    int subset_size = 0;
    std::map<int, Count> histogram; ///< |common neighbourhood| -> number of subsets
};

NeighborHistogram neighbor_histogram(const Graph& g, int k);

/// b-sets split by common-neighbourhood size: exactly s-1 (good), at most
/// s-2 (bad), at least s (over).
struct BSetClassification {
    int b = 0;
    int s = 0;
    Count good = 0;
    Count bad = 0;
    Count over = 0;
};

BSetClassification classify_bsets(const Graph& g, int b, int s);

// Upper bounds. All are floors of exact rationals; values that do not fit
// in 64 bits saturate to the maximum Count, which still bounds every
// representable count.

/// s <= a <= b <= t: C(n,s) C(t-1,a) C(t-1-s,b-s) / C(b,s).
Count bound_gemevi(long n, int a, int b, int s, int t);
/// a < s <= b: C(t-1,a) C(n,b), or C(s-1,a) C(n,b) when t <= b.
Count bound_smallside(long n, int a, int b, int s, int t);
/// a <= b < t, forbidden K_{1,t}: n/(a+b) (C(t-1,a)C(t-1,b-1) + C(t-1,b)C(t-1,a-1))
/// for a < b; n/(2a) C(t-1,a) C(t-1,a-1) for a == b.
Count bound_star_per_vertex(long n, int a, int b, int t);

/// count_bipartite(K_{m,k}, a, b) in closed form.
Count closed_count_biclique_host(int m, int k, int a, int b);

} // namespace tnt
