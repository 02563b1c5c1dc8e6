#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tnt/graph.hpp"
#include "tnt/pattern.hpp"

namespace tnt {

/// Raised when construction parameters cannot be satisfied; the message
/// names the violated precondition.
class ConstructionError : public InputError {
public:
    using InputError::InputError;
};

enum class Family {
    complete_bipartite,
    overline_split,
    split_plus_girth5,
    disjoint_bicliques,
    overline_plus_disjoint_bicliques,
    ka_join_blocks,
    ka_join_blocks_shifted,
    furedi,
    almost_regular_girth5,
    random_deletion,
    complete_multipartite,
};

std::string to_string(Family f);
/// Throws InputError for an unknown name.
Family family_from_string(const std::string& name);

/// A family tag plus positional parameters:
///   complete_bipartite              [m, k]        K_{m,k}
///   overline_split                  [s, n]
///   split_plus_girth5               [s, t, n]
///   disjoint_bicliques              [t, n]
///   overline_plus_disjoint_bicliques [s, p, q, n]
///   ka_join_blocks                  [a, b, n]
///   ka_join_blocks_shifted          [a, b, t, n]
///   furedi                          [q, t]
///   almost_regular_girth5           [n, d]
///   random_deletion                 [n]; patterns = {H, F}
///   complete_multipartite           part sizes
struct ConstructionSpec {
    Family family = Family::complete_bipartite;
    std::vector<int> params;
    std::vector<MultipartitePattern> patterns;
    std::optional<std::uint64_t> seed;

    friend bool operator==(const ConstructionSpec&, const ConstructionSpec&) = default;
};

/// Deterministic given (spec, seed).
Graph build(const ConstructionSpec& spec);

/// Parts first, in order: vertices [0, m) then [m, m + k).
Graph build_complete_bipartite(int m, int k);

/// s-1 hubs [0, s-1) forming a clique and joined to the independent set
/// [s-1, n).
Graph build_overline_split(int s, int n);

/// overline_split(s, n) plus an almost (t-1)-regular girth >= 5 graph on the
/// large side.
Graph build_split_plus_girth5(int s, int t, int n, std::uint64_t seed = 0);

/// floor(n / (2t-2)) copies of K_{t-1,t-1} followed by K_{floor(p/2), ceil(p/2)}
/// on the remaining p vertices.
Graph build_disjoint_bicliques(int t, int n);

/// overline_split(s, n) plus floor((n-s+1)/(p+q)) disjoint copies of K_{p,q}
/// packed from vertex s-1 upward.
Graph build_overline_plus_disjoint_bicliques(int s, int p, int q, int n);

/// K_{a, n-a} (join side [0, a)) plus floor((n-a)/b) disjoint copies of
/// K_{a, b-a} inside the large side.
Graph build_ka_join_blocks(int a, int b, int n);

/// K_{a, n-a} with, for q = floor((t-1)/2) and q' = ceil((t-1)/2), a copy of
/// K_{a-q', q} inside the join side and disjoint copies of K_{q', b-q} inside
/// the large side. For odd t this is K_{a-q,q'} / K_{q,b-q'}.
Graph build_ka_join_blocks_shifted(int a, int b, int t, int n);

struct FurediParams {
    int q = 0; ///< prime power
    int t = 0; ///< t - 1 divides q - 1
};

/// Vertices are the orbits of nonzero pairs of GF(q)^2 under scaling by the
/// order-(t-1) multiplicative subgroup H, numbered by their lexicographically
/// first representative; <a,b> ~ <x,y> iff ax + by lies in H.
Graph build_furedi(FurediParams params);

/// Smallest order for which build_girth5_regular supports degree d; above
/// 64 when the degree is unsupported.
int girth5_min(int d);

/// Girth >= 5, every vertex of degree d except the last vertex, which has
/// degree d-1 when n*d is odd. Uses cycles, a matching or the Petersen graph
/// where they apply, otherwise a seeded randomized edge-swap search.
Graph build_girth5_regular(int n, int d, std::uint64_t seed = 0);

/// Keeps each edge of K_n with probability n^{-(|V(F)|-2)/(|E(F)|-|E(H)|)} / 2,
/// then deletes the lowest edge of the first copy of F found until none remain.
Graph build_random_deletion(int n, const MultipartitePattern& h, const MultipartitePattern& f,
                            std::uint64_t seed);

/// Complete multipartite graph with the given part sizes, parts numbered in
/// the given order.
Graph build_complete_multipartite(const std::vector<int>& parts);

} // namespace tnt
