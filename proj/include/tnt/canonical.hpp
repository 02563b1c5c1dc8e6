#pragma once

#include <compare>
#include <string>
#include <vector>

#include "tnt/graph.hpp"

namespace tnt {

/// Isomorphism-invariant byte string: the graph6 encoding of the canonically
/// relabelled graph. Equal forms <=> isomorphic graphs.
struct CanonicalForm {
    std::string bytes;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
    std::vector<Vertex> relabel; ///< relabel[v] is v's position in the canonical graph.
    Graph graph;                 ///< g.permuted(relabel).
};

/// Individualisation-refinement search over vertex orderings. Each node
/// refines to an equitable ordered partition; the leaf maximising
/// (refinement trace, relabelled adjacency rows) wins. Subtrees are pruned
/// when their trace already loses, and by orbits of automorphisms discovered
/// at equal leaves.
CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);

/// Plain backtracking isomorphism test, independent of canonical_labeling.
bool are_isomorphic(const Graph& g, const Graph& h);

} // namespace tnt
