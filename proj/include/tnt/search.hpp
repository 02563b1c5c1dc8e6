#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tnt/combinatorics.hpp"
#include "tnt/graph.hpp"
#include "tnt/pattern.hpp"

namespace tnt {

enum class Engine { exhaustive, heuristic };

std::string to_string(Engine e);
/// Throws InputError for an unknown name.
Engine engine_from_string(const std::string& name);

/// Orders above kAdvisoryCap need `force`; above kHardCap are refused.
inline constexpr int kAdvisoryCap = 13;
inline constexpr int kHardCap = 16;

class SearchCapError : public InputError {
public:
    using InputError::InputError;
};

struct SearchOptions {
    Engine engine = Engine::exhaustive;
    unsigned workers = 1;
    long budget = 10'000; ///< heuristic iterations
    std::uint64_t seed = 0;
    bool collect_certificates = true;
    bool prune_bounds = false;
    bool force = false; ///< allow exhaustive runs above the advisory cap
};

struct SearchResult {
    int n = 0;
    MultipartitePattern h;
    MultipartitePattern f;
    Count value = 0;
    bool exhaustive = false;
    /// Canonical graph6 strings of graphs attaining `value`, sorted; one per
    /// isomorphism class (the heuristic reports its single best graph).
    std::vector<std::string> certificates;
    Engine engine = Engine::exhaustive;
    double runtime_ms = 0;
    std::uint64_t seed = 0;
};

/// Canonical graph6 strings of all F-free graphs on k vertices for
/// k = 1..n (entry k-1), each level sorted.
std::vector<std::vector<std::string>> f_free_levels(int n, const MultipartitePattern& f, unsigned workers = 1);

/// ex(n, H, F) by vertex augmentation with per-level isomorph rejection.
/// Throws SearchCapError above the caps and InputError when H has more than
/// n vertices.
SearchResult exhaustive_max(int n, const MultipartitePattern& h, const MultipartitePattern& f,
                            const SearchOptions& opts = {});

/// Canonical graph6 strings of every extremal graph, sorted.
std::vector<std::string> enumerate_extremal(int n, const MultipartitePattern& h, const MultipartitePattern& f,
                                            const SearchOptions& opts = {});

/// Seeded local search over F-free graphs; a certified lower bound.
SearchResult heuristic_max(int n, const MultipartitePattern& h, const MultipartitePattern& f,
                           const SearchOptions& opts = {});

/// Dispatches on opts.engine.
SearchResult run_search(int n, const MultipartitePattern& h, const MultipartitePattern& f,
                        const SearchOptions& opts = {});

/// True iff every certificate decodes to an n-vertex F-free graph with
/// exactly `value` copies of H.
bool certificates_valid(const SearchResult& r);

} // namespace tnt
