#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "tnt/graph.hpp"

namespace tnt {

/// Complete multipartite graph K_{a_1,...,a_r} given by its part sizes,
/// kept sorted ascending. r = 2 covers K_{a,b}.
class MultipartitePattern {
public:
    MultipartitePattern() = default;
    /// Sorts the parts. Throws InputError unless r >= 2, every part >= 1
    /// and the total is at most 64.
    explicit MultipartitePattern(std::vector<int> parts);
    MultipartitePattern(std::initializer_list<int> parts)
        : MultipartitePattern(std::vector<int>(parts)) {}

    static MultipartitePattern bipartite(int a, int b) { return MultipartitePattern({a, b}); }
    /// Parses "2,3" style comma-separated part lists.
    static MultipartitePattern parse(const std::string& text);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int part_count() const noexcept { return static_cast<int>(parts_.size()); }
    int part(int i) const { return parts_.at(i); }
    int vertex_count() const noexcept;
    long edge_count() const noexcept;
    bool is_bipartite() const noexcept { return parts_.size() == 2; }

    /// The pattern as a concrete graph, parts numbered consecutively.
    Graph to_graph() const;
    /// "K_{2,3}" style label.
    std::string label() const;
    /// "2,3" style list, the inverse of parse.
    std::string to_string() const;

    friend bool operator==(const MultipartitePattern&, const MultipartitePattern&) = default;
    friend auto operator<=>(const MultipartitePattern&, const MultipartitePattern&) = default;

private:
    std::vector<int> parts_;
};

} // namespace tnt
