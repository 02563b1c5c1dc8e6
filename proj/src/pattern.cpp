#include "tnt/pattern.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace tnt {

MultipartitePattern::MultipartitePattern(std::vector<int> parts) : parts_(std::move(parts))
{
    if (parts_.size() < 2)
        throw InputError("a multipartite pattern needs at least two parts");
    std::sort(parts_.begin(), parts_.end());
    if (parts_.front() < 1)
        throw InputError("pattern parts must be positive");
    if (vertex_count() > kMaxVertices)
        throw InputError("pattern has more than 64 vertices");
}

MultipartitePattern MultipartitePattern::parse(const std::string& text)
{
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos)
            comma = text.size();
        const char* first = text.data() + pos;
        const char* last = text.data() + comma;
        int value = 0;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last)
            throw InputError("bad pattern '" + text + "' at column " + std::to_string(pos + 1));
        parts.push_back(value);
        pos = comma + 1;
    }
    return MultipartitePattern(std::move(parts));
}

int MultipartitePattern::vertex_count() const noexcept
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

long MultipartitePattern::edge_count() const noexcept
{
    long total = vertex_count();
    long sum_sq = 0;
    for (int p : parts_)
        sum_sq += static_cast<long>(p) * p;
    return (total * total - sum_sq) / 2;
}

Graph MultipartitePattern::to_graph() const
{
    std::vector<Edge> edges;
    std::vector<int> start(parts_.size() + 1, 0);
    for (std::size_t i = 0; i < parts_.size(); ++i)
        start[i + 1] = start[i] + parts_[i];
    for (std::size_t i = 0; i < parts_.size(); ++i)
        for (std::size_t j = i + 1; j < parts_.size(); ++j)
            for (int u = start[i]; u < start[i + 1]; ++u)
                for (int v = start[j]; v < start[j + 1]; ++v)
                    edges.emplace_back(u, v);
    return make_graph(vertex_count(), edges);
}

std::string MultipartitePattern::label() const
{
    return "K_{" + to_string() + "}";
}

std::string MultipartitePattern::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

} // namespace tnt
