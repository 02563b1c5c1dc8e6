#include "tnt/graph_io.hpp"

#include <sstream>
#include <vector>

namespace tnt {

namespace {

constexpr int kShortHeaderMax = 62;

char six_bits(int value) { return static_cast<char>(value + 63); }

} // namespace

std::string graph6_encode(const Graph& g)
{
    const int n = g.order();
    std::string out;
    if (n <= kShortHeaderMax) {
        out.push_back(six_bits(n));
    } else {
        out.push_back('~');
        out.push_back(six_bits((n >> 12) & 63));
        out.push_back(six_bits((n >> 6) & 63));
        out.push_back(six_bits(n & 63));
    }
    int group = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(six_bits(group));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(six_bits(group << (6 - filled)));
    return out;
}

Graph graph6_decode(std::string_view bytes)
{
    auto value_at = [&](std::size_t pos) {
        if (pos >= bytes.size())
            throw ParseError("graph6: truncated input at byte " + std::to_string(pos + 1));
        int c = static_cast<unsigned char>(bytes[pos]);
        if (c < 63 || c > 126)
            throw ParseError("graph6: byte " + std::to_string(pos + 1) + " outside printable range");
        return c - 63;
    };
    while (!bytes.empty() && (bytes.back() == '\n' || bytes.back() == '\r'))
        bytes.remove_suffix(1);
    if (bytes.starts_with(">>graph6<<"))
        bytes.remove_prefix(10);

    std::size_t pos = 0;
    int n = value_at(pos++);
    if (n == 63) {
        if (value_at(pos) == 63)
            throw ParseError("graph6: 8-byte size header not supported (n > 64)");
        n = (value_at(pos) << 12) | (value_at(pos + 1) << 6) | value_at(pos + 2);
        pos += 3;
    }
    if (n < 1 || n > kMaxVertices)
        throw ParseError("graph6: vertex count " + std::to_string(n) + " in header outside [1, 64]");

    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t body = (bits + 5) / 6;
    if (bytes.size() != pos + body)
        throw ParseError("graph6: expected " + std::to_string(pos + body) + " bytes, got " +
                         std::to_string(bytes.size()));
    std::vector<VertexSet> rows(n, 0);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            int group = value_at(pos + k / 6);
            if ((group >> (5 - k % 6)) & 1) {
                rows[i] |= singleton(j);
                rows[j] |= singleton(i);
            }
        }
    }
    if (bits % 6 != 0) {
        int last = value_at(pos + body - 1);
        int pad = static_cast<int>(6 - bits % 6);
        if (last & ((1 << pad) - 1))
            throw ParseError("graph6: nonzero padding bits in byte " + std::to_string(pos + body));
    }
    return Graph::from_rows(n, rows);
}

Graph read_adjacency_list(std::istream& in)
{
    std::string line;
    int line_no = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#')
                continue;
            return true;
        }
        return false;
    };
    if (!next_line())
        throw ParseError("adjacency list: missing 'n m' header");
    std::istringstream header(line);
    int n = 0;
    long m = 0;
    if (!(header >> n >> m) || m < 0)
        throw ParseError("adjacency list: bad header on line " + std::to_string(line_no));
    std::vector<Edge> edges;
    for (long e = 0; e < m; ++e) {
        if (!next_line())
            throw ParseError("adjacency list: expected " + std::to_string(m) + " edges, found " +
                             std::to_string(e));
        std::istringstream row(line);
        Edge edge;
        std::string extra;
        if (!(row >> edge.first >> edge.second) || (row >> extra))
            throw ParseError("adjacency list: bad edge on line " + std::to_string(line_no));
        edges.push_back(edge);
    }
    try {
        return make_graph(n, edges);
    } catch (const InputError& err) {
        throw ParseError(std::string("adjacency list: ") + err.what());
    }
}

void write_adjacency_list(std::ostream& out, const Graph& g)
{
    auto edges = g.edges();
    out << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges)
        out << u << ' ' << v << '\n';
}

} // namespace tnt
