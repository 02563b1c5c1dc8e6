#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "tnt/graph.hpp"

namespace tnt {

/// Thrown for malformed graph6 or adjacency-list input. The message carries
/// the byte (graph6) or line (adjacency list) position.
class ParseError : public InputError {
public:
    using InputError::InputError;
};

/// Standard graph6: size header, then the upper triangle read column-wise
/// (x01, x02, x12, x03, ...) packed big-endian in 6-bit groups offset by 63.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view bytes);

/// "n m" header followed by m lines "u v" (0-indexed). Blank lines and
/// lines starting with '#' are ignored.
Graph read_adjacency_list(std::istream& in);
void write_adjacency_list(std::ostream& out, const Graph& g);

} // namespace tnt
