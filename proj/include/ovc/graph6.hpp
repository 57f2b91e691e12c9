#pragma once

#include "ovc/graph.hpp"

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ovc {

/// Malformed graph6 record; byte_offset() points at the offending byte.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(std::size_t byte_offset, const std::string& message);
    std::size_t byte_offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Decodes one graph6 record (no trailing newline).
Graph from_graph6(std::string_view record);

/// Canonical graph6 encoding: shortest size header, 6-bit big-endian
/// column-major upper triangle, zero padding.
std::string to_graph6(const Graph& g);

/// Reads every record from a graph6 text stream, one record per line.
/// Blank lines and lines starting with '#' are skipped; an optional
/// ">>graph6<<" prefix is accepted.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace ovc
