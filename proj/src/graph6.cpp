#include "ovc/graph6.hpp"

#include <cstdint>
#include <istream>
#include <limits>

namespace ovc {

namespace {

constexpr int kBias = 63;
constexpr int kMax = 126;

std::uint64_t parse_size_group(std::string_view rec, std::size_t first,
                               std::size_t count) {
    std::uint64_t n = 0;
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t pos = first + i;
        if (pos >= rec.size())
            throw Graph6Error(rec.size(), "record truncated inside size header");
        unsigned char c = static_cast<unsigned char>(rec[pos]);
        if (c < kBias || c > kMax)
            throw Graph6Error(pos, "size header byte out of range 63..126");
        n = (n << 6) | static_cast<std::uint64_t>(c - kBias);
    }
    return n;
}

// Returns (vertex count, header length).
std::pair<std::uint64_t, std::size_t> parse_header(std::string_view rec) {
    if (rec.empty()) throw Graph6Error(0, "empty record");
    unsigned char c0 = static_cast<unsigned char>(rec[0]);
    if (c0 < kBias || c0 > kMax)
        throw Graph6Error(0, "header byte out of range 63..126");
    if (c0 != kMax) return {static_cast<std::uint64_t>(c0 - kBias), 1};
    if (rec.size() < 2) throw Graph6Error(1, "record truncated inside size header");
    if (static_cast<unsigned char>(rec[1]) != kMax)
        return {parse_size_group(rec, 1, 3), 4};
    return {parse_size_group(rec, 2, 6), 8};
}

void append_size(std::string& out, std::uint64_t n, std::size_t groups) {
    for (std::size_t i = groups; i-- > 0;)
        out += static_cast<char>(kBias + ((n >> (6 * i)) & 0x3f));
}

}  // namespace

Graph6Error::Graph6Error(std::size_t byte_offset, const std::string& message)
    : std::runtime_error("graph6: " + message + " (byte " +
                         std::to_string(byte_offset) + ")"),
      offset_(byte_offset) {}

Graph from_graph6(std::string_view record) {
    auto [n64, header] = parse_header(record);
    if (n64 > static_cast<std::uint64_t>(std::numeric_limits<int>::max()))
        throw Graph6Error(0, "vertex count too large");
    const std::uint64_t nbits = n64 * (n64 - (n64 > 0 ? 1 : 0)) / 2;
    const std::uint64_t nbytes = (nbits + 5) / 6;
    if (record.size() < header + nbytes)
        throw Graph6Error(record.size(), "record truncated; expected " +
                                             std::to_string(header + nbytes) +
                                             " bytes");
    if (record.size() > header + nbytes)
        throw Graph6Error(header + nbytes, "unexpected trailing byte");

    const int n = static_cast<int>(n64);
    std::vector<std::pair<int, int>> edges;
    std::uint64_t bit = 0;
    int i = 0, j = 1;
    for (std::uint64_t b = 0; b < nbytes; ++b) {
        const std::size_t pos = header + b;
        unsigned char c = static_cast<unsigned char>(record[pos]);
        if (c < kBias || c > kMax)
            throw Graph6Error(pos, "data byte out of range 63..126");
        unsigned val = c - kBias;
        for (int s = 5; s >= 0; --s, ++bit) {
            const bool set = (val >> s) & 1u;
            if (bit >= nbits) {
                if (set) throw Graph6Error(pos, "nonzero padding bits");
                continue;
            }
            if (set) edges.emplace_back(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
    const std::uint64_t n = static_cast<std::uint64_t>(g.vertex_count());
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(kBias + n);
    } else if (n <= 258047) {
        out += static_cast<char>(kMax);
        append_size(out, n, 3);
    } else {
        out += static_cast<char>(kMax);
        out += static_cast<char>(kMax);
        append_size(out, n, 6);
    }
    unsigned group = 0;
    int filled = 0;
    for (int j = 1; j < g.vertex_count(); ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1u : 0u);
            if (++filled == 6) {
                out += static_cast<char>(kBias + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out += static_cast<char>(kBias + (group << (6 - filled)));
    return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> graphs;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::string_view rec = line;
        if (rec.starts_with(">>graph6<<")) rec.remove_prefix(10);
        if (rec.empty()) continue;
        graphs.push_back(from_graph6(rec));
    }
    return graphs;
}

}  // namespace ovc
