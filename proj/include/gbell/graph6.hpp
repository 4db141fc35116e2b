#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "gbell/graph.hpp"

namespace gbell {

// Largest order the single-byte graph6 header can carry.
inline constexpr int kGraph6MaxOrder = 62;

// graph6: byte 63+n, then ceil(n(n-1)/2 / 6) bytes of 63 + 6 upper-triangle
// bits (column order x01, x02, x12, x03, ..., MSB first, zero padded).
inline std::string to_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kGraph6MaxOrder) throw std::invalid_argument("to_graph6: order exceeds 62");
    std::string out(1, static_cast<char>(63 + n));
    const int nbits = n * (n - 1) / 2;
    out.resize(1 + static_cast<std::size_t>((nbits + 5) / 6), static_cast<char>(63));
    int idx = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++idx)
            if (g.has_edge(i, j))
                out[1 + static_cast<std::size_t>(idx / 6)] += static_cast<char>(1 << (5 - idx % 6));
    return out;
}

inline Graph parse_graph6(std::string_view line) {
    auto fail = [&](const std::string& why) { throw ParseError("graph6 \"" + std::string(line) + "\": " + why); };
    if (line.empty()) fail("empty record");
    const int header = static_cast<unsigned char>(line[0]);
    if (header < 63 || header > 63 + kGraph6MaxOrder)
        fail(header == 126 ? "multi-byte order encodings are not supported" : "order byte out of range");
    const int n = header - 63;
    const int nbits = n * (n - 1) / 2;
    const std::size_t want = 1 + static_cast<std::size_t>((nbits + 5) / 6);
    if (line.size() != want)
        fail("expected " + std::to_string(want) + " bytes, got " + std::to_string(line.size()));
    Graph g(n);
    int idx = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++idx) {
            const int byte = static_cast<unsigned char>(line[1 + static_cast<std::size_t>(idx / 6)]);
            if (byte < 63 || byte > 126) fail("payload byte out of range [63, 126]");
            if ((byte - 63) >> (5 - idx % 6) & 1) g.connect(i, j);
        }
    }
    // Trailing padding bits must be zero for the round trip to be byte-exact.
    if (nbits % 6 != 0) {
        const int last = static_cast<unsigned char>(line.back()) - 63;
        if (last & ((1 << (6 - nbits % 6)) - 1)) fail("nonzero padding bits");
    }
    return g;
}

}  // namespace gbell
