#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <istream>
#include <mutex>
#include <string>
#include <vector>

#include "gbell/canonical.hpp"
#include "gbell/graph.hpp"
#include "gbell/graph6.hpp"

namespace gbell {

inline constexpr int kGeneratorLimit = 8;

namespace detail {

// Keys for order <= 11 fit in 8 bytes; packing them into words keeps the
// dedup of the 2^21 edge sets at n = 7 cheap.
inline std::uint64_t packed_key(const Graph& g) {
    const std::string bytes = canonical_key(g).bytes;
    if (bytes.size() > sizeof(std::uint64_t))
        throw std::invalid_argument("packed_key: order too large for an 8-byte key");
    std::uint64_t packed = 0;
    std::memcpy(&packed, bytes.data(), bytes.size());
    return packed;
}

inline Graph graph_from_packed(std::uint64_t packed, int n) {
    CanonicalKey key;
    key.bytes.assign(1 + static_cast<std::size_t>((n * (n - 1) / 2 + 7) / 8), '\0');
    std::memcpy(key.bytes.data(), &packed, key.bytes.size());
    return graph_from_key(key);
}

inline std::vector<Graph> unpack_sorted_unique(std::vector<std::uint64_t>& keys, int n) {
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<Graph> out;
    out.reserve(keys.size());
    for (std::uint64_t key : keys) out.push_back(graph_from_packed(key, n));
    return out;
}

}  // namespace detail

// One new vertex attached to every subset of every representative, then
// canonical dedup: covers all isomorphism classes of the next order.
inline std::vector<Graph> extend_catalogue(const std::vector<Graph>& reps) {
    if (reps.empty()) throw std::invalid_argument("extend_catalogue: empty catalogue");
    const int n = reps.front().order() + 1;
    if (n > 11) throw std::invalid_argument("extend_catalogue: order too large for packed keys");
    std::vector<std::uint64_t> keys;
    keys.reserve(reps.size() << (n - 1));
    for (const Graph& h : reps) {
        for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << (n - 1)); ++subset) {
            Graph g = add_isolated(h, 1);
            std::uint64_t rest = subset;
            while (rest) {
                const int v = std::countr_zero(rest);
                rest &= rest - 1;
                g.connect(v, n - 1);
            }
            keys.push_back(detail::packed_key(g));
        }
    }
    return detail::unpack_sorted_unique(keys, n);
}

// Every non-isomorphic graph of order n, exactly one (canonical)
// representative per class. Full 2^C(n,2) edge-set enumeration with
// canonical-key dedup through n = 7; n = 8 extends the n = 7 catalogue
// vertex by vertex.
inline std::vector<Graph> graph_catalogue(int n) {
    if (n < 1 || n > kGeneratorLimit)
        throw std::invalid_argument("graph_catalogue: order must be in [1, 8]");
    if (n == 8) return extend_catalogue(graph_catalogue(7));
    const int nbits = n * (n - 1) / 2;
    std::vector<std::uint64_t> keys;
    keys.reserve(std::size_t{1} << nbits);
    for (std::uint64_t edges = 0; edges < (std::uint64_t{1} << nbits); ++edges) {
        Graph g(n);
        int idx = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++idx)
                if ((edges >> idx) & 1u) g.connect(i, j);
        keys.push_back(detail::packed_key(g));
    }
    return detail::unpack_sorted_unique(keys, n);
}

// Same catalogues, built once per process and per order. Safe to call from
// several threads.
inline const std::vector<Graph>& cached_catalogue(int n) {
    if (n < 1 || n > kGeneratorLimit)
        throw std::invalid_argument("cached_catalogue: order must be in [1, 8]");
    static std::array<std::vector<Graph>, kGeneratorLimit + 1> store;
    static std::array<std::once_flag, kGeneratorLimit + 1> flags;
    std::call_once(flags[static_cast<std::size_t>(n)], [n] {
        store[static_cast<std::size_t>(n)] = graph_catalogue(n);
    });
    return store[static_cast<std::size_t>(n)];
}

struct Graph6File {
    std::vector<Graph> graphs;
    std::size_t skipped_over_limit = 0;
};

// Reads one graph6 record per line. Graphs whose order exceeds `order_limit`
// are counted and skipped rather than aborting the run; malformed records
// report their line number.
inline Graph6File read_graph6_file(std::istream& in, int order_limit = kMaxOrder) {
    Graph6File out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
        if (line.empty()) continue;
        Graph g;
        try {
            g = parse_graph6(line);
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
        if (g.order() > order_limit) {
            ++out.skipped_over_limit;
            continue;
        }
        out.graphs.push_back(std::move(g));
    }
    return out;
}

}  // namespace gbell
