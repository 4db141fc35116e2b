#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <vector>

#include "gbell/graph.hpp"

namespace gbell {

// Exact canonical labeling up to this order; larger graphs fall back to the
// labeled adjacency (still a valid memo key, just without isomorphism
// sharing).
inline constexpr int kCanonicalLimit = 12;

// Isomorphism-invariant byte string: order byte, then the upper triangle of
// the (canonically relabeled) adjacency packed 8 bits per byte, MSB first,
// in the column order x01, x02, x12, x03, ...
struct CanonicalKey {
    std::string bytes;
    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
    friend std::strong_ordering operator<=>(const CanonicalKey& a, const CanonicalKey& b) {
        return a.bytes.compare(b.bytes) <=> 0;
    }
};

namespace detail {

// Upper-triangle bit string for order <= 16: at most 120 bits in two words.
struct TriangleBits {
    std::array<std::uint64_t, 2> w{0, 0};
    friend bool operator==(const TriangleBits&, const TriangleBits&) = default;
    friend bool operator<(const TriangleBits& a, const TriangleBits& b) {
        return a.w[0] != b.w[0] ? a.w[0] < b.w[0] : a.w[1] < b.w[1];
    }
    void set(int idx) { w[static_cast<std::size_t>(idx >> 6)] |= std::uint64_t{1} << (63 - (idx & 63)); }
};

inline TriangleBits triangle_bits(const Graph& g, std::span<const int> order) {
    TriangleBits bits;
    int idx = 0;
    for (std::size_t j = 1; j < order.size(); ++j) {
        const std::uint64_t row = g.neighbors(order[j]);
        for (std::size_t i = 0; i < j; ++i, ++idx)
            if ((row >> order[i]) & 1u) bits.set(idx);
    }
    return bits;
}

// Arrangements tried per enumeration before switching to individualization.
inline constexpr double kEnumBudget = 100000.0;

// Canonicalization workspace for order <= 12; everything lives on the
// stack. Vertices are kept grouped by cell in `verts`, with half-open cell
// ranges in cell_lo/cell_hi.
struct SmallCanon {
    const Graph& g;
    int n;
    std::array<int, 12> verts{};
    std::array<int, 13> cell_lo{}, cell_hi{};
    int ncells = 0;
    std::array<int, 12> cell_of{};
    std::array<std::uint64_t, 12> sig{};
    // flattened per-vertex twin-class ids (aligned with verts) and the
    // per-position vertex choice during enumeration
    std::array<int, 12> twin_of{};
    std::array<int, 12> order{};
    std::array<int, 12> perm{};   // twin-class ids being permuted, per cell slice
    std::array<int, 12> taken{};  // per twin class, members consumed
    std::array<std::array<int, 12>, 12> members{};  // members[class][i]
    std::array<int, 12> member_count{};
    TriangleBits best;
    bool have_best = false;

    explicit SmallCanon(const Graph& graph) : g(graph), n(graph.order()) {}

    void init_by_degree() {
        for (int v = 0; v < n; ++v) verts[static_cast<std::size_t>(v)] = v;
        std::sort(verts.begin(), verts.begin() + n, [&](int a, int b) {
            return g.degree(a) != g.degree(b) ? g.degree(a) < g.degree(b) : a < b;
        });
        ncells = 0;
        for (int i = 0; i < n; ++i) {
            if (i == 0 || g.degree(verts[static_cast<std::size_t>(i)]) !=
                              g.degree(verts[static_cast<std::size_t>(i - 1)])) {
                cell_lo[static_cast<std::size_t>(ncells)] = i;
                cell_hi[static_cast<std::size_t>(ncells)] = i + 1;
                ++ncells;
            } else {
                ++cell_hi[static_cast<std::size_t>(ncells - 1)];
            }
        }
    }

    // Equitable-style refinement to a fixpoint from the current partition.
    // Cells stay ordered by invariant signatures (sorted neighbor-cell ids
    // packed four bits each — at most 11 neighbors with cell ids < 12, so
    // one word suffices). Vertices of one cell always share a degree, so
    // packed signatures compare consistently.
    void refine_loop() {
        for (;;) {
            for (int c = 0; c < ncells; ++c)
                for (int i = cell_lo[static_cast<std::size_t>(c)]; i < cell_hi[static_cast<std::size_t>(c)]; ++i)
                    cell_of[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])] = c;
            std::array<int, 13> new_lo{}, new_hi{};
            int new_cells = 0;
            for (int c = 0; c < ncells; ++c) {
                const int lo = cell_lo[static_cast<std::size_t>(c)], hi = cell_hi[static_cast<std::size_t>(c)];
                if (hi - lo > 1) {
                    for (int i = lo; i < hi; ++i) {
                        const int v = verts[static_cast<std::size_t>(i)];
                        std::array<int, 12> ids{};
                        int deg = 0;
                        std::uint64_t rest = g.neighbors(v);
                        while (rest) {
                            ids[static_cast<std::size_t>(deg++)] = cell_of[static_cast<std::size_t>(std::countr_zero(rest))];
                            rest &= rest - 1;
                        }
                        std::sort(ids.begin(), ids.begin() + deg);
                        std::uint64_t packed = 0;
                        for (int d = 0; d < deg; ++d) packed = packed << 4 | static_cast<unsigned>(ids[static_cast<std::size_t>(d)]);
                        sig[static_cast<std::size_t>(v)] = packed;
                    }
                    std::sort(verts.begin() + lo, verts.begin() + hi, [&](int a, int b) {
                        return sig[static_cast<std::size_t>(a)] != sig[static_cast<std::size_t>(b)]
                                   ? sig[static_cast<std::size_t>(a)] < sig[static_cast<std::size_t>(b)]
                                   : a < b;
                    });
                }
                for (int i = lo; i < hi; ++i) {
                    if (i == lo || (hi - lo > 1 && sig[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])] !=
                                                       sig[static_cast<std::size_t>(verts[static_cast<std::size_t>(i - 1)])])) {
                        new_lo[static_cast<std::size_t>(new_cells)] = i;
                        new_hi[static_cast<std::size_t>(new_cells)] = i + 1;
                        ++new_cells;
                    } else {
                        ++new_hi[static_cast<std::size_t>(new_cells - 1)];
                    }
                }
            }
            const bool done = new_cells == ncells;
            cell_lo = new_lo;
            cell_hi = new_hi;
            ncells = new_cells;
            if (done) return;
        }
    }

    // Two vertices are twins when their rows agree everywhere outside the
    // pair; reordering twins never changes the triangle bits, so only one
    // arrangement per twin-class multiset needs to be tried.
    void find_twins() {
        int next_class = 0;
        for (int c = 0; c < ncells; ++c) {
            const int lo = cell_lo[static_cast<std::size_t>(c)], hi = cell_hi[static_cast<std::size_t>(c)];
            const int first_class = next_class;
            for (int i = lo; i < hi; ++i) {
                const int v = verts[static_cast<std::size_t>(i)];
                int cls = -1;
                for (int r = first_class; r < next_class && cls < 0; ++r) {
                    const int u = members[static_cast<std::size_t>(r)][0];
                    const std::uint64_t outside = ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
                    if (((g.neighbors(u) ^ g.neighbors(v)) & outside) == 0) cls = r;
                }
                if (cls < 0) {
                    cls = next_class++;
                    member_count[static_cast<std::size_t>(cls)] = 0;
                }
                members[static_cast<std::size_t>(cls)][static_cast<std::size_t>(member_count[static_cast<std::size_t>(cls)]++)] = v;
                twin_of[static_cast<std::size_t>(i)] = cls;
            }
        }
    }

    // Product over cells of the multiset-permutation counts.
    double arrangement_estimate() const {
        static constexpr double fact[13] = {1, 1, 2, 6, 24, 120, 720, 5040, 40320,
                                            362880, 3628800, 39916800, 479001600};
        double total = 1;
        for (int c = 0; c < ncells && total <= kEnumBudget; ++c) {
            const int lo = cell_lo[static_cast<std::size_t>(c)], hi = cell_hi[static_cast<std::size_t>(c)];
            double arrangements = fact[hi - lo];
            int run = 1;
            for (int i = lo + 1; i <= hi; ++i) {
                if (i < hi && twin_of[static_cast<std::size_t>(i)] == twin_of[static_cast<std::size_t>(i - 1)]) {
                    ++run;
                } else {
                    arrangements /= fact[run];
                    run = 1;
                }
            }
            total *= arrangements;
        }
        return total;
    }

    void emit() {
        const TriangleBits bits = triangle_bits(g, std::span<const int>(order.data(), static_cast<std::size_t>(n)));
        if (!have_best || bits < best) {
            best = bits;
            have_best = true;
        }
    }

    void place_cell(int c) {
        if (c == ncells) {
            emit();
            return;
        }
        const int lo = cell_lo[static_cast<std::size_t>(c)], hi = cell_hi[static_cast<std::size_t>(c)];
        for (int i = lo; i < hi; ++i) perm[static_cast<std::size_t>(i)] = twin_of[static_cast<std::size_t>(i)];
        std::sort(perm.begin() + lo, perm.begin() + hi);
        do {
            for (int i = lo; i < hi; ++i) taken[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = 0;
            for (int i = lo; i < hi; ++i) {
                const int cls = perm[static_cast<std::size_t>(i)];
                order[static_cast<std::size_t>(i)] = members[static_cast<std::size_t>(cls)][static_cast<std::size_t>(taken[static_cast<std::size_t>(cls)]++)];
            }
            place_cell(c + 1);
        } while (std::next_permutation(perm.begin() + lo, perm.begin() + hi));
    }

    // Refines, then either enumerates within the budget or individualizes
    // every vertex of the first splittable cell in turn and recurses, taking
    // the least key over the candidates. The candidate set is a cell of an
    // invariant partition, so the minimum stays isomorphism-invariant.
    TriangleBits solve() {
        refine_loop();
        find_twins();
        if (arrangement_estimate() <= kEnumBudget) {
            have_best = false;
            place_cell(0);
            return best;
        }
        int split = 0;
        while (cell_hi[static_cast<std::size_t>(split)] - cell_lo[static_cast<std::size_t>(split)] < 2) ++split;
        TriangleBits overall;
        bool have = false;
        const int lo = cell_lo[static_cast<std::size_t>(split)], hi = cell_hi[static_cast<std::size_t>(split)];
        std::array<int, 12> cell_members{};
        for (int i = lo; i < hi; ++i) cell_members[static_cast<std::size_t>(i - lo)] = verts[static_cast<std::size_t>(i)];
        for (int pick = 0; pick < hi - lo; ++pick) {
            SmallCanon child(g);
            child.ncells = 0;
            for (int c = 0; c < ncells; ++c) {
                const int clo = cell_lo[static_cast<std::size_t>(c)], chi = cell_hi[static_cast<std::size_t>(c)];
                if (c != split) {
                    child.append_cell(&verts[static_cast<std::size_t>(clo)], chi - clo);
                    continue;
                }
                const int w = cell_members[static_cast<std::size_t>(pick)];
                child.append_cell(&w, 1);
                std::array<int, 12> rest{};
                int count = 0;
                for (int i = 0; i < hi - lo; ++i)
                    if (i != pick) rest[static_cast<std::size_t>(count++)] = cell_members[static_cast<std::size_t>(i)];
                child.append_cell(rest.data(), count);
            }
            const TriangleBits bits = child.solve();
            if (!have || bits < overall) {
                overall = bits;
                have = true;
            }
        }
        return overall;
    }

    void append_cell(const int* data, int count) {
        const int at = ncells == 0 ? 0 : cell_hi[static_cast<std::size_t>(ncells - 1)];
        for (int i = 0; i < count; ++i) verts[static_cast<std::size_t>(at + i)] = data[i];
        cell_lo[static_cast<std::size_t>(ncells)] = at;
        cell_hi[static_cast<std::size_t>(ncells)] = at + count;
        ++ncells;
    }

    TriangleBits run() {
        if (n == 0) return {};
        init_by_degree();
        return solve();
    }
};

inline std::string pack_key(int n, const TriangleBits& bits) {
    const int nbits = n * (n - 1) / 2;
    std::string out(1 + static_cast<std::size_t>((nbits + 7) / 8), '\0');
    out[0] = static_cast<char>(n);
    for (int idx = 0; idx < nbits; ++idx) {
        const bool bit = (bits.w[static_cast<std::size_t>(idx >> 6)] >> (63 - (idx & 63))) & 1u;
        if (bit) out[1 + static_cast<std::size_t>(idx / 8)] |= static_cast<char>(0x80u >> (idx % 8));
    }
    return out;
}

inline TriangleBits labeled_bits(const Graph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) order[static_cast<std::size_t>(v)] = v;
    return triangle_bits(g, order);
}

}  // namespace detail

inline CanonicalKey canonical_key(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return CanonicalKey{std::string(1, static_cast<char>(n))};
    if (n > kCanonicalLimit) {
        // Labeled fallback: deterministic, but isomorphic inputs may differ.
        if (n <= 16) return CanonicalKey{detail::pack_key(n, detail::labeled_bits(g))};
        std::string out(1, static_cast<char>(n));
        const int nbits = n * (n - 1) / 2;
        out.resize(1 + static_cast<std::size_t>((nbits + 7) / 8), '\0');
        int idx = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++idx)
                if (g.has_edge(i, j)) out[1 + static_cast<std::size_t>(idx / 8)] |= static_cast<char>(0x80u >> (idx % 8));
        return CanonicalKey{std::move(out)};
    }
    detail::SmallCanon canon(g);
    return CanonicalKey{detail::pack_key(n, canon.run())};
}

// Rebuilds the graph a key describes (the canonical representative when the
// key was produced within the canonicalization limit).
inline Graph graph_from_key(const CanonicalKey& key) {
    if (key.bytes.empty()) throw std::invalid_argument("graph_from_key: empty key");
    const int n = static_cast<unsigned char>(key.bytes[0]);
    const int nbits = n * (n - 1) / 2;
    if (key.bytes.size() != 1 + static_cast<std::size_t>((nbits + 7) / 8))
        throw std::invalid_argument("graph_from_key: truncated key");
    Graph g(n);
    int idx = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++idx)
            if ((static_cast<unsigned char>(key.bytes[1 + static_cast<std::size_t>(idx / 8)]) >> (7 - idx % 8)) & 1u)
                g.connect(i, j);
    return g;
}

inline std::string to_hex(const CanonicalKey& key) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(key.bytes.size() * 2);
    for (char c : key.bytes) {
        const unsigned char b = static_cast<unsigned char>(c);
        out += digits[b >> 4];
        out += digits[b & 15];
    }
    return out;
}

// Exact for orders within the canonicalization limit.
inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return false;
    if (a.order() > kCanonicalLimit) throw std::invalid_argument("isomorphic: order above canonicalization limit");
    return canonical_key(a) == canonical_key(b);
}

}  // namespace gbell
