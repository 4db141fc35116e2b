#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gbell/canonical.hpp"
#include "gbell/graph.hpp"
#include "gbell/numbers.hpp"

namespace gbell {

inline constexpr int kDefaultEngineLimit = 20;
inline constexpr int kOracleLimit = 11;

// Raised when a computation would exceed the configured order cap; callers
// translate this into the resource-limit exit code.
struct EngineLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The vector (S(G,1), ..., S(G,n)): counts[k-1] partitions of V into exactly
// k stable blocks.
struct ColorCountVector {
    int order = 0;
    std::vector<Integer> counts;

    // S(G,k) with zero outside 1..order, so identities across different
    // orders read naturally.
    const Integer& at(int k) const {
        static const Integer zero = 0;
        if (k < 1 || k > order) return zero;
        return counts[static_cast<std::size_t>(k - 1)];
    }

    Integer bell_total() const {
        Integer b = 0;
        for (const Integer& s : counts) b += s;
        return b;
    }

    Integer block_total() const {
        Integer t = 0;
        for (int k = 1; k <= order; ++k) t += k * counts[static_cast<std::size_t>(k - 1)];
        return t;
    }

    friend bool operator==(const ColorCountVector&, const ColorCountVector&) = default;
};

// Memoized deletion-contraction engine. Works toward complete graphs via the
// addition form S(G,k) = S(G+uv,k) + S(G|uv,k); the clique base case is
// S(K_n,k) = [k = n]. Not thread-safe: give each worker its own instance.
class Engine {
public:
    struct Options {
        int order_limit = kDefaultEngineLimit;
        bool memoize = true;
    };

    Engine() = default;
    explicit Engine(Options opt) : opt_(opt) {}

    ColorCountVector s_vector(const Graph& g) {
        if (g.order() == 0) throw std::invalid_argument("s_vector: empty graph");
        if (g.order() > opt_.order_limit)
            throw EngineLimitError("s_vector: order " + std::to_string(g.order()) +
                                   " exceeds the engine limit " + std::to_string(opt_.order_limit));
        return ColorCountVector{g.order(), compute(g)};
    }

    std::pair<Integer, Integer> bt_of(const Graph& g) {
        const ColorCountVector s = s_vector(g);
        return {s.bell_total(), s.block_total()};
    }

    Rational average_colors(const Graph& g) {
        const auto [b, t] = bt_of(g);
        return make_rational(t, b);
    }

    // Smallest k with S(G,k) > 0; a bipartiteness test short-circuits the
    // k <= 2 cases without touching the recursion.
    int chromatic_number(const Graph& g) {
        if (g.order() == 0) throw std::invalid_argument("chromatic_number: empty graph");
        if (g.size() == 0) return 1;
        if (is_bipartite(g)) return 2;
        const ColorCountVector s = s_vector(g);
        for (int k = 1; k <= s.order; ++k)
            if (s.at(k) > 0) return k;
        throw std::logic_error("chromatic_number: zero S-vector");
    }

    std::size_t cache_size() const { return memo_.size(); }
    void clear_cache() { memo_.clear(); }

private:
    std::vector<Integer> compute(const Graph& g) {
        const int n = g.order();
        if (g.is_complete()) {
            std::vector<Integer> s(static_cast<std::size_t>(n), 0);
            s.back() = 1;
            return s;
        }
        std::string key;
        if (opt_.memoize) {
            key = canonical_key(g).bytes;
            auto it = memo_.find(key);
            if (it != memo_.end()) return it->second;
        }
        const auto [u, v] = pick_pivot(g);
        std::vector<Integer> with_edge = compute(add_edge(g, u, v));
        std::vector<Integer> merged = compute(contract(g, u, v));
        std::vector<Integer> s(static_cast<std::size_t>(n), 0);
        for (int k = 1; k <= n; ++k) {
            s[static_cast<std::size_t>(k - 1)] = with_edge[static_cast<std::size_t>(k - 1)];
            if (k <= n - 1) s[static_cast<std::size_t>(k - 1)] += merged[static_cast<std::size_t>(k - 1)];
        }
        if (opt_.memoize) memo_.emplace(std::move(key), s);
        return s;
    }

    // Non-adjacent pair maximizing |N(u) & N(v)| so the contraction branch
    // loses the most structure; ties break to the smallest (u,v).
    static std::pair<int, int> pick_pivot(const Graph& g) {
        int best_u = -1, best_v = -1, best_common = -1;
        for (int u = 0; u < g.order(); ++u) {
            for (int v = u + 1; v < g.order(); ++v) {
                if (g.has_edge(u, v)) continue;
                const int common = std::popcount(g.neighbors(u) & g.neighbors(v));
                if (common > best_common) {
                    best_common = common;
                    best_u = u;
                    best_v = v;
                }
            }
        }
        return {best_u, best_v};
    }

    Options opt_;
    std::unordered_map<std::string, std::vector<Integer>> memo_;
};

namespace detail {

// Visits every partition of {0..n-1} into stable blocks, in restricted
// growth order (vertex i joins an existing block or opens a new one; a block
// is extendable only while it stays independent).
template <typename F>
void visit_stable_partitions(const Graph& g, int vertex, std::vector<std::uint64_t>& blocks, F& f) {
    if (vertex == g.order()) {
        f(blocks);
        return;
    }
    const std::uint64_t nbrs = g.neighbors(vertex);
    const std::uint64_t bit = std::uint64_t{1} << vertex;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b] & nbrs) continue;
        blocks[b] |= bit;
        visit_stable_partitions(g, vertex + 1, blocks, f);
        blocks[b] &= ~bit;
    }
    blocks.push_back(bit);
    visit_stable_partitions(g, vertex + 1, blocks, f);
    blocks.pop_back();
}

}  // namespace detail

template <typename F>
void for_each_stable_partition(const Graph& g, F f) {
    std::vector<std::uint64_t> blocks;
    detail::visit_stable_partitions(g, 0, blocks, f);
}

// Brute-force S-vector by set-partition enumeration; shares nothing with the
// deletion-contraction path above.
inline ColorCountVector oracle_s_vector(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("oracle_s_vector: empty graph");
    if (g.order() > kOracleLimit)
        throw EngineLimitError("oracle_s_vector: order exceeds the enumeration bound 11");
    ColorCountVector s{g.order(), std::vector<Integer>(static_cast<std::size_t>(g.order()), 0)};
    for_each_stable_partition(g, [&](const std::vector<std::uint64_t>& blocks) {
        s.counts[blocks.size() - 1] += 1;
    });
    return s;
}

// S_{W,i}(G,k): stable partitions with exactly k blocks of which exactly i
// meet the vertex set W.
class RefinedCounts {
public:
    RefinedCounts(int order, int w_size)
        : order_(order), w_size_(w_size),
          counts_(static_cast<std::size_t>(order),
                  std::vector<Integer>(static_cast<std::size_t>(w_size) + 1, 0)) {}

    int order() const { return order_; }
    int w_size() const { return w_size_; }

    const Integer& at(int k, int i) const {
        static const Integer zero = 0;
        if (k < 1 || k > order_ || i < 0 || i > w_size_) return zero;
        return counts_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i)];
    }

    Integer& cell(int k, int i) {
        return counts_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i)];
    }

    // Row sums recover the plain counts: sum_i S_{W,i}(G,k) = S(G,k).
    ColorCountVector totals() const {
        ColorCountVector s{order_, std::vector<Integer>(static_cast<std::size_t>(order_), 0)};
        for (int k = 1; k <= order_; ++k)
            for (int i = 0; i <= w_size_; ++i) s.counts[static_cast<std::size_t>(k - 1)] += at(k, i);
        return s;
    }

private:
    int order_;
    int w_size_;
    std::vector<std::vector<Integer>> counts_;
};

inline RefinedCounts refined_counts(const Graph& g, std::uint64_t w_mask) {
    if (g.order() == 0) throw std::invalid_argument("refined_counts: empty graph");
    if (g.order() > kOracleLimit)
        throw EngineLimitError("refined_counts: order exceeds the enumeration bound 11");
    if (w_mask & ~g.vertex_mask()) throw std::invalid_argument("refined_counts: W is not a vertex subset");
    RefinedCounts r(g.order(), std::popcount(w_mask));
    for_each_stable_partition(g, [&](const std::vector<std::uint64_t>& blocks) {
        int touching = 0;
        for (std::uint64_t block : blocks)
            if (block & w_mask) ++touching;
        r.cell(static_cast<int>(blocks.size()), touching) += 1;
    });
    return r;
}

}  // namespace gbell
