#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gbell {

inline constexpr int kMaxOrder = 64;

// Errors raised while reading graph literals, graph6 lines or files.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Vertex-labeled simple undirected graph of order <= 64. Adjacency is one
// 64-bit mask per vertex: bit j of row(i) is set iff {i,j} is an edge.
class Graph {
public:
    Graph() = default;

    explicit Graph(int order) {
        if (order < 0 || order > kMaxOrder)
            throw std::invalid_argument("Graph: order must be in [0, 64]");
        n_ = order;
        adj_.assign(static_cast<std::size_t>(order), 0);
    }

    int order() const noexcept { return n_; }

    int size() const noexcept {
        int m = 0;
        for (std::uint64_t row : adj_) m += std::popcount(row);
        return m / 2;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
    }

    std::uint64_t neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return std::popcount(neighbors(v)); }

    std::uint64_t vertex_mask() const noexcept {
        return n_ == kMaxOrder ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    }

    bool is_complete() const noexcept {
        for (int v = 0; v < n_; ++v)
            if (std::popcount(adj_[static_cast<std::size_t>(v)]) != n_ - 1) return false;
        return true;
    }

    // Construction-time mutator; the rewrite operations below are pure.
    void connect(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph::connect: self-loop");
        if (has_edge(u, v)) throw std::invalid_argument("Graph::connect: edge already present");
        adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }

    template <typename F>
    void for_each_edge(F f) const {
        for (int u = 0; u + 1 < n_; ++u) {
            std::uint64_t rest = adj_[static_cast<std::size_t>(u)] & (~std::uint64_t{0} << (u + 1));
            while (rest) {
                const int v = std::countr_zero(rest);
                rest &= rest - 1;
                f(u, v);
            }
        }
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
    }

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

inline int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
    return d;
}

inline Graph add_edge(const Graph& g, int u, int v) {
    Graph out = g;
    out.connect(u, v);
    return out;
}

inline Graph delete_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("delete_edge: edge absent");
    Graph out(g.order());
    g.for_each_edge([&](int a, int b) {
        if (!((a == u && b == v) || (a == v && b == u))) out.connect(a, b);
    });
    return out;
}

inline Graph remove_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("remove_vertex: vertex out of range");
    Graph out(g.order() - 1);
    g.for_each_edge([&](int a, int b) {
        if (a == v || b == v) return;
        out.connect(a > v ? a - 1 : a, b > v ? b - 1 : b);
    });
    return out;
}

// Identify u and v; the merged vertex takes label min(u,v) and labels above
// max(u,v) shift down by one. A uv edge, if present, vanishes.
inline Graph contract(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("contract: vertices must differ");
    const int lo = std::min(u, v), hi = std::max(u, v);
    Graph out(g.order() - 1);
    g.for_each_edge([&](int a, int b) {
        auto relabel = [&](int w) { return w == hi ? lo : (w > hi ? w - 1 : w); };
        const int x = relabel(a), y = relabel(b);
        if (x != y && !out.has_edge(x, y)) out.connect(x, y);
    });
    return out;
}

inline Graph disjoint_union(const Graph& g, const Graph& h) {
    if (g.order() + h.order() > kMaxOrder)
        throw std::invalid_argument("disjoint_union: combined order exceeds 64");
    Graph out(g.order() + h.order());
    g.for_each_edge([&](int a, int b) { out.connect(a, b); });
    const int off = g.order();
    h.for_each_edge([&](int a, int b) { out.connect(a + off, b + off); });
    return out;
}

inline Graph join(const Graph& g, const Graph& h) {
    Graph out = disjoint_union(g, h);
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < h.order(); ++b) out.connect(a, g.order() + b);
    return out;
}

inline Graph complement(const Graph& g) {
    Graph out(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) out.connect(u, v);
    return out;
}

inline Graph add_isolated(const Graph& g, int p) {
    if (p < 0) throw std::invalid_argument("add_isolated: negative count");
    if (g.order() + p > kMaxOrder) throw std::invalid_argument("add_isolated: order exceeds 64");
    Graph out(g.order() + p);
    g.for_each_edge([&](int a, int b) { out.connect(a, b); });
    return out;
}

// Keeps the vertices in `mask`, relabeled by ascending original label.
inline Graph induced_subgraph(const Graph& g, std::uint64_t mask) {
    std::vector<int> map(static_cast<std::size_t>(g.order()), -1);
    int next = 0;
    for (int v = 0; v < g.order(); ++v)
        if ((mask >> v) & 1u) map[static_cast<std::size_t>(v)] = next++;
    Graph out(next);
    g.for_each_edge([&](int a, int b) {
        if (map[static_cast<std::size_t>(a)] >= 0 && map[static_cast<std::size_t>(b)] >= 0)
            out.connect(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]);
    });
    return out;
}

enum class Family {
    complete,
    empty,
    path,
    cycle,
    complete_bipartite,
    star,
    q,
    path_complement,
    cycle_complement,
};

inline std::optional<Family> family_from_name(std::string_view name) {
    if (name == "complete") return Family::complete;
    if (name == "empty") return Family::empty;
    if (name == "path") return Family::path;
    if (name == "cycle") return Family::cycle;
    if (name == "complete-bipartite") return Family::complete_bipartite;
    if (name == "star") return Family::star;
    if (name == "q") return Family::q;
    if (name == "path-complement") return Family::path_complement;
    if (name == "cycle-complement") return Family::cycle_complement;
    return std::nullopt;
}

inline std::string family_name(Family f) {
    switch (f) {
        case Family::complete: return "complete";
        case Family::empty: return "empty";
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::complete_bipartite: return "complete-bipartite";
        case Family::star: return "star";
        case Family::q: return "q";
        case Family::path_complement: return "path-complement";
        case Family::cycle_complement: return "cycle-complement";
    }
    throw std::logic_error("family_name: unreachable");
}

// Named families with fixed labelings: paths run 0..n-1 in order, cycles
// close the path, Q_n is P_n plus the edge {0,2}, stars have the center
// first, K_{a,b} has the a-side first, complements flip the standard
// labeling of the underlying family.
inline Graph make_family(Family family, std::span<const int> params) {
    auto want = [&](std::size_t count) {
        if (params.size() != count)
            throw std::invalid_argument("make_family: expected " + std::to_string(count) +
                                        " parameter(s) for " + family_name(family));
        for (int p : params)
            if (p <= 0) throw std::invalid_argument("make_family: parameters must be positive");
    };
    auto path = [](int n) {
        Graph g(n);
        for (int v = 0; v + 1 < n; ++v) g.connect(v, v + 1);
        return g;
    };
    auto cycle = [&](int n) {
        if (n < 3) throw std::invalid_argument("make_family: cycle needs n >= 3");
        Graph g = path(n);
        g.connect(n - 1, 0);
        return g;
    };
    switch (family) {
        case Family::complete: {
            want(1);
            Graph g(params[0]);
            for (int u = 0; u < g.order(); ++u)
                for (int v = u + 1; v < g.order(); ++v) g.connect(u, v);
            return g;
        }
        case Family::empty:
            want(1);
            return Graph(params[0]);
        case Family::path:
            want(1);
            return path(params[0]);
        case Family::cycle:
            want(1);
            return cycle(params[0]);
        case Family::complete_bipartite: {
            want(2);
            const int a = params[0], b = params[1];
            if (a + b > kMaxOrder) throw std::invalid_argument("make_family: order exceeds 64");
            Graph g(a + b);
            for (int u = 0; u < a; ++u)
                for (int v = 0; v < b; ++v) g.connect(u, a + v);
            return g;
        }
        case Family::star: {
            want(1);
            Graph g(params[0] + 1);
            for (int v = 1; v <= params[0]; ++v) g.connect(0, v);
            return g;
        }
        case Family::q: {
            want(1);
            if (params[0] < 3) throw std::invalid_argument("make_family: Q_n needs n >= 3");
            Graph g = path(params[0]);
            g.connect(0, 2);
            return g;
        }
        case Family::path_complement:
            want(1);
            return complement(path(params[0]));
        case Family::cycle_complement:
            want(1);
            return complement(cycle(params[0]));
    }
    throw std::invalid_argument("make_family: unknown family");
}

inline Graph make_family(Family family, std::initializer_list<int> params) {
    return make_family(family, std::span<const int>(params.begin(), params.size()));
}

// True iff N(v) induces a clique; vacuously true for degree <= 1.
inline bool is_simplicial(const Graph& g, int v) {
    const std::uint64_t nbrs = g.neighbors(v);
    std::uint64_t rest = nbrs;
    while (rest) {
        const int u = std::countr_zero(rest);
        rest &= rest - 1;
        if (nbrs & ~g.neighbors(u) & ~(std::uint64_t{1} << u)) return false;
    }
    return true;
}

inline bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    std::uint64_t seen = 1;
    std::uint64_t frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
            const int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= g.neighbors(v) & ~seen;
        }
        seen |= next;
        frontier = next;
    }
    return seen == g.vertex_mask();
}

inline bool is_tree(const Graph& g) {
    return g.order() >= 1 && is_connected(g) && g.size() == g.order() - 1;
}

inline bool is_bipartite(const Graph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            std::uint64_t rest = g.neighbors(v);
            while (rest) {
                const int u = std::countr_zero(rest);
                rest &= rest - 1;
                if (color[static_cast<std::size_t>(u)] == -1) {
                    color[static_cast<std::size_t>(u)] = 1 - color[static_cast<std::size_t>(v)];
                    stack.push_back(u);
                } else if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Maximum-cardinality search followed by verification. Returns the
// elimination order (each vertex simplicial among the later ones) iff the
// graph is triangulated.
inline std::optional<std::vector<int>> perfect_elimination_order(const Graph& g) {
    const int n = g.order();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<bool> numbered(static_cast<std::size_t>(n), false);
    std::vector<int> order(static_cast<std::size_t>(n), 0);
    for (int pos = n - 1; pos >= 0; --pos) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!numbered[static_cast<std::size_t>(v)] &&
                (best == -1 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]))
                best = v;
        numbered[static_cast<std::size_t>(best)] = true;
        order[static_cast<std::size_t>(pos)] = best;
        std::uint64_t rest = g.neighbors(best);
        while (rest) {
            const int u = std::countr_zero(rest);
            rest &= rest - 1;
            if (!numbered[static_cast<std::size_t>(u)]) ++weight[static_cast<std::size_t>(u)];
        }
    }
    std::uint64_t later = 0;
    for (int pos = n - 1; pos >= 0; --pos) {
        const int v = order[static_cast<std::size_t>(pos)];
        const std::uint64_t nbrs = g.neighbors(v) & later;
        std::uint64_t rest = nbrs;
        while (rest) {
            const int u = std::countr_zero(rest);
            rest &= rest - 1;
            if (nbrs & ~g.neighbors(u) & ~(std::uint64_t{1} << u)) return std::nullopt;
        }
        later |= std::uint64_t{1} << v;
    }
    return order;
}

inline bool is_chordal(const Graph& g) { return perfect_elimination_order(g).has_value(); }

// Edge-list literal "n; u-v,u-v,...". "n;" alone is the empty graph E_n.
inline Graph parse_edge_list(std::string_view text) {
    auto fail = [&](const std::string& why) { throw ParseError("edge list \"" + std::string(text) + "\": " + why); };
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    auto read_int = [&]() -> int {
        skip_ws();
        std::size_t start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == start) fail("expected a number");
        int value = 0;
        for (std::size_t j = start; j < i; ++j) {
            value = value * 10 + (text[j] - '0');
            if (value > kMaxOrder * kMaxOrder) fail("number out of range");
        }
        return value;
    };
    const int n = read_int();
    if (n > kMaxOrder) fail("order exceeds 64");
    skip_ws();
    if (i >= text.size() || text[i] != ';') fail("expected ';' after the order");
    ++i;
    Graph g(n);
    skip_ws();
    while (i < text.size()) {
        const int u = read_int();
        skip_ws();
        if (i >= text.size() || text[i] != '-') fail("expected '-' in an edge");
        ++i;
        const int v = read_int();
        if (u >= n || v >= n) fail("vertex out of range");
        if (u == v) fail("self-loop");
        if (g.has_edge(u, v)) fail("duplicate edge");
        g.connect(u, v);
        skip_ws();
        if (i < text.size()) {
            if (text[i] != ',') fail("expected ',' between edges");
            ++i;
            skip_ws();
        }
    }
    return g;
}

inline std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + ";";
    bool first = true;
    g.for_each_edge([&](int u, int v) {
        out += first ? " " : ",";
        first = false;
        out += std::to_string(u) + "-" + std::to_string(v);
    });
    return out;
}

}  // namespace gbell
