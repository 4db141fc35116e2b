#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include "gbell/canonical.hpp"
#include "gbell/catalogue.hpp"
#include "gbell/graph.hpp"

using namespace gbell;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    Graph h(g.order());
    g.for_each_edge([&](int a, int b) {
        h.connect(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
    });
    return h;
}

}  // namespace

TEST_CASE("keys are invariant under relabeling") {
    const Graph a = parse_edge_list("3; 0-1,1-2");
    const Graph b = parse_edge_list("3; 1-0,0-2");
    REQUIRE(canonical_key(a) == canonical_key(b));

    std::mt19937 rng(17);
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : cached_catalogue(n)) {
            const CanonicalKey key = canonical_key(g);
            std::vector<int> perm(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
            for (int t = 0; t < 3; ++t) {
                std::shuffle(perm.begin(), perm.end(), rng);
                REQUIRE(canonical_key(relabel(g, perm)) == key);
            }
        }
    }
}

TEST_CASE("non-isomorphic graphs get distinct keys") {
    REQUIRE(canonical_key(parse_edge_list("3; 0-1,1-2")) != canonical_key(parse_edge_list("3; 0-1")));
    // same degree sum, different degree sequences
    REQUIRE(canonical_key(make_family(Family::cycle, {4})) != canonical_key(make_family(Family::star, {3})));
    // same degree sequence (2,2,2,2,2,2): two triangles vs the hexagon
    const Graph two_triangles = disjoint_union(make_family(Family::cycle, {3}), make_family(Family::cycle, {3}));
    REQUIRE(canonical_key(two_triangles) != canonical_key(make_family(Family::cycle, {6})));
}

TEST_CASE("keys round-trip through graph_from_key") {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : cached_catalogue(n)) {
            const CanonicalKey key = canonical_key(g);
            const Graph rebuilt = graph_from_key(key);
            REQUIRE(rebuilt.order() == n);
            REQUIRE(canonical_key(rebuilt) == key);
        }
    }
    REQUIRE(canonical_key(Graph(0)).bytes.size() == 1);
    REQUIRE(canonical_key(Graph(1)).bytes.size() == 1);
}

TEST_CASE("isomorphism via keys") {
    REQUIRE(isomorphic(make_family(Family::q, {3}), make_family(Family::cycle, {3})));
    REQUIRE(!isomorphic(make_family(Family::path, {4}), make_family(Family::star, {3})));
    REQUIRE(!isomorphic(Graph(3), Graph(4)));
    REQUIRE_THROWS_AS(isomorphic(Graph(13), Graph(13)), std::invalid_argument);
}

TEST_CASE("twin-free transitive graphs stay exact at the canonicalization limit") {
    // complement of C_12: a single refinement cell with no twins, the case
    // that forces individualization
    const Graph cb12 = make_family(Family::cycle_complement, {12});
    const CanonicalKey key = canonical_key(cb12);
    std::mt19937 rng(23);
    std::vector<int> perm(12);
    for (int i = 0; i < 12; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (int t = 0; t < 4; ++t) {
        std::shuffle(perm.begin(), perm.end(), rng);
        REQUIRE(canonical_key(relabel(cb12, perm)) == key);
    }
    REQUIRE(canonical_key(make_family(Family::cycle, {12})) != key);
}

namespace {

Graph circulant(int n, std::initializer_list<int> chords) {
    Graph g(n);
    for (int v = 0; v < n; ++v)
        for (int c : chords)
            if (!g.has_edge(v, (v + c) % n)) g.connect(v, (v + c) % n);
    return g;
}

}  // namespace

TEST_CASE("individualization handles vertex-transitive stress cases") {
    // Petersen graph: 3-regular, twin-free, girth 5
    Graph petersen(10);
    for (int v = 0; v < 5; ++v) {
        petersen.connect(v, (v + 1) % 5);          // outer cycle
        petersen.connect(5 + v, 5 + (v + 2) % 5);  // inner pentagram
        petersen.connect(v, 5 + v);                // spokes
    }
    std::vector<Graph> stress{petersen, circulant(12, {1, 2}), circulant(12, {1, 3}),
                              circulant(11, {1, 4}), circulant(10, {2, 5})};
    std::mt19937 rng(31);
    for (const Graph& g : stress) {
        const CanonicalKey key = canonical_key(g);
        std::vector<int> perm(static_cast<std::size_t>(g.order()));
        for (int i = 0; i < g.order(); ++i) perm[static_cast<std::size_t>(i)] = i;
        for (int t = 0; t < 6; ++t) {
            std::shuffle(perm.begin(), perm.end(), rng);
            REQUIRE(canonical_key(relabel(g, perm)) == key);
        }
    }
    // same order and size, provably different structure (girth 5 vs triangles)
    REQUIRE(canonical_key(petersen) != canonical_key(circulant(10, {1, 2})));
}

TEST_CASE("above the limit the key falls back to the labeled adjacency") {
    const Graph p13 = make_family(Family::path, {13});
    REQUIRE(canonical_key(p13) == canonical_key(make_family(Family::path, {13})));
    REQUIRE(graph_from_key(canonical_key(p13)) == p13);
    REQUIRE(canonical_key(p13).bytes.size() == 1 + (13 * 12 / 2 + 7) / 8);
}

TEST_CASE("hex rendering") {
    REQUIRE(to_hex(canonical_key(Graph(1))) == "01");
    REQUIRE(to_hex(CanonicalKey{std::string("\x03\xff", 2)}) == "03ff");
}
