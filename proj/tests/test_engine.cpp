#include <catch2/catch_amalgamated.hpp>

#include "gbell/catalogue.hpp"
#include "gbell/engine.hpp"
#include "gbell/suites.hpp"

using namespace gbell;

namespace {

ColorCountVector vec(std::initializer_list<long long> counts) {
    ColorCountVector out{static_cast<int>(counts.size()), {}};
    for (long long c : counts) out.counts.emplace_back(c);
    return out;
}

}  // namespace

TEST_CASE("s_vector on the base families") {
    Engine engine;
    REQUIRE(engine.s_vector(Graph(3)) == vec({1, 3, 1}));  // Stirling column
    REQUIRE(engine.s_vector(make_family(Family::complete, {3})) == vec({0, 0, 1}));
    REQUIRE(engine.s_vector(make_family(Family::path_complement, {5})) == vec({0, 0, 3, 4, 1}));
}

TEST_CASE("totals on the worked example and the empty family") {
    Engine engine;
    const auto [b5, t5] = engine.bt_of(make_family(Family::path_complement, {5}));
    REQUIRE(b5 == 8);
    REQUIRE(t5 == 30);
    for (int n = 1; n <= 9; ++n) {
        const auto [b, t] = engine.bt_of(Graph(n));
        REQUIRE(b == bell(n));
        REQUIRE(t == two_bell(n));
    }
    const auto [b2, t2] = engine.bt_of(make_family(Family::complete, {2}));
    REQUIRE(b2 == 1);
    REQUIRE(t2 == 2);
}

TEST_CASE("average colors") {
    Engine engine;
    REQUIRE(engine.average_colors(make_family(Family::path_complement, {5})) == make_rational(15, 4));
    for (int n = 1; n <= 8; ++n)
        REQUIRE(engine.average_colors(make_family(Family::complete, {n})) == Rational(n));
    REQUIRE(engine.average_colors(make_family(Family::path, {3})) == make_rational(5, 2));
    REQUIRE_THROWS_AS(engine.average_colors(Graph(0)), std::invalid_argument);
}

TEST_CASE("direct B and T recurrences") {
    Engine engine;
    for (const Graph& g : cached_catalogue(5)) {
        const auto [b, t] = engine.bt_of(g);
        for (int u = 0; u < 5; ++u) {
            for (int v = u + 1; v < 5; ++v) {
                const auto [bm, tm] = engine.bt_of(contract(g, u, v));
                if (g.has_edge(u, v)) {
                    const auto [bd, td] = engine.bt_of(delete_edge(g, u, v));
                    REQUIRE(b == bd - bm);
                    REQUIRE(t == td - tm);
                } else {
                    const auto [ba, ta] = engine.bt_of(add_edge(g, u, v));
                    REQUIRE(b == ba + bm);
                    REQUIRE(t == ta + tm);
                }
            }
        }
    }
}

TEST_CASE("oracle values from hand enumeration") {
    REQUIRE(oracle_s_vector(make_family(Family::path, {3})) == vec({0, 1, 1}));
    const ColorCountVector c4 = oracle_s_vector(make_family(Family::cycle, {4}));
    REQUIRE(c4 == vec({0, 1, 2, 1}));
    REQUIRE(c4.bell_total() == 4);
    const ColorCountVector cb4 = oracle_s_vector(make_family(Family::cycle_complement, {4}));
    REQUIRE(cb4.bell_total() == lucas(4));
    REQUIRE(cb4 == vec({0, 2, 4, 1}));
}

TEST_CASE("engine matches the oracle on every graph up to order 5") {
    Engine engine;
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : cached_catalogue(n))
            REQUIRE(engine.s_vector(g) == oracle_s_vector(g));
}

TEST_CASE("memoization is semantically invisible") {
    Engine plain(Engine::Options{kDefaultEngineLimit, false});
    Engine memo;
    for (int n = 1; n <= 4; ++n)
        for (const Graph& g : cached_catalogue(n))
            REQUIRE(plain.s_vector(g) == memo.s_vector(g));
    REQUIRE(plain.cache_size() == 0);
    REQUIRE(memo.cache_size() > 0);
}

TEST_CASE("order limits") {
    Engine small(Engine::Options{5, true});
    REQUIRE_THROWS_AS(small.s_vector(Graph(6)), EngineLimitError);
    REQUIRE_THROWS_AS(oracle_s_vector(Graph(12)), EngineLimitError);
    REQUIRE_THROWS_AS(oracle_s_vector(Graph(0)), std::invalid_argument);
    Engine wide(Engine::Options{12, true});
    REQUIRE(wide.s_vector(Graph(12)).bell_total() == bell(12));
}

TEST_CASE("chromatic numbers") {
    Engine engine;
    REQUIRE(engine.chromatic_number(make_family(Family::cycle, {5})) == 3);
    REQUIRE(max_degree(make_family(Family::cycle, {5})) == 2);
    REQUIRE(engine.chromatic_number(make_family(Family::complete_bipartite, {2, 3})) == 2);
    REQUIRE(engine.chromatic_number(make_family(Family::path_complement, {5})) == 3);
    REQUIRE(engine.chromatic_number(Graph(4)) == 1);
    REQUIRE_THROWS_AS(engine.chromatic_number(Graph(0)), std::invalid_argument);
    // first nonzero entry of the S-vector
    for (const Graph& g : cached_catalogue(5)) {
        const ColorCountVector s = engine.s_vector(g);
        int first = 0;
        for (int k = 1; k <= 5; ++k)
            if (s.at(k) > 0) { first = k; break; }
        REQUIRE(engine.chromatic_number(g) == first);
    }
}

TEST_CASE("color count vector invariants") {
    Engine engine;
    for (const Graph& g : cached_catalogue(6)) {
        const ColorCountVector s = engine.s_vector(g);
        REQUIRE(s.at(6) == 1);  // the all-singletons partition
        const int chi = engine.chromatic_number(g);
        for (int k = 1; k < chi; ++k) REQUIRE(s.at(k) == 0);
        REQUIRE(s.at(chi) >= 1);
        for (const Integer& c : s.counts) REQUIRE(c >= 0);
    }
}

TEST_CASE("refined counts") {
    const Graph p3 = make_family(Family::path, {3});
    const RefinedCounts empty_w = refined_counts(p3, 0);
    const ColorCountVector s = oracle_s_vector(p3);
    for (int k = 1; k <= 3; ++k) {
        REQUIRE(empty_w.at(k, 0) == s.at(k));
        for (int i = 1; i <= 0; ++i) REQUIRE(empty_w.at(k, i) == 0);
    }

    const Graph k2 = make_family(Family::complete, {2});
    const RefinedCounts full = refined_counts(k2, 0b11);
    REQUIRE(full.at(2, 2) == 1);
    REQUIRE(full.at(1, 0) == 0);
    REQUIRE(full.at(2, 1) == 0);
    REQUIRE(full.at(2, 0) == 0);

    // row sums recover the plain counts
    for (const Graph& g : cached_catalogue(5)) {
        const RefinedCounts rc = refined_counts(g, 0b10110 & g.vertex_mask());
        REQUIRE(rc.totals() == oracle_s_vector(g));
    }
    REQUIRE_THROWS_AS(refined_counts(p3, 0b1000), std::invalid_argument);
}

TEST_CASE("vertex-insertion identities on an endpoint of P_4") {
    Engine engine;
    REQUIRE(addnode_identities_hold(engine, make_family(Family::path, {4}), 0));
    REQUIRE(addnode_identities_hold(engine, make_family(Family::path, {4}), 3));
}

TEST_CASE("repeated calls reuse the cache deterministically") {
    Engine engine;
    const Graph g = make_family(Family::path_complement, {7});
    const ColorCountVector first = engine.s_vector(g);
    const std::size_t entries = engine.cache_size();
    REQUIRE(engine.s_vector(g) == first);
    REQUIRE(engine.cache_size() == entries);
    engine.clear_cache();
    REQUIRE(engine.cache_size() == 0);
    REQUIRE(engine.s_vector(g) == first);
}
