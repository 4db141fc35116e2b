#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <sstream>

#include "gbell/conjectures.hpp"
#include "gbell/suites.hpp"

using namespace gbell;

TEST_CASE("conjecture rows on the equality graphs") {
    Engine engine;
    {
        const ConjectureRow row = check_conjectures(engine, Graph(4));
        REQUIRE(row.A == bound_l1(4));
        REQUIRE(row.eq3);
        REQUIRE(row.c1);
        REQUIRE(row.c2);
        REQUIRE(row.c3);
        REQUIRE(row.chi == 1);
        REQUIRE(row.delta == 0);
    }
    {
        const ConjectureRow row = check_conjectures(engine, clique_plus_isolated(3, 2));
        REQUIRE(row.A == bound_l2(5, 3));
        REQUIRE(row.eq1);
        REQUIRE(row.c1);
        REQUIRE(!row.eq3);
    }
    {
        const ConjectureRow row = check_conjectures(engine, make_family(Family::complete_bipartite, {2, 3}));
        REQUIRE(row.A == make_rational(7, 2));
        REQUIRE(row.A > row.L1);
        REQUIRE(row.A > row.L2);
        REQUIRE(row.A > row.L3);
        REQUIRE((row.c1 && row.c2 && row.c3));
        REQUIRE(!(row.eq1 || row.eq2 || row.eq3));
    }
}

TEST_CASE("removal theorems on named instances") {
    Engine engine;
    {
        // endpoint of P_4 and its neighbor
        const Graph p4 = make_family(Family::path, {4});
        const Rational before = engine.average_colors(p4);
        REQUIRE(before > engine.average_colors(delete_edge(p4, 0, 1)));
    }
    {
        // a vertex of K_5 is simplicial
        const Graph k5 = make_family(Family::complete, {5});
        REQUIRE(engine.average_colors(k5) > engine.average_colors(clique_plus_isolated(4, 1)));
    }
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : cached_catalogue(n))
            for (const RemovalOutcome& o : check_removal_theorems(engine, g)) REQUIRE(o.holds);
    // every vertex of a graph with max degree <= 4 qualifies for the degree rule
    const Graph c5 = make_family(Family::cycle, {5});
    const auto outcomes = check_removal_theorems(engine, c5);
    int degree_rule = 0;
    for (const RemovalOutcome& o : outcomes)
        if (o.rule == "degree-at-most-4") ++degree_rule;
    REQUIRE(degree_rule == 5);
}

TEST_CASE("union comparison instances") {
    Engine engine;
    REQUIRE(check_cycle_vs_path_union(engine, Graph(1), 3));
    REQUIRE(check_q_below_cycle(engine, 3, 5, 0));
    REQUIRE(check_c3_cycle_minimum(engine, 7, 5));
    const auto outcomes = check_union_comparisons(engine, Graph(2), 5);
    REQUIRE(!outcomes.empty());
    for (const UnionComparisonOutcome& o : outcomes) REQUIRE(o.holds);
}

TEST_CASE("cross product dominance") {
    Engine engine;
    const Graph k3 = make_family(Family::complete, {3});
    const Graph p3 = make_family(Family::path, {3});
    REQUIRE(check_cross_product(engine, k3, p3, Graph(1)) == CrossProductOutcome::verified);
    REQUIRE(check_cross_product(engine, p3, p3, Graph(1)) == CrossProductOutcome::premise_not_met);
    REQUIRE(check_cross_product(engine, make_family(Family::cycle, {5}), make_family(Family::path, {5}),
                                make_family(Family::complete, {2})) != CrossProductOutcome::violated);
}

TEST_CASE("chordal peeling") {
    Engine engine;
    {
        // already the chi-extremal graph: nothing to peel on that side
        const ChordalPeel peel = peel_chordal(engine, clique_plus_isolated(3, 2));
        REQUIRE(peel.to_clique.empty());
        REQUIRE(peel.clique_target_ok);
        REQUIRE(engine.average_colors(peel.clique_end) == bound_l2(5, 3));
        REQUIRE(peel.star_target_ok);
        REQUIRE(peel.strictly_decreasing);
        REQUIRE(engine.average_colors(peel.star_end) == bound_l3(5, 3));
    }
    {
        const ChordalPeel peel = peel_chordal(engine, make_family(Family::path, {4}));
        REQUIRE(peel.clique_target_ok);
        REQUIRE(peel.strictly_decreasing);
        REQUIRE(engine.average_colors(peel.clique_end) == bound_l2(4, 2));
        REQUIRE(peel.to_clique.size() == 2);  // P_4 has 3 edges, K_2 remains
    }
    for (const Graph& t : cached_catalogue(6)) {
        if (!is_tree(t)) continue;
        const ChordalPeel peel = peel_chordal(engine, t);
        REQUIRE(peel.star_target_ok);
        REQUIRE(peel.strictly_decreasing);
        REQUIRE(engine.average_colors(peel.star_end) == bound_l3(6, max_degree(t) + 1));
    }
    REQUIRE_THROWS_AS(peel_chordal(engine, make_family(Family::cycle, {4})), std::invalid_argument);
}

TEST_CASE("counterexample remarks") {
    Engine engine;
    const CounterexampleReport rep = check_counterexample_remarks(engine);
    REQUIRE(rep.k24_removals_increase);
    REQUIRE(rep.order_flip);
    REQUIRE(rep.decimals_match);
    REQUIRE(rep.a_k23 == make_rational(7, 2));
    REQUIRE(rep.a_k3_2k1 == make_rational(60, 17));
    REQUIRE(rep.a_k23_k1 == make_rational(58, 15));
    REQUIRE(rep.a_k3_3k1 == make_rational(295, 77));
}

TEST_CASE("sweep over the generator catalogue") {
    SweepOptions opt;
    opt.max_order = 5;
    opt.jobs = 2;
    const SweepReport rep = sweep(opt);
    REQUIRE(rep.rows.size() == 1 + 2 + 4 + 11 + 34);
    REQUIRE(rep.violations == 0);
    REQUIRE(rep.delta_theorems_ok);
    REQUIRE(rep.chordal_ok);
    for (const ClassSummary& s : rep.by_order) {
        REQUIRE(s.unique);
        REQUIRE(s.conjectured);
    }
    for (const ClassSummary& s : rep.by_chi) {
        REQUIRE(s.unique);
        REQUIRE(s.conjectured);
    }
    for (const ClassSummary& s : rep.by_delta) {
        REQUIRE(s.unique);
        REQUIRE(s.conjectured);
    }

    // deterministic report bytes, independent of the worker count
    SweepOptions serial = opt;
    serial.jobs = 1;
    const SweepReport rep1 = sweep(serial);
    std::ostringstream a, b;
    write_report_csv(rep, a);
    write_report_csv(rep1, b);
    REQUIRE(a.str() == b.str());
    REQUIRE(a.str().rfind("key,n,m,chi,delta,B,T,A,A_dec,L1,L2,L3,c1,c2,c3,eq1,eq2,eq3\n", 0) == 0);

    std::ostringstream j;
    write_report_json(rep, j);
    const nlohmann::json doc = nlohmann::json::parse(j.str());
    REQUIRE(doc["rows"].size() == rep.rows.size());
    REQUIRE(doc["summaries"]["violations"] == 0);
    REQUIRE(doc["summaries"]["by_delta"].is_array());
    REQUIRE(doc["rows"][0]["A"].is_string());
}

TEST_CASE("sweep accepts a graph6 file source") {
    std::ostringstream file;
    for (const Graph& g : cached_catalogue(4)) file << to_graph6(g) << "\n";
    const std::string path = "sweep_input_test.g6";
    {
        std::ofstream out(path);
        out << file.str();
    }
    SweepOptions opt;
    opt.graph6_path = path;
    const SweepReport rep = sweep(opt);
    REQUIRE(rep.rows.size() == 11);
    REQUIRE(rep.violations == 0);

    SweepOptions gen;
    gen.min_order = 4;
    gen.max_order = 4;
    const SweepReport rep2 = sweep(gen);
    std::ostringstream a, b;
    write_report_csv(rep, a);
    write_report_csv(rep2, b);
    REQUIRE(a.str() == b.str());
}
