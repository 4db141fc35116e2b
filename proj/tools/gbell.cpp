// gbell: exact graphical Bell number toolkit.
//
// Subcommands: compute (one graph), family (closed-form tables), verify
// (identity and inequality suites), sweep (exhaustive conjecture runs with
// CSV/JSON reports), oracle (engine vs brute-force cross-check).
//
// Exit codes: 0 success, 1 check failure, 2 input error, 3 resource limit.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "gbell/catalogue.hpp"
#include "gbell/closed_forms.hpp"
#include "gbell/conjectures.hpp"
#include "gbell/engine.hpp"
#include "gbell/graph.hpp"
#include "gbell/graph6.hpp"
#include "gbell/numbers.hpp"
#include "gbell/suites.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceLimit = 3;

int engine_limit_from_env() {
    const char* raw = std::getenv("GBELL_ENGINE_LIMIT");
    if (raw == nullptr) return gbell::kDefaultEngineLimit;
    try {
        const int value = std::stoi(raw);
        if (value < 1 || value > gbell::kMaxOrder) throw std::out_of_range("range");
        return value;
    } catch (const std::exception&) {
        throw gbell::ParseError("GBELL_ENGINE_LIMIT must be an integer in [1, 64]");
    }
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw gbell::ParseError(std::string(what) + ": bad integer '" + item + "'");
        }
    }
    if (out.empty()) throw gbell::ParseError(std::string(what) + ": empty list");
    return out;
}

gbell::Graph graph_from_flags(const std::string& graph6, const std::string& edges,
                              const std::string& family, const std::string& params) {
    const int sources = int(!graph6.empty()) + int(!edges.empty()) + int(!family.empty());
    if (sources != 1)
        throw gbell::ParseError("specify exactly one of --graph6, --edges, --family");
    if (!graph6.empty()) return gbell::parse_graph6(graph6);
    if (!edges.empty()) return gbell::parse_edge_list(edges);
    const auto fam = gbell::family_from_name(family);
    if (!fam) throw gbell::ParseError("unknown family '" + family + "'");
    if (params.empty()) throw gbell::ParseError("--family requires --params");
    const std::vector<int> p = parse_int_list(params, "--params");
    return gbell::make_family(*fam, std::span<const int>(p.data(), p.size()));
}

int cmd_compute(const std::string& graph6, const std::string& edges, const std::string& family,
                const std::string& params, int engine_limit) {
    const gbell::Graph g = graph_from_flags(graph6, edges, family, params);
    gbell::Engine engine(gbell::Engine::Options{engine_limit, true});
    const gbell::ColorCountVector s = engine.s_vector(g);
    std::cout << "n: " << g.order() << "\n"
              << "m: " << g.size() << "\n"
              << "chi: " << engine.chromatic_number(g) << "\n"
              << "delta: " << gbell::max_degree(g) << "\n";
    std::cout << "S:";
    for (const gbell::Integer& x : s.counts) std::cout << ' ' << x;
    std::cout << "\n";
    const gbell::Integer b = s.bell_total();
    const gbell::Integer t = s.block_total();
    const gbell::Rational a = gbell::make_rational(t, b);
    std::cout << "B: " << b << "\nT: " << t << "\nA: " << gbell::to_fraction_string(a) << " = "
              << gbell::to_decimal_string(a) << "\n";
    return kExitOk;
}

int cmd_family(const std::string& name, int min_n, int max_n, int p, int engine_limit) {
    const auto fam = gbell::family_from_name(name);
    const bool table_family = fam && (*fam == gbell::Family::empty || *fam == gbell::Family::path ||
                                      *fam == gbell::Family::cycle || *fam == gbell::Family::complete ||
                                      *fam == gbell::Family::path_complement ||
                                      *fam == gbell::Family::cycle_complement);
    if (!table_family) throw gbell::ParseError("no closed form table for family '" + name + "'");
    gbell::Engine engine(gbell::Engine::Options{engine_limit, true});
    bool all_match = true;
    std::cout << "family: " << name << (p > 0 ? " u " + std::to_string(p) + "K_1" : "") << "\n";
    std::cout << "n\tformula\tdecimal\tengine\tmatch\n";
    for (int n = min_n; n <= max_n; ++n) {
        gbell::Rational formula;
        gbell::Graph g;
        std::optional<gbell::Integer> b_formula;
        try {
            switch (*fam) {
                case gbell::Family::empty:
                    formula = gbell::a_empty(n);
                    g = gbell::add_isolated(gbell::Graph(n), p);
                    break;
                case gbell::Family::path:
                    formula = gbell::a_tree_plus_isolated(n, p);
                    g = gbell::add_isolated(gbell::make_family(gbell::Family::path, {n}), p);
                    break;
                case gbell::Family::cycle:
                    formula = gbell::a_cycle_plus_isolated(n, p);
                    g = gbell::add_isolated(gbell::make_family(gbell::Family::cycle, {n}), p);
                    break;
                case gbell::Family::complete:
                    formula = gbell::a_clique_plus_isolated(n, p);
                    g = gbell::clique_plus_isolated(n, p);
                    break;
                case gbell::Family::path_complement:
                    formula = gbell::a_path_complement(n);
                    b_formula = gbell::b_path_complement(n);
                    g = gbell::make_family(gbell::Family::path_complement, {n});
                    break;
                case gbell::Family::cycle_complement:
                    formula = gbell::a_cycle_complement(n);
                    g = gbell::make_family(gbell::Family::cycle_complement, {n});
                    break;
                default:
                    throw gbell::ParseError("unreachable family");
            }
        } catch (const std::invalid_argument&) {
            continue;  // n below the family's smallest order
        }
        std::cout << n << '\t' << gbell::to_fraction_string(formula);
        if (b_formula) std::cout << " (B=" << *b_formula << ')';
        std::cout << '\t' << gbell::to_decimal_string(formula) << '\t';
        if (g.order() <= engine_limit) {
            const auto [b, t] = engine.bt_of(g);
            const gbell::Rational a = gbell::make_rational(t, b);
            const bool match = a == formula && (!b_formula || b == *b_formula);
            all_match = all_match && match;
            std::cout << gbell::to_fraction_string(a);
            if (b_formula) std::cout << " (B=" << b << ')';
            std::cout << '\t' << (match ? "yes" : "NO");
        } else {
            std::cout << "-\t-";
        }
        std::cout << "\n";
    }
    return all_match ? kExitOk : kExitCheckFailure;
}

int cmd_verify(const std::string& suite, int max_n, unsigned seed, int engine_limit) {
    gbell::Engine engine(gbell::Engine::Options{engine_limit, true});
    gbell::SuiteResult res;
    if (suite == "recurrences") {
        res = gbell::run_recurrence_suite(engine, max_n > 0 ? max_n : 6);
    } else if (suite == "join") {
        res = gbell::run_join_suite(engine, max_n > 0 ? max_n : 9);
    } else if (suite == "union") {
        res = gbell::run_union_suite(engine, 6, 8, 60, seed, max_n > 0 ? max_n : 10);
    } else if (suite == "closed-forms") {
        res = gbell::run_closed_forms_suite(engine);
    } else if (suite == "q-lemmas") {
        res = gbell::run_q_lemma_suite(engine, max_n > 0 ? max_n : 10);
    } else if (suite == "removal-theorems") {
        res = gbell::run_removal_suite(engine, max_n > 0 ? max_n : 7);
    } else if (suite == "counterexamples") {
        res = gbell::run_counterexample_suite(engine);
    } else {
        throw gbell::ParseError("unknown suite '" + suite + "'");
    }
    std::cout << res.name << ": " << res.checked << " checks, " << res.failed << " failures";
    if (res.premise_not_met > 0) std::cout << " (" << res.premise_not_met << " without obligation)";
    std::cout << "\n";
    for (const std::string& f : res.failures) std::cout << "  FAIL " << f << "\n";
    return res.ok() ? kExitOk : kExitCheckFailure;
}

int cmd_sweep(int min_n, int max_n, const std::string& input, const std::string& conjectures,
              const std::string& out_path, const std::string& format, int jobs, int engine_limit) {
    gbell::SweepOptions opt;
    opt.min_order = min_n;
    opt.max_order = max_n;
    opt.engine_limit = engine_limit;
    opt.jobs = jobs > 0 ? jobs : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (!input.empty()) opt.graph6_path = input;
    if (!conjectures.empty()) {
        opt.conjectures = {false, false, false};
        for (int c : parse_int_list(conjectures, "--conjectures")) {
            if (c < 1 || c > 3) throw gbell::ParseError("--conjectures entries must be 1, 2 or 3");
            opt.conjectures[static_cast<std::size_t>(c - 1)] = true;
        }
    }
    if (format != "csv" && format != "json") throw gbell::ParseError("--format must be csv or json");

    const gbell::SweepReport rep = gbell::sweep(opt);

    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw gbell::ParseError("cannot write " + out_path);
        if (format == "csv")
            gbell::write_report_csv(rep, out);
        else
            gbell::write_report_json(rep, out);
    }

    auto all_conjectured = [](const std::vector<gbell::ClassSummary>& list) {
        for (const gbell::ClassSummary& s : list)
            if (!s.unique || !s.conjectured) return false;
        return true;
    };
    std::cout << "graphs: " << rep.rows.size() << "\n"
              << "violations: " << rep.violations << "\n"
              << "skipped over engine limit: " << rep.skipped << "\n"
              << "per-order minimizer is E_n, unique: " << (all_conjectured(rep.by_order) ? "yes" : "no") << "\n"
              << "per-chi minimizer is K_chi u isolated, unique: " << (all_conjectured(rep.by_chi) ? "yes" : "no") << "\n"
              << "per-delta minimizer is the star u isolated, unique: " << (all_conjectured(rep.by_delta) ? "yes" : "no") << "\n"
              << "delta<=2 theorems: " << (rep.delta_theorems_ok ? "ok" : "FAILED") << "\n"
              << "chordal subcatalogue: " << (rep.chordal_ok ? "ok" : "FAILED") << "\n";
    if (!out_path.empty()) std::cout << "report: " << out_path << "\n";
    return rep.violations == 0 ? kExitOk : kExitCheckFailure;
}

int cmd_oracle(int max_n, std::size_t samples, unsigned seed, const std::string& graph6,
               int engine_limit) {
    gbell::Engine engine(gbell::Engine::Options{engine_limit, true});
    std::size_t checked = 0, mismatched = 0;
    auto compare = [&](const gbell::Graph& g) {
        ++checked;
        if (engine.s_vector(g) != gbell::oracle_s_vector(g)) ++mismatched;
    };
    if (!graph6.empty()) {
        compare(gbell::parse_graph6(graph6));
    } else {
        if (max_n < 1 || max_n > gbell::kOracleLimit)
            throw gbell::ParseError("--max-n must be in [1, 11]");
        for (int n = 1; n <= std::min(max_n, gbell::kGeneratorLimit - 1); ++n)
            for (const gbell::Graph& g : gbell::graph_catalogue(n)) compare(g);
        if (max_n >= gbell::kGeneratorLimit) {
            std::mt19937_64 rng(seed);
            for (int n = gbell::kGeneratorLimit; n <= max_n; ++n) {
                for (std::size_t i = 0; i < samples; ++i) {
                    gbell::Graph g(n);
                    for (int u = 0; u < n; ++u)
                        for (int v = u + 1; v < n; ++v)
                            if (rng() & 1u) g.connect(u, v);
                    compare(g);
                }
            }
        }
    }
    std::cout << "checked: " << checked << "\nmismatches: " << mismatched << "\n";
    return mismatched == 0 ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact non-equivalent coloring counts: S(G,k), B(G), T(G), A(G)"};
    app.require_subcommand(1);

    std::string graph6, edges, family, params;
    CLI::App* compute = app.add_subcommand("compute", "invariants of one graph");
    compute->add_option("--graph6", graph6, "graph6 record");
    compute->add_option("--edges", edges, "edge list literal \"n; u-v,u-v\"");
    compute->add_option("--family", family, "family name");
    compute->add_option("--params", params, "family parameters, comma separated");

    std::string fam_name;
    int fam_min_n = 1, fam_max_n = 10, fam_p = 0;
    CLI::App* fam = app.add_subcommand("family", "closed form vs engine table");
    fam->add_option("name", fam_name, "empty|path|cycle|complete|path-complement|cycle-complement")
        ->required();
    fam->add_option("--min-n", fam_min_n, "first order");
    fam->add_option("--max-n", fam_max_n, "last order");
    fam->add_option("--p", fam_p, "isolated vertices to add");

    std::string suite;
    int verify_max_n = 0;
    unsigned verify_seed = gbell::kDefaultSeed;
    CLI::App* verify = app.add_subcommand("verify", "run an identity/inequality suite");
    verify->add_option("suite", suite,
                       "recurrences|join|union|closed-forms|q-lemmas|removal-theorems|counterexamples")
        ->required();
    verify->add_option("--max-n", verify_max_n, "order bound (suite specific default)");
    verify->add_option("--seed", verify_seed, "seed for sampled checks");

    int sweep_min_n = 1, sweep_max_n = 7, sweep_jobs = 0;
    std::string sweep_input, sweep_conj, sweep_out, sweep_format = "csv";
    CLI::App* sw = app.add_subcommand("sweep", "exhaustive conjecture verification");
    sw->add_option("--min-n", sweep_min_n, "smallest order (generator source)");
    sw->add_option("--max-n", sweep_max_n, "largest order (generator source, <= 8)");
    sw->add_option("--input", sweep_input, "graph6 file instead of the generator");
    sw->add_option("--conjectures", sweep_conj, "subset of 1,2,3 (default all)");
    sw->add_option("--out", sweep_out, "report path");
    sw->add_option("--format", sweep_format, "csv|json");
    sw->add_option("--jobs", sweep_jobs, "worker threads (default: hardware)");

    int oracle_max_n = 7;
    std::size_t oracle_samples = 25;
    unsigned oracle_seed = gbell::kDefaultSeed;
    std::string oracle_graph6;
    CLI::App* oracle = app.add_subcommand("oracle", "engine vs brute-force comparison");
    oracle->add_option("--max-n", oracle_max_n, "full catalogue <= 7, sampled 8..11");
    oracle->add_option("--samples", oracle_samples, "random graphs per sampled order");
    oracle->add_option("--seed", oracle_seed, "sampling seed");
    oracle->add_option("--graph6", oracle_graph6, "check one graph");

    try {
        app.parse(argc, argv);
        const int engine_limit = engine_limit_from_env();
        if (compute->parsed()) return cmd_compute(graph6, edges, family, params, engine_limit);
        if (fam->parsed()) return cmd_family(fam_name, fam_min_n, fam_max_n, fam_p, engine_limit);
        if (verify->parsed()) return cmd_verify(suite, verify_max_n, verify_seed, engine_limit);
        if (sw->parsed())
            return cmd_sweep(sweep_min_n, sweep_max_n, sweep_input, sweep_conj, sweep_out,
                             sweep_format, sweep_jobs, engine_limit);
        if (oracle->parsed())
            return cmd_oracle(oracle_max_n, oracle_samples, oracle_seed, oracle_graph6, engine_limit);
        return kExitInputError;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInputError;
    } catch (const gbell::EngineLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResourceLimit;
    } catch (const gbell::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
}
