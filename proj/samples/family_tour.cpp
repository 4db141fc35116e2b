// Computes B, T and the average color count for a handful of named graphs,
// then shows the closed forms lining up with the engine.

#include <cstdio>

#include "gbell/closed_forms.hpp"
#include "gbell/engine.hpp"
#include "gbell/graph.hpp"

using namespace gbell;

int main() {
    Engine engine;

    const std::pair<const char*, Graph> zoo[] = {
        {"P_5", make_family(Family::path, {5})},
        {"C_6", make_family(Family::cycle, {6})},
        {"K_4", make_family(Family::complete, {4})},
        {"K_{2,3}", make_family(Family::complete_bipartite, {2, 3})},
        {"complement of P_5", make_family(Family::path_complement, {5})},
        {"Q_5", make_family(Family::q, {5})},
    };
    std::printf("%-20s %6s %6s %10s\n", "graph", "B", "T", "A");
    for (const auto& [name, g] : zoo) {
        const auto [b, t] = engine.bt_of(g);
        std::printf("%-20s %6s %6s %10s\n", name, b.str().c_str(), t.str().c_str(),
                    to_decimal_string(make_rational(t, b), 4).c_str());
    }

    std::printf("\npath complements: B equals a Fibonacci number\n");
    for (int n = 1; n <= 10; ++n) {
        const auto [b, t] = engine.bt_of(make_family(Family::path_complement, {n}));
        std::printf("n=%-2d  B=%-4s F_%d=%s  A=%s\n", n, b.str().c_str(), n + 1,
                    fibonacci(n + 1).str().c_str(), to_fraction_string(make_rational(t, b)).c_str());
    }
    return 0;
}
