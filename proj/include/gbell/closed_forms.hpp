#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gbell/engine.hpp"
#include "gbell/graph.hpp"
#include "gbell/numbers.hpp"

namespace gbell {

// A(E_n) = (B_{n+1} - B_n)/B_n.
inline Rational a_empty(int n) {
    if (n < 1) throw std::invalid_argument("a_empty: n must be >= 1");
    return make_rational(bell(n + 1) - bell(n), bell(n));
}

// A(T u pK_1) for any tree T of order n: the value depends on (n, p) only.
inline Rational a_tree_plus_isolated(int n, int p) {
    if (n < 1) throw std::invalid_argument("a_tree_plus_isolated: n must be >= 1");
    if (p < 0) throw std::invalid_argument("a_tree_plus_isolated: p must be >= 0");
    Integer num = 0, den = 0;
    for (int i = 0; i <= p; ++i) {
        num += binomial(p, i) * bell(n + i);
        den += binomial(p, i) * bell(n + i - 1);
    }
    return make_rational(num, den);
}

// A(C_n u pK_1): alternating Bell sums. The signed intermediate sums end
// positive; both totals are checked before the ratio is formed.
inline Rational a_cycle_plus_isolated(int n, int p) {
    if (n < 3) throw std::invalid_argument("a_cycle_plus_isolated: n must be >= 3");
    if (p < 0) throw std::invalid_argument("a_cycle_plus_isolated: p must be >= 0");
    Integer num = 0, den = 0;
    for (int j = 1; j <= n - 1; ++j) {
        const int sign = (j % 2 == 1) ? 1 : -1;
        for (int i = 0; i <= p; ++i) {
            num += sign * binomial(p, i) * bell(n + i - j + 1);
            den += sign * binomial(p, i) * bell(n + i - j);
        }
    }
    if (num <= 0 || den <= 0) throw std::logic_error("a_cycle_plus_isolated: nonpositive alternating sum");
    return make_rational(num, den);
}

// S(K_n u pK_1, k) = sum_j C(k-j,n-j) C(n,j) (n-j)! {p, k-j}.
inline Integer s_clique_plus_isolated(int n, int p, int k) {
    if (n < 1 || p < 0) throw std::invalid_argument("s_clique_plus_isolated: bad parameters");
    if (k < n || k > n + p) throw std::invalid_argument("s_clique_plus_isolated: k out of [n, n+p]");
    Integer total = 0;
    for (int j = 0; j <= n; ++j)
        total += binomial(k - j, n - j) * binomial(n, j) * factorial(n - j) * stirling2(p, k - j);
    return total;
}

inline Rational a_clique_plus_isolated(int n, int p) {
    if (n < 1 || p < 0) throw std::invalid_argument("a_clique_plus_isolated: bad parameters");
    Integer num = 0, den = 0;
    for (int k = n; k <= n + p; ++k) {
        const Integer s = s_clique_plus_isolated(n, p, k);
        num += k * s;
        den += s;
    }
    return make_rational(num, den);
}

// S(G1 u G2, k) from the operand vectors alone:
// sum_i sum_j C(i,j) C(k-j,i-j) (i-j)! S(G1,i) S(G2,k-j).
inline ColorCountVector s_union(const ColorCountVector& s1, const ColorCountVector& s2) {
    const int n = s1.order + s2.order;
    ColorCountVector out{n, std::vector<Integer>(static_cast<std::size_t>(n), 0)};
    for (int k = 1; k <= n; ++k) {
        Integer total = 0;
        for (int i = 1; i <= std::min(k, s1.order); ++i) {
            if (s1.at(i) == 0) continue;
            for (int j = 0; j <= i; ++j) {
                const int k2 = k - j;
                if (k2 < i - j) continue;  // C(k-j, i-j) would be 0 anyway
                if (s2.at(k2) == 0) continue;
                total += binomial(i, j) * binomial(k - j, i - j) * factorial(i - j) * s1.at(i) * s2.at(k2);
            }
        }
        out.counts[static_cast<std::size_t>(k - 1)] = total;
    }
    return out;
}

// A(P-bar_n) = ((n+1) F_{n+2} + (2n-1) F_{n+1}) / (5 F_{n+1}).
inline Rational a_path_complement(int n) {
    if (n < 1) throw std::invalid_argument("a_path_complement: n must be >= 1");
    return make_rational(Integer(n + 1) * fibonacci(n + 2) + Integer(2 * n - 1) * fibonacci(n + 1),
                         5 * fibonacci(n + 1));
}

// B(P-bar_n) = F_{n+1}.
inline Integer b_path_complement(int n) {
    if (n < 1) throw std::invalid_argument("b_path_complement: n must be >= 1");
    return fibonacci(n + 1);
}

// A(C-bar_n) = n F_{n+1} / L_n for n >= 4.
inline Rational a_cycle_complement(int n) {
    if (n < 4) throw std::invalid_argument("a_cycle_complement: n must be >= 4");
    return make_rational(Integer(n) * fibonacci(n + 1), lucas(n));
}

// The conjectured lower bounds. L1 depends on n only; L2/L3 are the averages
// of a clique resp. a star padded with isolated vertices.
inline Rational bound_l1(int n) { return a_empty(n); }

inline Rational bound_l2(int n, int r) {
    if (r < 1 || r > n) throw std::invalid_argument("bound_l2: need 1 <= r <= n");
    return a_clique_plus_isolated(r, n - r);
}

inline Rational bound_l3(int n, int r) {
    if (r < 1 || r > n) throw std::invalid_argument("bound_l3: need 1 <= r <= n");
    Integer num = 0, den = 0;
    for (int i = 0; i <= n - r; ++i) {
        num += binomial(n - r, i) * bell(r + i);
        den += binomial(n - r, i) * bell(r + i - 1);
    }
    return make_rational(num, den);
}

// All three bounds for one parameter pair. For r >= 2 the first bound sits
// strictly below the other two.
struct BoundTriple {
    int n = 0, r = 0;
    Rational l1, l2, l3;
};

inline BoundTriple bounds_for(int n, int r) {
    return {n, r, bound_l1(n), bound_l2(n, r), bound_l3(n, r)};
}

// Outcome of an S-vector identity check; carries the first mismatch so a
// regression names the failing k.
struct VectorIdentityCheck {
    bool ok = true;
    int first_k = 0;
    Integer lhs, rhs;

    explicit operator bool() const { return ok; }

    std::string describe() const {
        if (ok) return "ok";
        return "mismatch at k=" + std::to_string(first_k) + ": " + lhs.str() + " != " + rhs.str();
    }
};

namespace detail {

inline VectorIdentityCheck compare_k_range(int max_k, const ColorCountVector& lhs,
                                           const std::vector<std::pair<Integer, ColorCountVector>>& rhs_terms) {
    for (int k = 1; k <= max_k; ++k) {
        Integer rhs = 0;
        for (const auto& [coeff, vec] : rhs_terms) rhs += coeff * vec.at(k);
        if (lhs.at(k) != rhs) return {false, k, lhs.at(k), rhs};
    }
    return {};
}

}  // namespace detail

// S(Q_n u pK_1, k) = sum_i C(x,i) S(Q_{n+i} u (p-x)K_1, k).
inline VectorIdentityCheck check_q_shift_identity(Engine& engine, int n, int p, int x) {
    if (n < 3 || x < 0 || x > p) throw std::invalid_argument("check_q_shift_identity: need n >= 3, 0 <= x <= p");
    const ColorCountVector lhs = engine.s_vector(add_isolated(make_family(Family::q, {n}), p));
    std::vector<std::pair<Integer, ColorCountVector>> rhs;
    for (int i = 0; i <= x; ++i)
        rhs.emplace_back(binomial(x, i),
                         engine.s_vector(add_isolated(make_family(Family::q, {n + i}), p - x)));
    return detail::compare_k_range(n + p, lhs, rhs);
}

// S(C_n u pK_1, k) = sum_{i=0}^{(n-3)/2} S(Q_{2i+3} u pK_1, k) for odd n.
inline VectorIdentityCheck check_odd_cycle_decomposition(Engine& engine, int n, int p) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("check_odd_cycle_decomposition: n must be odd and >= 3");
    if (p < 0) throw std::invalid_argument("check_odd_cycle_decomposition: p must be >= 0");
    const ColorCountVector lhs = engine.s_vector(add_isolated(make_family(Family::cycle, {n}), p));
    std::vector<std::pair<Integer, ColorCountVector>> rhs;
    for (int i = 0; i <= (n - 3) / 2; ++i)
        rhs.emplace_back(1, engine.s_vector(add_isolated(make_family(Family::q, {2 * i + 3}), p)));
    return detail::compare_k_range(n + p, lhs, rhs);
}

// S(C_3 u (n-3)K_1, k) = S(C_x u (n-x)K_1, k)
//                        + sum_{i=0}^{x-5} alpha_i S(Q_{i+4} u (n-x)K_1, k)
// for odd x with 5 <= x <= n, where alpha_i = C(x-3, i+1), minus one when i
// is odd. (Expanding Q_3 u (n-3)K_1 by the shift identity and subtracting
// the odd-cycle decomposition of C_x leaves exactly these coefficients on
// Q_4 .. Q_{x-1}; all are nonnegative.)
inline VectorIdentityCheck check_c3_expansion(Engine& engine, int n, int x) {
    if (x < 5 || x > n || x % 2 == 0) throw std::invalid_argument("check_c3_expansion: need odd x with 5 <= x <= n");
    const ColorCountVector lhs = engine.s_vector(add_isolated(make_family(Family::cycle, {3}), n - 3));
    std::vector<std::pair<Integer, ColorCountVector>> rhs;
    rhs.emplace_back(1, engine.s_vector(add_isolated(make_family(Family::cycle, {x}), n - x)));
    for (int i = 0; i <= x - 5; ++i) {
        Integer alpha = binomial(x - 3, i + 1);
        if (i % 2 == 1) alpha -= 1;
        if (alpha < 0) throw std::logic_error("check_c3_expansion: negative coefficient");
        rhs.emplace_back(std::move(alpha),
                         engine.s_vector(add_isolated(make_family(Family::q, {i + 4}), n - x)));
    }
    return detail::compare_k_range(n, lhs, rhs);
}

}  // namespace gbell
