#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gbell {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Builds a reduced rational with positive denominator from any signed pair.
inline Rational make_rational(Integer num, Integer den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    return Rational(std::move(num), std::move(den));
}

// Always prints an explicit denominator ("15/4", "3/1").
inline std::string to_fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// Correctly rounded fixed-point expansion (round half away from zero).
inline std::string to_decimal_string(const Rational& r, int places = 6) {
    if (places < 0) throw std::invalid_argument("to_decimal_string: negative places");
    Integer num = numerator(r);
    Integer den = denominator(r);
    const bool neg = num < 0;
    if (neg) num = -num;
    Integer scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    Integer scaled = (2 * num * scale + den) / (2 * den);
    Integer whole = scaled / scale;
    Integer frac = scaled % scale;
    std::string out = neg && scaled != 0 ? "-" : "";
    out += whole.str();
    if (places > 0) {
        std::string digits = frac.str();
        out += "." + std::string(places - digits.size(), '0') + digits;
    }
    return out;
}

// Rounds p/q to `places` decimals, returned as an exact rational. Used to
// compare against decimal values quoted elsewhere.
inline Rational round_to_places(const Rational& r, int places) {
    Integer scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    Integer num = numerator(r) * scale;
    const Integer& den = denominator(r);
    Integer scaled;
    if (num >= 0)
        scaled = (2 * num + den) / (2 * den);
    else
        scaled = -Integer((2 * -num + den) / (2 * den));
    return make_rational(scaled, scale);
}

// Memo tables for the classical sequences. Grow-only; computed entries are
// never mutated. Not thread-safe: use one instance per thread (the free
// functions below keep a thread_local one).
class SequenceCache {
public:
    const Integer& bell(int n) {
        check_nonneg(n, "bell");
        grow_bell(n);
        return bell_[static_cast<std::size_t>(n)];
    }

    const Integer& stirling2(int n, int k) {
        check_nonneg(n, "stirling2");
        check_nonneg(k, "stirling2");
        static const Integer zero = 0;
        if (k > n) return zero;
        grow_stirling(n);
        return stirling_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

    // Total blocks over all partitions of an n-set, as the direct sum
    // T_n = sum_k k*{n,k}. The identity T_n = B_{n+1} - B_n is a test
    // subject, not an implementation shortcut.
    const Integer& two_bell(int n) {
        check_nonneg(n, "two_bell");
        while (two_bell_.size() <= static_cast<std::size_t>(n)) {
            const int m = static_cast<int>(two_bell_.size());
            Integer total = 0;
            for (int k = 1; k <= m; ++k) total += k * stirling2(m, k);
            two_bell_.push_back(std::move(total));
        }
        return two_bell_[static_cast<std::size_t>(n)];
    }

    const Integer& fibonacci(int n) {
        check_nonneg(n, "fibonacci");
        while (fib_.size() <= static_cast<std::size_t>(n)) {
            const std::size_t m = fib_.size();
            fib_.push_back(fib_[m - 1] + fib_[m - 2]);
        }
        return fib_[static_cast<std::size_t>(n)];
    }

    const Integer& lucas(int n) {
        check_nonneg(n, "lucas");
        while (lucas_.size() <= static_cast<std::size_t>(n)) {
            const std::size_t m = lucas_.size();
            lucas_.push_back(lucas_[m - 1] + lucas_[m - 2]);
        }
        return lucas_[static_cast<std::size_t>(n)];
    }

    const Integer& binomial(int n, int k) {
        check_nonneg(n, "binomial");
        check_nonneg(k, "binomial");
        static const Integer zero = 0;
        if (k > n) return zero;
        while (pascal_.size() <= static_cast<std::size_t>(n)) {
            const std::size_t m = pascal_.size();
            std::vector<Integer> row(m + 1, 1);
            for (std::size_t j = 1; j < m; ++j)
                row[j] = pascal_[m - 1][j - 1] + pascal_[m - 1][j];
            pascal_.push_back(std::move(row));
        }
        return pascal_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

    const Integer& factorial(int n) {
        check_nonneg(n, "factorial");
        while (fact_.size() <= static_cast<std::size_t>(n)) {
            const std::size_t m = fact_.size();
            fact_.push_back(fact_[m - 1] * static_cast<int>(m));
        }
        return fact_[static_cast<std::size_t>(n)];
    }

private:
    static void check_nonneg(int v, const char* who) {
        if (v < 0) throw std::invalid_argument(std::string(who) + ": negative input");
    }

    void grow_bell(int n) {
        // Bell triangle: each row starts with the last entry of the previous
        // one and ends with the next Bell number.
        while (bell_.size() <= static_cast<std::size_t>(n)) {
            const std::vector<Integer>& prev = triangle_.back();
            std::vector<Integer> row;
            row.reserve(prev.size() + 1);
            row.push_back(prev.back());
            for (const Integer& x : prev) row.push_back(row.back() + x);
            bell_.push_back(row.back());
            triangle_.push_back(std::move(row));
        }
    }

    void grow_stirling(int n) {
        while (stirling_.size() <= static_cast<std::size_t>(n)) {
            const std::size_t m = stirling_.size();
            std::vector<Integer> row(m + 1, 0);
            row[m] = 1;
            for (std::size_t k = 1; k < m; ++k)
                row[k] = Integer(k) * stirling_[m - 1][k] + stirling_[m - 1][k - 1];
            stirling_.push_back(std::move(row));
        }
    }

    std::vector<Integer> bell_{1, 1};
    std::vector<std::vector<Integer>> triangle_{{1}};
    std::vector<std::vector<Integer>> stirling_{{1}};
    std::vector<Integer> two_bell_;
    std::vector<Integer> fib_{0, 1};
    std::vector<Integer> lucas_{2, 1};
    std::vector<std::vector<Integer>> pascal_{{1}};
    std::vector<Integer> fact_{1};
};

inline SequenceCache& sequences() {
    thread_local SequenceCache cache;
    return cache;
}

inline Integer bell(int n) { return sequences().bell(n); }
inline Integer two_bell(int n) { return sequences().two_bell(n); }
inline Integer stirling2(int n, int k) { return sequences().stirling2(n, k); }
inline Integer fibonacci(int n) { return sequences().fibonacci(n); }
inline Integer lucas(int n) { return sequences().lucas(n); }
inline Integer binomial(int n, int k) { return sequences().binomial(n, k); }
inline Integer factorial(int n) { return sequences().factorial(n); }

// Average block count over all partitions of an n-set, (B_{n+1} - B_n)/B_n.
// The equivalent form T_n/B_n is recomputed and compared, not assumed.
inline Rational average_blocks(int n) {
    if (n < 1) throw std::invalid_argument("average_blocks: n must be >= 1");
    Rational via_bell = make_rational(bell(n + 1) - bell(n), bell(n));
    Rational via_blocks = make_rational(two_bell(n), bell(n));
    if (via_bell != via_blocks)
        throw std::logic_error("average_blocks: T_n != B_{n+1} - B_n");
    return via_bell;
}

}  // namespace gbell
