#pragma once

// Independent verification routes.  Everything here is deliberately computed
// by a different method than the engine modules it cross-checks: closed-form
// products, recurrences, counting DPs, and brute-force enumerations.

#include <stdexcept>
#include <vector>

#include "aclt/bigint.hpp"
#include "aclt/rational.hpp"

namespace aclt::oracle {

/// (n-1)!! as the literal product 1*3*5*...*(n-1); even moments of N(0,1).
inline BigInt normal_even_moment(int n) {
    if (n % 2 != 0) throw std::invalid_argument("normal_even_moment: n must be even");
    BigInt r = 1;
    for (int i = 1; i <= n - 1; i += 2) r *= BigInt(i);
    return r;
}

/// Number of perfect matchings of {1..n} by bitmask counting DP (n <= ~20).
inline BigInt matchings_count(int n) {
    if (n % 2 != 0) return 0;
    if (n == 0) return 1;
    std::vector<BigInt> f(std::size_t{1} << n, BigInt(0));
    f[0] = 1;
    for (std::size_t mask = 1; mask < f.size(); ++mask) {
        int lo = 0;
        while (!((mask >> lo) & 1u)) ++lo;
        for (int j = lo + 1; j < n; ++j) {
            if (!((mask >> j) & 1u)) continue;
            std::size_t rest = mask & ~(std::size_t{1} << lo) & ~(std::size_t{1} << j);
            f[mask] += f[rest];
        }
    }
    return f[f.size() - 1];
}

/// n! / ( ((n+2)/2)! (n/2)! ): the count of noncrossing pair partitions.
inline BigInt catalan_count(int n) {
    if (n % 2 != 0) throw std::invalid_argument("catalan_count: n must be even");
    unsigned un = static_cast<unsigned>(n);
    BigInt r = factorial(un);
    BigInt d = factorial((un + 2) / 2) * factorial(un / 2);
    // exact: divide via rational reduction
    Rational q(r, d);
    if (!q.is_integer()) throw std::logic_error("catalan_count: formula not integral");
    return q.num();
}

/// Ordered-set-partition count by brute force: for each codomain size k,
/// enumerate all k^n functions and count the surjections.
inline BigInt fubini_bruteforce(int n, int max_blocks) {
    BigInt total = 0;
    for (int k = 1; k <= max_blocks && k <= n; ++k) {
        std::vector<int> f(static_cast<std::size_t>(n), 0);
        BigInt count = 0;
        while (true) {
            unsigned hit = 0;
            for (int v : f) hit |= 1u << v;
            if (hit == (1u << k) - 1u) count += 1;
            int pos = 0;
            while (pos < n && f[static_cast<std::size_t>(pos)] == k - 1) f[static_cast<std::size_t>(pos++)] = 0;
            if (pos == n) break;
            ++f[static_cast<std::size_t>(pos)];
        }
        total += count;
    }
    return total;
}

/// Ordered-set-partition count via the Stirling recurrence: sum_b b! S(n,b).
inline BigInt fubini_stirling(int n, int max_blocks) {
    std::vector<std::vector<BigInt>> s(static_cast<std::size_t>(n) + 1,
                                       std::vector<BigInt>(static_cast<std::size_t>(n) + 1, BigInt(0)));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int b = 1; b <= i; ++b)
            s[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)] =
                s[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(b) - 1] +
                BigInt(b) * s[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(b)];
    BigInt total = 0;
    for (int b = 1; b <= n && b <= max_blocks; ++b)
        total += factorial(static_cast<unsigned>(b)) * s[static_cast<std::size_t>(n)][static_cast<std::size_t>(b)];
    return total;
}

/// Even moments of the arcsine law on (-sqrt(2), sqrt(2)) by the Wallis
/// recurrence m_{2k} = m_{2k-2} * (2k-1)/k, m_0 = 1.
inline Rational arcsine_even_moment(int n) {
    if (n % 2 != 0) throw std::invalid_argument("arcsine_even_moment: n must be even");
    Rational m = 1;
    for (int k = 1; 2 * k <= n; ++k) m *= Rational(2 * k - 1, k);
    return m;
}

/// Classical moment E ((X_1+...+X_N)/sqrt(N))^n for iid symmetric Bernoullis,
/// directly from the binomial distribution of the sum; exact for even n, and
/// identically zero for odd n by symmetry.
inline Rational bernoulli_sum_moment(int N, int n) {
    if (n % 2 != 0) return 0;
    BigInt num = 0;
    for (int k = 0; k <= N; ++k) {
        BigInt term = binomial(static_cast<unsigned>(N), static_cast<unsigned>(k));
        BigInt base = N - 2 * k;
        BigInt p = 1;
        for (int e = 0; e < n; ++e) p *= base;
        num += term * p;
    }
    BigInt den = 1;
    for (int e = 0; e < N; ++e) den *= BigInt(2);
    for (int e = 0; e < n / 2; ++e) den *= BigInt(N);
    return Rational(num, den);
}

/// Catalan numbers by the convolution recurrence (independent of the
/// factorial formula above).
inline BigInt catalan_recurrence(int half_n) {
    std::vector<BigInt> c(static_cast<std::size_t>(half_n) + 1, BigInt(0));
    c[0] = 1;
    for (int m = 1; m <= half_n; ++m)
        for (int i = 0; i < m; ++i)
            c[static_cast<std::size_t>(m)] +=
                c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(m - 1 - i)];
    return c[static_cast<std::size_t>(half_n)];
}

}  // namespace aclt::oracle
