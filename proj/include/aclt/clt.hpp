#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "aclt/independence.hpp"
#include "aclt/partitions.hpp"
#include "aclt/polynomial.hpp"
#include "aclt/words.hpp"

namespace aclt {

/// A central-limit problem: which independence, which single-site moments,
/// and the label sequence (j_1,...,j_n) of the mixed moment of the
/// normalized sums.
struct CltProblem {
    IndependenceKind kind = IndependenceKind::Tensor;
    SiteDistribution dist;
    std::vector<LabelId> labels;
};

/// Exact scalar that may carry a formal factor N^(-1/2): the value of an
/// odd-degree finite-N moment.  half_power == false means the value is plain.
struct ScaledValue {
    GaussianRational coeff;
    bool half_power = false;

    bool is_zero() const { return coeff.is_zero(); }

    friend bool operator==(const ScaledValue&, const ScaledValue&) = default;

    double to_double(long N = 1) const {
        double v = coeff.re.to_double();
        if (half_power) v /= std::sqrt(static_cast<double>(N));
        return v;
    }

    std::string to_string() const {
        if (!half_power || coeff.is_zero()) return coeff.to_string();
        return "(" + coeff.to_string() + ")*N^(-1/2)";
    }
};

enum class FiniteNPath {
    Auto,       ///< unordered collapse when the kind is fully exchangeable
    Ordered,    ///< sum over ordered set partitions, weight C(N, blocks)
    Unordered,  ///< sum over unordered set partitions, weight N(N-1)...(N-b+1)
};

/// phi(S_N^{(j_1)} ... S_N^{(j_n)}) exactly.  Site assignments are grouped by
/// the induced (ordered) set partition, each counted with the number of ways
/// to pick its site values inside {1..N}.
inline ScaledValue finite_n_moment(IndependenceKind kind, const SiteDistribution& dist,
                                   const std::vector<LabelId>& labels, long N,
                                   FiniteNPath path = FiniteNPath::Auto) {
    if (N < 1) throw std::invalid_argument("finite_n_moment: N must be positive");
    if (labels.empty()) throw std::invalid_argument("finite_n_moment: empty label sequence");
    const int n = static_cast<int>(labels.size());
    if (path == FiniteNPath::Auto)
        path = is_fully_exchangeable(kind) ? FiniteNPath::Unordered : FiniteNPath::Ordered;
    if (path == FiniteNPath::Unordered && !is_fully_exchangeable(kind))
        throw std::invalid_argument("finite_n_moment: unordered collapse needs full exchangeability");

    MomentEvaluator ev(dist);
    GaussianRational sum;
    const int max_blocks = static_cast<int>(std::min<long>(n, N));
    if (path == FiniteNPath::Ordered) {
        for_each_ordered_set_partition(n, max_blocks, [&](const std::vector<int>& sites, int b) {
            GaussianRational v = ev.evaluate(kind, word_from_pattern(sites, labels));
            if (v.is_zero()) return;
            sum += GaussianRational{Rational(binomial(static_cast<unsigned>(N), static_cast<unsigned>(b)))} * v;
        });
    } else {
        std::vector<int> sites(static_cast<std::size_t>(n));
        for_each_set_partition(n, max_blocks, [&](const std::vector<int>& a, int b) {
            for (std::size_t i = 0; i < a.size(); ++i) sites[i] = a[i] + 1;
            GaussianRational v = ev.evaluate(kind, word_from_pattern(sites, labels));
            if (v.is_zero()) return;
            sum += GaussianRational{Rational(falling_factorial(static_cast<unsigned>(N), static_cast<unsigned>(b)))} * v;
        });
    }

    Rational scale = Rational(1, N).pow(n / 2);
    ScaledValue out;
    out.coeff = GaussianRational{scale} * sum;
    out.half_power = n % 2 != 0;
    return out;
}

inline ScaledValue finite_n_moment(const CltProblem& p, long N, FiniteNPath path = FiniteNPath::Auto) {
    return finite_n_moment(p.kind, p.dist, p.labels, N, path);
}

/// N -> infinity limit.  Only pair partitions survive: site patterns with a
/// singleton fiber vanish by centering, fibers of three or more are crushed
/// by the N^(-n/2) normalization.  Fully exchangeable kinds sum over
/// unordered pair partitions; the monotone kind keeps the theorem's ordered
/// sum over rank labelings, divided by (n/2)!.
inline GaussianRational limit_moment(IndependenceKind kind, const SiteDistribution& dist,
                                     const std::vector<LabelId>& labels) {
    if (labels.empty()) throw std::invalid_argument("limit_moment: empty label sequence");
    for (LabelId j : labels)
        if (!dist.at({j}).is_zero())
            throw std::invalid_argument("limit_moment: the pair-partition limit needs centered first moments");
    const int n = static_cast<int>(labels.size());
    if (n % 2 != 0) return {};

    MomentEvaluator ev(dist);
    GaussianRational sum;
    std::vector<int> sites(static_cast<std::size_t>(n));
    if (is_fully_exchangeable(kind)) {
        for_each_pair_partition(n, [&](const PairPartition& p) {
            std::vector<int> blk = p.block_of_position();
            for (int pos = 1; pos <= n; ++pos) sites[static_cast<std::size_t>(pos) - 1] = blk[pos] + 1;
            sum += ev.evaluate(kind, word_from_pattern(sites, labels));
        });
        return sum;
    }
    for_each_pair_partition(n, [&](const PairPartition& p) {
        std::vector<int> blk = p.block_of_position();
        std::vector<int> rank(static_cast<std::size_t>(n) / 2);
        for (std::size_t i = 0; i < rank.size(); ++i) rank[i] = static_cast<int>(i) + 1;
        do {
            for (int pos = 1; pos <= n; ++pos)
                sites[static_cast<std::size_t>(pos) - 1] = rank[static_cast<std::size_t>(blk[pos])];
            sum += ev.evaluate(kind, word_from_pattern(sites, labels));
        } while (std::next_permutation(rank.begin(), rank.end()));
    });
    return GaussianRational{Rational(1, 1) / Rational(factorial(static_cast<unsigned>(n / 2)))} * sum;
}

inline GaussianRational limit_moment(const CltProblem& p) { return limit_moment(p.kind, p.dist, p.labels); }

/// sum over pair partitions of q^(crossing number); the q-deformed limit of
/// the single-variable CLT with m2 = 1.
inline Polynomial q_limit_moment(int n) {
    if (n < 0 || n % 2 != 0) return Polynomial{};
    Polynomial out;
    for_each_pair_partition(n, [&](const PairPartition& p) {
        out.add_term(static_cast<std::size_t>(crossing_number(p)), 1);
    });
    return out;
}

// ---------------------------------------------------------------------------
// Hypothesis checkers

struct HypothesisReport {
    bool pass = true;
    std::optional<Word> witness;         ///< first failing word
    std::optional<Word> witness_mapped;  ///< relabeled copy (spreadability checks)
    GaussianRational value;
    GaussianRational mapped_value;
    long long words_checked = 0;
};

namespace detail {

template <class F>
void for_each_label_assignment(const std::vector<LabelId>& letters, int n, F&& f) {
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    std::vector<LabelId> out(static_cast<std::size_t>(n));
    while (true) {
        for (std::size_t i = 0; i < idx.size(); ++i) out[i] = letters[idx[i]];
        f(static_cast<const std::vector<LabelId>&>(out));
        std::size_t pos = 0;
        while (pos < idx.size() && idx[pos] + 1 == letters.size()) idx[pos++] = 0;
        if (pos == idx.size()) break;
        ++idx[pos];
    }
}

// k-subsets of {1..M} in lexicographic order
template <class F>
void for_each_combination(int M, int k, F&& f) {
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        f(static_cast<const std::vector<int>&>(c));
        int i = k - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == M - k + i + 1) --i;
        if (i < 0) break;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j) - 1] + 1;
    }
}

}  // namespace detail

/// Verifies that every word (up to length n_max) whose site pattern has some
/// site occurring exactly once evaluates to zero.  Fails with the first
/// counterexample, enumerated shortest-first.
inline HypothesisReport check_singleton(IndependenceKind kind, const SiteDistribution& dist,
                                        const std::vector<LabelId>& letters, int n_max) {
    HypothesisReport rep;
    MomentEvaluator ev(dist);
    for (int n = 1; n <= n_max && rep.pass; ++n) {
        std::vector<int> sites(static_cast<std::size_t>(n));
        for_each_set_partition(n, n, [&](const std::vector<int>& a, int b) {
            if (!rep.pass) return;
            std::vector<int> fiber(static_cast<std::size_t>(b), 0);
            for (int v : a) ++fiber[static_cast<std::size_t>(v)];
            if (std::find(fiber.begin(), fiber.end(), 1) == fiber.end()) return;
            for (std::size_t i = 0; i < a.size(); ++i) sites[i] = a[i] + 1;
            detail::for_each_label_assignment(letters, n, [&](const std::vector<LabelId>& ls) {
                if (!rep.pass) return;
                ++rep.words_checked;
                Word w = word_from_pattern(sites, ls);
                GaussianRational v = ev.evaluate(kind, w);
                if (!v.is_zero()) {
                    rep.pass = false;
                    rep.witness = w;
                    rep.value = v;
                }
            });
        });
    }
    return rep;
}

enum class InjectionFamily {
    OrderPreserving,  ///< hypothesis (iii): spreadability
    All,              ///< full exchangeability probe
};

/// Verifies invariance of moments under injective site relabelings drawn from
/// the chosen family, for all words up to length n_max; target sites range
/// over {1,...,n_max+2}.
inline HypothesisReport check_spreadability(IndependenceKind kind, const SiteDistribution& dist,
                                            const std::vector<LabelId>& letters, int n_max,
                                            InjectionFamily family = InjectionFamily::OrderPreserving) {
    HypothesisReport rep;
    MomentEvaluator ev(dist);
    const int M = n_max + 2;
    for (int n = 1; n <= n_max && rep.pass; ++n) {
        std::vector<int> base_sites(static_cast<std::size_t>(n));
        std::vector<int> mapped_sites(static_cast<std::size_t>(n));
        for_each_set_partition(n, n, [&](const std::vector<int>& a, int b) {
            if (!rep.pass) return;
            for (std::size_t i = 0; i < a.size(); ++i) base_sites[i] = a[i] + 1;
            detail::for_each_label_assignment(letters, n, [&](const std::vector<LabelId>& ls) {
                if (!rep.pass) return;
                Word base = word_from_pattern(base_sites, ls);
                GaussianRational base_value = ev.evaluate(kind, base);
                detail::for_each_combination(M, b, [&](const std::vector<int>& image) {
                    if (!rep.pass) return;
                    std::vector<int> theta(image);
                    do {
                        for (std::size_t i = 0; i < a.size(); ++i)
                            mapped_sites[i] = theta[static_cast<std::size_t>(a[i])];
                        ++rep.words_checked;
                        Word mapped = word_from_pattern(mapped_sites, ls);
                        GaussianRational v = ev.evaluate(kind, mapped);
                        if (!(v == base_value)) {
                            rep.pass = false;
                            rep.witness = base;
                            rep.witness_mapped = mapped;
                            rep.value = base_value;
                            rep.mapped_value = v;
                            return;
                        }
                    } while (family == InjectionFamily::All && std::next_permutation(theta.begin(), theta.end()));
                });
            });
        });
    }
    return rep;
}

struct BoundReport {
    Rational max_modulus_squared;
    GaussianRational max_value;
    std::optional<Word> witness;
    long long words_checked = 0;

    /// The growth constant C_n when the extremal value is real.
    Rational bound() const {
        if (!max_value.is_real()) throw std::domain_error("BoundReport: extremal moment is not real");
        return max_value.re.abs();
    }
};

/// max |phi(word)| over all length-n site patterns and letter choices; by
/// spreadability the maximum over arbitrary site values is attained on
/// canonical patterns with sites in {1..n}.
inline BoundReport check_bound(IndependenceKind kind, const SiteDistribution& dist,
                               const std::vector<LabelId>& letters, int n) {
    BoundReport rep;
    MomentEvaluator ev(dist);
    std::vector<int> sites(static_cast<std::size_t>(n));
    for_each_set_partition(n, n, [&](const std::vector<int>& a, int) {
        for (std::size_t i = 0; i < a.size(); ++i) sites[i] = a[i] + 1;
        detail::for_each_label_assignment(letters, n, [&](const std::vector<LabelId>& ls) {
            ++rep.words_checked;
            Word w = word_from_pattern(sites, ls);
            GaussianRational v = ev.evaluate(kind, w);
            Rational m2 = v.modulus_squared();
            if (m2 > rep.max_modulus_squared) {
                rep.max_modulus_squared = m2;
                rep.max_value = v;
                rep.witness = w;
            }
        });
    });
    return rep;
}

// ---------------------------------------------------------------------------
// Convergence tables

struct MomentTableRow {
    std::optional<long> N;  ///< empty = the limit row
    int n = 0;
    ScaledValue value;
    std::optional<ScaledValue> signed_error;  ///< finite value minus limit
};

struct MomentTable {
    std::vector<MomentTableRow> rows;
};

/// finite-N rows for each requested N plus the limit row, with exact errors.
inline MomentTable convergence_table(IndependenceKind kind, const SiteDistribution& dist,
                                     const std::vector<LabelId>& labels, const std::vector<long>& Ns) {
    const int n = static_cast<int>(labels.size());
    GaussianRational limit = limit_moment(kind, dist, labels);
    MomentTable table;
    for (long N : Ns) {
        ScaledValue v = finite_n_moment(kind, dist, labels, N);
        ScaledValue err;
        err.half_power = v.half_power;
        err.coeff = v.half_power ? v.coeff : v.coeff - limit;
        table.rows.push_back({N, n, v, err});
    }
    table.rows.push_back({std::nullopt, n, ScaledValue{limit, false}, std::nullopt});
    return table;
}

}  // namespace aclt
