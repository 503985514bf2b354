#pragma once

// Conditionally boolean independence with matrix scalars: B = M_d over
// Gaussian rationals, E = B^m, and observables given by their block action
//   [ alpha  beta* ]
//   [ gamma  delta ]
// on the boolean Fock module B + E.  Everything is exact.

#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "aclt/matrix.hpp"
#include "aclt/partitions.hpp"
#include "aclt/rational.hpp"

namespace aclt {

using BScalar = Mat<GaussianRational>;
using BVector = std::vector<BScalar>;  ///< element of E = B^m

/// <x, y> = sum_i x_i* y_i
inline BScalar b_inner(const BVector& x, const BVector& y) {
    if (x.empty() || x.size() != y.size()) throw std::invalid_argument("b_inner: dimension mismatch");
    BScalar r(x[0].rows(), x[0].cols());
    for (std::size_t i = 0; i < x.size(); ++i) r += adjoint(x[i]) * y[i];
    return r;
}

/// The GNS blocks of one observable.  alpha must vanish for centered
/// observables; the CLT operations below require that.
struct ObservableBlocks {
    std::string label;
    int d = 1;  ///< B = M_d
    int m = 1;  ///< E = B^m
    BScalar alpha;
    BVector beta, gamma;
    std::vector<std::vector<BScalar>> delta;  ///< m x m matrix over B

    bool centered() const { return alpha.is_zero(); }

    bool same_shape(const ObservableBlocks& o) const { return d == o.d && m == o.m; }
};

inline void require_same_shape(std::span<const ObservableBlocks> obs) {
    if (obs.empty()) throw std::invalid_argument("observable sequence is empty");
    for (const auto& o : obs)
        if (!o.same_shape(obs[0])) throw std::invalid_argument("observable dimension mismatch");
}

/// adjoint observable: (alpha*, beta <-> gamma swapped, delta*)
inline ObservableBlocks adjoint_observable(const ObservableBlocks& o) {
    ObservableBlocks r;
    r.label = o.label + "'";
    r.d = o.d;
    r.m = o.m;
    r.alpha = adjoint(o.alpha);
    r.beta = o.gamma;
    r.gamma = o.beta;
    r.delta.assign(static_cast<std::size_t>(o.m), std::vector<BScalar>(static_cast<std::size_t>(o.m)));
    for (int i = 0; i < o.m; ++i)
        for (int j = 0; j < o.m; ++j)
            r.delta[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                adjoint(o.delta[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
    return r;
}

namespace detail {

inline void put_block(Mat<GaussianRational>& big, const BScalar& blk, int d, std::size_t bi, std::size_t bj) {
    for (std::size_t i = 0; i < static_cast<std::size_t>(d); ++i)
        for (std::size_t j = 0; j < static_cast<std::size_t>(d); ++j)
            big(bi * static_cast<std::size_t>(d) + i, bj * static_cast<std::size_t>(d) + j) = blk(i, j);
}

}  // namespace detail

/// Operators on B + E = B^(1+m), flattened to d(1+m) x d(1+m) matrices;
/// composition is plain matrix multiplication.
inline Mat<GaussianRational> creator(const BVector& x, int d, int m) {
    if (static_cast<int>(x.size()) != m) throw std::invalid_argument("creator: dimension mismatch");
    Mat<GaussianRational> a(static_cast<std::size_t>(d) * (1 + static_cast<std::size_t>(m)),
                            static_cast<std::size_t>(d) * (1 + static_cast<std::size_t>(m)));
    for (int i = 0; i < m; ++i) detail::put_block(a, x[static_cast<std::size_t>(i)], d, static_cast<std::size_t>(i) + 1, 0);
    return a;
}

inline Mat<GaussianRational> annihilator(const BVector& x, int d, int m) {
    return adjoint(creator(x, d, m));
}

/// Full block action of an observable on B + E.
inline Mat<GaussianRational> observable_block_operator(const ObservableBlocks& o) {
    Mat<GaussianRational> a(static_cast<std::size_t>(o.d) * (1 + static_cast<std::size_t>(o.m)),
                            static_cast<std::size_t>(o.d) * (1 + static_cast<std::size_t>(o.m)));
    detail::put_block(a, o.alpha, o.d, 0, 0);
    for (int j = 0; j < o.m; ++j) detail::put_block(a, adjoint(o.beta[static_cast<std::size_t>(j)]), o.d, 0, static_cast<std::size_t>(j) + 1);
    for (int i = 0; i < o.m; ++i) detail::put_block(a, o.gamma[static_cast<std::size_t>(i)], o.d, static_cast<std::size_t>(i) + 1, 0);
    for (int i = 0; i < o.m; ++i)
        for (int j = 0; j < o.m; ++j)
            detail::put_block(a, o.delta[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], o.d,
                              static_cast<std::size_t>(i) + 1, static_cast<std::size_t>(j) + 1);
    return a;
}

/// omega-compression: the upper-left B-block.
inline BScalar vacuum_compress(const Mat<GaussianRational>& a, int d) {
    BScalar r(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < static_cast<std::size_t>(d); ++i)
        for (std::size_t j = 0; j < static_cast<std::size_t>(d); ++j) r(i, j) = a(i, j);
    return r;
}

/// The surviving chain of the appendix CLT:
///   <beta^(j1), gamma^(j2)> <beta^(j3), gamma^(j4)> ...,
/// the zero matrix for odd length.
inline BScalar opvalued_limit_formula(std::span<const ObservableBlocks> obs) {
    require_same_shape(obs);
    const int d = obs[0].d;
    for (const auto& o : obs)
        if (!o.centered()) throw std::invalid_argument("opvalued_limit_formula: observables must be centered");
    BScalar r = BScalar::identity(static_cast<std::size_t>(d));
    if (obs.size() % 2 != 0) return BScalar(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    for (std::size_t k = 0; k + 1 < obs.size(); k += 2) r = r * b_inner(obs[k].beta, obs[k + 1].gamma);
    return r;
}

/// <omega, (a*(gamma^(j1)) + a(beta^(j1))) ... omega> on the boolean Fock
/// module; must agree with opvalued_limit_formula exactly.
inline BScalar opvalued_vacuum_moment(std::span<const ObservableBlocks> obs) {
    require_same_shape(obs);
    const int d = obs[0].d, m = obs[0].m;
    Mat<GaussianRational> prod =
        Mat<GaussianRational>::identity(static_cast<std::size_t>(d) * (1 + static_cast<std::size_t>(m)));
    for (const auto& o : obs) prod = prod * (creator(o.gamma, d, m) + annihilator(o.beta, d, m));
    return vacuum_compress(prod, d);
}

/// Phi_0 of a product of observables at one site: the omega-compression of
/// the product of the full block actions.
inline BScalar single_site_word_moment(std::span<const ObservableBlocks> obs) {
    require_same_shape(obs);
    const int d = obs[0].d, m = obs[0].m;
    Mat<GaussianRational> prod =
        Mat<GaussianRational>::identity(static_cast<std::size_t>(d) * (1 + static_cast<std::size_t>(m)));
    for (const auto& o : obs) prod = prod * observable_block_operator(o);
    return vacuum_compress(prod, d);
}

/// Exact finite-N moment, carrying a formal N^(-1/2) when n is odd.
struct OpScaledValue {
    BScalar coeff;
    bool half_power = false;
};

/// Phi(S_N ... S_N) under conditional boolean independence: group the N^n
/// site assignments by ordered set partition, factor each word over its
/// maximal constant-site runs via single_site_word_moment, and multiply the
/// B-valued factors in word order.
inline OpScaledValue opvalued_finite_n_moment(std::span<const ObservableBlocks> obs, long N) {
    require_same_shape(obs);
    if (N < 1) throw std::invalid_argument("opvalued_finite_n_moment: N must be positive");
    for (const auto& o : obs)
        if (!o.centered()) throw std::invalid_argument("opvalued_finite_n_moment: observables must be centered");
    const int d = obs[0].d;
    const int n = static_cast<int>(obs.size());

    // all runs are contiguous, so precompute every range compression
    std::vector<std::vector<BScalar>> range(static_cast<std::size_t>(n),
                                            std::vector<BScalar>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            range[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                single_site_word_moment(obs.subspan(static_cast<std::size_t>(i),
                                                    static_cast<std::size_t>(j - i) + 1));

    BScalar sum(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    const int max_blocks = static_cast<int>(std::min<long>(n, N));
    for_each_ordered_set_partition(n, max_blocks, [&](const std::vector<int>& sites, int b) {
        BScalar term = BScalar::identity(static_cast<std::size_t>(d));
        bool zero = false;
        int start = 0;
        for (int pos = 1; pos <= n; ++pos) {
            if (pos == n || sites[static_cast<std::size_t>(pos)] != sites[static_cast<std::size_t>(pos) - 1]) {
                term = term * range[static_cast<std::size_t>(start)][static_cast<std::size_t>(pos) - 1];
                if (term.is_zero()) {
                    zero = true;
                    break;
                }
                start = pos;
            }
        }
        if (zero) return;
        GaussianRational w{Rational(binomial(static_cast<unsigned>(N), static_cast<unsigned>(b)))};
        sum += w * term;
    });

    OpScaledValue out;
    GaussianRational scale{Rational(1, N).pow(n / 2)};
    out.coeff = scale * sum;
    out.half_power = n % 2 != 0;
    return out;
}

/// Hermitian check data: reversing the sequence and adjointing each
/// observable must produce the adjoint moment.
inline std::vector<ObservableBlocks> reversed_adjoint_sequence(std::span<const ObservableBlocks> obs) {
    std::vector<ObservableBlocks> out;
    out.reserve(obs.size());
    for (std::size_t k = obs.size(); k-- > 0;) out.push_back(adjoint_observable(obs[k]));
    return out;
}

namespace detail {

inline GaussianRational submatrix_det(const BScalar& a, const std::vector<std::size_t>& rows,
                                      const std::vector<std::size_t>& cols) {
    if (rows.size() == 1) return a(rows[0], cols[0]);
    GaussianRational r;
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (a(rows[0], cols[c]).is_zero()) continue;
        std::vector<std::size_t> sub_cols;
        for (std::size_t t = 0; t < cols.size(); ++t)
            if (t != c) sub_cols.push_back(cols[t]);
        GaussianRational term = a(rows[0], cols[c]) * submatrix_det(a, sub_rows, sub_cols);
        r += (c % 2 == 0) ? term : -term;
    }
    return r;
}

}  // namespace detail

/// Exact positive-semidefiniteness of a Hermitian B-scalar (small d) via the
/// characteristic polynomial: eigenvalues are all nonnegative exactly when
/// every sum of principal k x k minors is nonnegative.
inline bool is_psd_hermitian(const BScalar& a) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("is_psd_hermitian: square matrix required");
    std::vector<GaussianRational> minor_sum(n + 1);
    std::vector<std::size_t> idx;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        idx.clear();
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1u) idx.push_back(i);
        minor_sum[idx.size()] += detail::submatrix_det(a, idx, idx);
    }
    for (std::size_t k = 1; k <= n; ++k)
        if (!minor_sum[k].is_real() || minor_sum[k].re.is_negative()) return false;
    return true;
}

/// Seeded generator of centered observables with small rational entries.
class ObservableSampler {
public:
    ObservableSampler(std::uint64_t seed, int d, int m) : rng_(seed), d_(d), m_(m) {}

    ObservableBlocks sample(std::string label) {
        ObservableBlocks o;
        o.label = std::move(label);
        o.d = d_;
        o.m = m_;
        o.alpha = BScalar(static_cast<std::size_t>(d_), static_cast<std::size_t>(d_));
        o.beta = sample_vector();
        o.gamma = sample_vector();
        o.delta.assign(static_cast<std::size_t>(m_), std::vector<BScalar>());
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < m_; ++j) o.delta[static_cast<std::size_t>(i)].push_back(sample_scalar());
        return o;
    }

private:
    std::mt19937_64 rng_;
    int d_, m_;

    Rational sample_rational() {
        std::uniform_int_distribution<int> num(-2, 2), den(1, 3);
        return Rational(num(rng_), den(rng_));
    }

    BScalar sample_scalar() {
        BScalar s(static_cast<std::size_t>(d_), static_cast<std::size_t>(d_));
        for (std::size_t i = 0; i < s.rows(); ++i)
            for (std::size_t j = 0; j < s.cols(); ++j) s(i, j) = GaussianRational(sample_rational(), sample_rational());
        return s;
    }

    BVector sample_vector() {
        BVector v;
        for (int i = 0; i < m_; ++i) v.push_back(sample_scalar());
        return v;
    }
};

}  // namespace aclt
