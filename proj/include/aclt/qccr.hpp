#pragma once

// Numerical laboratory for the q^2-commutation relation
//   alpha alpha* - q^2 alpha* alpha = 1 - q^2,   Gamma = 1 - alpha* alpha,
// realized on a depth-D truncation of the canonical weighted right shift
//   alpha* e_k = sqrt(1 - q^(2(k+1))) e_(k+1).
// All relation checks are restricted to the interior block; the truncation
// contaminates only the top level, and its residual is reported separately.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "aclt/matrix.hpp"
#include "aclt/rational.hpp"

namespace aclt {

struct QccrModel {
    Rational q;
    int depth = 0;
    Mat<double> alpha, alpha_star, gamma;

    double qd() const { return q.to_double(); }
};

inline QccrModel qccr_build(const Rational& q, int depth) {
    if (!(q.abs() < Rational(1))) throw std::invalid_argument("qccr_build: |q| must be < 1");
    if (depth < 4) throw std::invalid_argument("qccr_build: depth must be >= 4");
    QccrModel m;
    m.q = q;
    m.depth = depth;
    const std::size_t D = static_cast<std::size_t>(depth);
    const double qv = q.to_double();
    m.alpha_star = Mat<double>(D, D);
    for (std::size_t k = 0; k + 1 < D; ++k)
        m.alpha_star(k + 1, k) = std::sqrt(1.0 - std::pow(qv, 2.0 * (static_cast<double>(k) + 1.0)));
    m.alpha = transpose(m.alpha_star);
    m.gamma = Mat<double>::identity(D) - m.alpha_star * m.alpha;
    return m;
}

struct QccrRelationReport {
    double ccr_interior = 0;        ///< alpha alpha* - q^2 alpha* alpha - (1-q^2)
    double ccr_boundary = 0;        ///< same residual on the truncated top row/col
    double exchange_interior = 0;   ///< alpha Gamma - q^2 Gamma alpha
    double exchange_boundary = 0;
    double gamma_diag_error = 0;    ///< Gamma diagonal against q^(2k)
};

inline QccrRelationReport qccr_check_relations(const QccrModel& m) {
    const std::size_t D = static_cast<std::size_t>(m.depth);
    const double q2 = m.qd() * m.qd();
    Mat<double> ccr = m.alpha * m.alpha_star - q2 * (m.alpha_star * m.alpha) -
                      (1.0 - q2) * Mat<double>::identity(D);
    Mat<double> exch = m.alpha * m.gamma - q2 * (m.gamma * m.alpha);

    QccrRelationReport rep;
    rep.ccr_interior = max_abs_entry(ccr, 0, D - 1, 0, D - 1);
    rep.exchange_interior = max_abs_entry(exch, 0, D - 1, 0, D - 1);
    rep.ccr_boundary = std::max(max_abs_entry(ccr, D - 1, D, 0, D), max_abs_entry(ccr, 0, D, D - 1, D));
    rep.exchange_boundary =
        std::max(max_abs_entry(exch, D - 1, D, 0, D), max_abs_entry(exch, 0, D, D - 1, D));
    for (std::size_t k = 0; k < D; ++k)
        rep.gamma_diag_error = std::max(
            rep.gamma_diag_error, std::abs(m.gamma(k, k) - std::pow(m.qd(), 2.0 * static_cast<double>(k))));
    return rep;
}

enum class InverseMethod { DirectSolve, NeumannSeries };

/// (1 - q^(2j) Gamma)^(-1): direct solve, or the Neumann series over
/// q^(2j) Gamma (Gamma is a contraction, so the series converges).
inline Mat<double> qccr_resolvent(const QccrModel& m, int j, InverseMethod method) {
    const std::size_t D = static_cast<std::size_t>(m.depth);
    const double scale = std::pow(m.qd(), 2.0 * j);
    Mat<double> B = scale * m.gamma;
    if (method == InverseMethod::DirectSolve) return inverse(Mat<double>::identity(D) - B);
    Mat<double> sum = Mat<double>::identity(D), term = Mat<double>::identity(D);
    for (int t = 0; t < 4096; ++t) {
        term = term * B;
        if (max_abs_entry(term) < 1e-17) break;
        sum += term;
    }
    return sum;
}

struct QccrProjections {
    std::vector<Mat<double>> P;  ///< P_0 = 1, ..., P_(k_max+1)
    std::vector<Mat<double>> E;  ///< E_k = P_k - P_(k+1), k = 0..k_max
};

/// P_k = alpha*^k (1 - q^2 Gamma)^(-1) ... (1 - q^(2k) Gamma)^(-1) alpha^k.
inline QccrProjections qccr_projections(const QccrModel& m, int k_max,
                                        InverseMethod method = InverseMethod::DirectSolve) {
    if (k_max + 2 > m.depth / 2)
        throw std::invalid_argument("qccr_projections: need k_max + 2 <= depth/2 below the truncation");
    const std::size_t D = static_cast<std::size_t>(m.depth);
    QccrProjections out;
    out.P.push_back(Mat<double>::identity(D));
    Mat<double> resolvent_chain = Mat<double>::identity(D);
    Mat<double> raise_k = Mat<double>::identity(D), lower_k = Mat<double>::identity(D);
    for (int k = 1; k <= k_max + 1; ++k) {
        resolvent_chain = resolvent_chain * qccr_resolvent(m, k, method);
        raise_k = m.alpha_star * raise_k;
        lower_k = lower_k * m.alpha;
        out.P.push_back(raise_k * resolvent_chain * lower_k);
    }
    for (int k = 0; k <= k_max; ++k)
        out.E.push_back(out.P[static_cast<std::size_t>(k)] - out.P[static_cast<std::size_t>(k) + 1]);
    return out;
}

inline double idempotency_defect(const Mat<double>& p) { return operator_norm(p * p - p); }

/// smallest eigenvalue (symmetrized), for positive-semidefiniteness probes
inline double min_symmetric_eigenvalue(const Mat<double>& a) {
    Mat<double> s = 0.5 * (a + transpose(a));
    double m = std::numeric_limits<double>::infinity();
    for (double e : symmetric_eigenvalues(std::move(s))) m = std::min(m, e);
    return m;
}

/// max entry deviation of E from the rank-one projection onto basis vector k,
/// measured away from the truncation boundary.
inline double basis_projection_error(const Mat<double>& E, std::size_t k, std::size_t interior) {
    double err = 0.0;
    for (std::size_t i = 0; i < interior; ++i)
        for (std::size_t j = 0; j < interior; ++j) {
            double want = (i == k && j == k) ? 1.0 : 0.0;
            err = std::max(err, std::abs(E(i, j) - want));
        }
    return err;
}

/// || Gamma - sum_(k<=K) E_k q^(2k) || on the interior block.
inline double qccr_reconstruct_gamma_error(const QccrModel& m, const QccrProjections& proj, int K) {
    if (K + 1 > static_cast<int>(proj.E.size()))
        throw std::invalid_argument("qccr_reconstruct_gamma_error: not enough E_k");
    const std::size_t D = static_cast<std::size_t>(m.depth);
    Mat<double> sum(D, D);
    for (int k = 0; k <= K; ++k)
        sum += std::pow(m.qd(), 2.0 * k) * proj.E[static_cast<std::size_t>(k)];
    Mat<double> diff = m.gamma - sum;
    for (std::size_t i = 0; i < D; ++i) {
        diff(i, D - 1) = 0.0;
        diff(D - 1, i) = 0.0;
    }
    return operator_norm(diff);
}

struct LadderIsometryReport {
    double isometry_defect = 0;  ///< ||(U E_k)^T (U E_k) - E_k||
    double range_defect = 0;     ///< ||(1 - E_(k+1)) U E_k||
};

/// U = alpha* / sqrt(1 - q^(2(k+1))) must carry the range of E_k onto the
/// range of E_(k+1) isometrically.
inline LadderIsometryReport qccr_ladder_isometry(const QccrModel& m, const QccrProjections& proj, int k) {
    if (k + 2 > static_cast<int>(proj.E.size()))
        throw std::invalid_argument("qccr_ladder_isometry: need E_k and E_(k+1)");
    const std::size_t D = static_cast<std::size_t>(m.depth);
    const double w = std::sqrt(1.0 - std::pow(m.qd(), 2.0 * (k + 1)));
    Mat<double> U = (1.0 / w) * m.alpha_star;
    const Mat<double>& Ek = proj.E[static_cast<std::size_t>(k)];
    const Mat<double>& Ek1 = proj.E[static_cast<std::size_t>(k) + 1];
    Mat<double> UEk = U * Ek;
    LadderIsometryReport rep;
    rep.isometry_defect = operator_norm(transpose(UEk) * UEk - Ek);
    rep.range_defect = operator_norm((Mat<double>::identity(D) - Ek1) * UEk);
    return rep;
}

}  // namespace aclt
