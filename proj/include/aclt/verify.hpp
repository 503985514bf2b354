#pragma once

// The cross-validation suite: every check pins its tolerances in code and
// carries a wall-clock budget.  The CLI `verify` subcommand and the
// acceptance binary both run this registry.

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "aclt/clt.hpp"
#include "aclt/fock.hpp"
#include "aclt/opvalued.hpp"
#include "aclt/oracles.hpp"
#include "aclt/qccr.hpp"

namespace aclt {

struct CheckResult {
    std::string name;
    int criterion = 0;
    bool pass = true;
    std::string detail;
    double ms = 0;
    double budget_ms = 0;
};

namespace verify_detail {

class Checker {
public:
    bool ok = true;
    std::ostringstream log;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            log << "FAILED: " << what;
        }
    }
};

inline const std::vector<IndependenceKind> all_kinds{
    IndependenceKind::Tensor, IndependenceKind::Free, IndependenceKind::Boolean, IndependenceKind::Monotone};

inline std::vector<LabelId> bs(int n) { return std::vector<LabelId>(static_cast<std::size_t>(n), 0); }

inline SiteDistribution bernoulli(int deg = 12) { return SiteDistribution::symmetric_bernoulli(0, deg); }

inline void check_tensor_limit(Checker& c) {
    SiteDistribution d = bernoulli();
    const long long expected[] = {1, 3, 15, 105, 945};
    for (int i = 0; i < 5; ++i) {
        int n = 2 * (i + 1);
        auto v = limit_moment(IndependenceKind::Tensor, d, bs(n));
        c.require(v == GaussianRational{Rational(expected[i])},
                  "tensor limit at n=" + std::to_string(n));
        c.require(v == GaussianRational{Rational(oracle::normal_even_moment(n))},
                  "tensor limit vs double-factorial product at n=" + std::to_string(n));
    }
    c.log << "normal moments 1,3,15,105,945 reproduced";
}

inline void check_free_limit(Checker& c) {
    SiteDistribution d = bernoulli();
    const long long expected[] = {1, 2, 5, 14, 42};
    for (int i = 0; i < 5; ++i) {
        int n = 2 * (i + 1);
        auto v = limit_moment(IndependenceKind::Free, d, bs(n));
        c.require(v == GaussianRational{Rational(expected[i])}, "free limit at n=" + std::to_string(n));
        c.require(v == GaussianRational{Rational(oracle::catalan_count(n))},
                  "free limit vs factorial-formula count at n=" + std::to_string(n));
    }
    c.log << "Catalan moments 1,2,5,14,42 reproduced";
}

inline void check_boolean_limit(Checker& c) {
    SiteDistribution d = bernoulli();
    for (int n = 2; n <= 12; n += 2)
        c.require(limit_moment(IndependenceKind::Boolean, d, bs(n)) == GaussianRational{Rational(1)},
                  "boolean limit at n=" + std::to_string(n));
    for (int n = 1; n <= 11; n += 2)
        c.require(limit_moment(IndependenceKind::Boolean, d, bs(n)).is_zero(),
                  "boolean odd limit at n=" + std::to_string(n));
    c.log << "boolean limits are 1 (even) and 0 (odd) through n=12";
}

inline void check_monotone_limit(Checker& c) {
    SiteDistribution d = bernoulli();
    const Rational expected[] = {Rational(1), Rational(3, 2), Rational(5, 2), Rational(35, 8)};
    for (int i = 0; i < 4; ++i) {
        int n = 2 * (i + 1);
        auto v = limit_moment(IndependenceKind::Monotone, d, bs(n));
        c.require(v == GaussianRational{expected[i]}, "monotone limit at n=" + std::to_string(n));
        c.require(v == GaussianRational{oracle::arcsine_even_moment(n)},
                  "monotone limit vs arcsine recurrence at n=" + std::to_string(n));
    }
    c.log << "arcsine moments 1,3/2,5/2,35/8 reproduced";
}

inline void check_fock_cross(Checker& c) {
    SiteDistribution d = bernoulli();
    for (int n = 2; n <= 12; n += 2) {
        c.require(GaussianRational{vacuum_moment({FockFlavor::Boson, {}}, n)} ==
                      limit_moment(IndependenceKind::Tensor, d, bs(n)),
                  "Boson ladder vs tensor limit at n=" + std::to_string(n));
        c.require(GaussianRational{vacuum_moment({FockFlavor::Full, {}}, n)} ==
                      limit_moment(IndependenceKind::Free, d, bs(n)),
                  "Full ladder vs free limit at n=" + std::to_string(n));
        c.require(GaussianRational{vacuum_moment({FockFlavor::Boolean, {}}, n)} ==
                      limit_moment(IndependenceKind::Boolean, d, bs(n)),
                  "Boolean ladder vs boolean limit at n=" + std::to_string(n));
    }
    for (int n = 0; n <= 10; n += 2)
        c.require(vacuum_moment_poly({FockFlavor::QFock, {}}, n) == q_limit_moment(n),
                  "QFock path polynomial vs crossing polynomial at n=" + std::to_string(n));
    for (int n = 1; n <= 11; n += 2)
        for (auto f : {FockFlavor::Full, FockFlavor::Boson, FockFlavor::Boolean})
            c.require(vacuum_moment({f, {}}, n).is_zero(), "odd ladder moment at n=" + std::to_string(n));
    c.log << "all four ladder flavors match the partition-sum limits";
}

inline void check_finite_n_convergence(Checker& c) {
    SiteDistribution d = bernoulli();
    const std::vector<long> Ns{2, 4, 8, 16};
    for (auto kind : all_kinds) {
        for (int n : {4, 6}) {
            auto table = convergence_table(kind, d, bs(n), Ns);
            std::vector<Rational> errs;
            for (std::size_t i = 0; i < Ns.size(); ++i) {
                auto& e = table.rows[i].signed_error;
                c.require(e.has_value() && e->coeff.is_real(), "real error column");
                errs.push_back(e->coeff.re.abs());
            }
            for (std::size_t i = 0; i + 1 < errs.size(); ++i) {
                c.require(errs[i + 1] <= errs[i],
                          "weakly decreasing errors, " + to_string(kind) + " n=" + std::to_string(n));
                if (errs[i + 1].is_zero()) continue;
                Rational ratio = errs[i] / errs[i + 1];
                if (kind == IndependenceKind::Tensor && n == 6 && i == 0) {
                    // the N=2 point still carries a large 16/N^2 correction
                    // (value is 15 - 30/N + 16/N^2): this ratio is exactly
                    // 22/13, below the asymptotic window, and is pinned
                    // exactly instead of window-checked
                    c.require(ratio == Rational(22, 13), "tensor n=6 first error ratio equals 22/13");
                    continue;
                }
                c.require(ratio >= Rational(9, 5) && ratio <= Rational(11, 5),
                          "error ratio in [1.8, 2.2], " + to_string(kind) + " n=" + std::to_string(n) +
                              " N=" + std::to_string(Ns[i]));
            }
        }
    }
    for (long N : Ns) {
        auto v = finite_n_moment(IndependenceKind::Tensor, d, bs(4), N);
        c.require(v.coeff == GaussianRational{Rational(3) - Rational(2, N)},
                  "tensor n=4 closed form 3 - 2/N at N=" + std::to_string(N));
    }
    c.log << "errors decrease with 1/N rate for all four kinds at n=4,6 "
          << "(tensor n=6 first ratio pinned at 22/13)";
}

inline void check_hypotheses(Checker& c) {
    SiteDistribution d = bernoulli(6);
    std::vector<LabelId> letters{0};
    for (auto kind : all_kinds) {
        c.require(check_singleton(kind, d, letters, 6).pass, "singleton condition, " + to_string(kind));
        c.require(check_spreadability(kind, d, letters, 6).pass, "spreadability, " + to_string(kind));
    }
    for (auto kind : {IndependenceKind::Tensor, IndependenceKind::Free, IndependenceKind::Boolean})
        c.require(check_spreadability(kind, d, letters, 5, InjectionFamily::All).pass,
                  "full exchangeability, " + to_string(kind));
    auto mono = check_spreadability(IndependenceKind::Monotone, d, letters, 5, InjectionFamily::All);
    c.require(!mono.pass && mono.witness.has_value() && mono.witness_mapped.has_value(),
              "monotone non-exchangeability witness");
    if (mono.witness.has_value()) {
        Alphabet a = Alphabet::single();
        c.log << "monotone witness: phi(" << word_to_string(*mono.witness, a)
              << ") = " << mono.value.to_string() << " vs phi(" << word_to_string(*mono.witness_mapped, a)
              << ") = " << mono.mapped_value.to_string() << "; all checkers exhaustive to length 6";
    }
}

inline void check_qccr_lab(Checker& c) {
    for (auto q : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
        QccrModel m = qccr_build(q, 32);
        auto rel = qccr_check_relations(m);
        c.require(rel.ccr_interior <= 1e-12, "q^2-CCR interior residual, q=" + q.to_string());
        c.require(rel.exchange_interior <= 1e-12, "exchange relation residual, q=" + q.to_string());
        c.require(rel.gamma_diag_error <= 1e-12, "Gamma spectrum q^(2k), q=" + q.to_string());
        auto proj = qccr_projections(m, 7);
        for (int k = 0; k <= 6; ++k) {
            c.require(idempotency_defect(proj.P[static_cast<std::size_t>(k)]) <= 1e-9,
                      "P_k idempotent, k=" + std::to_string(k));
            c.require(basis_projection_error(proj.E[static_cast<std::size_t>(k)],
                                             static_cast<std::size_t>(k), 31) <= 1e-9,
                      "E_k is the basis projection, k=" + std::to_string(k));
            c.require(min_symmetric_eigenvalue(proj.E[static_cast<std::size_t>(k)]) >= -1e-9,
                      "P_k - P_(k+1) positive, k=" + std::to_string(k));
        }
        for (int k = 0; k <= 6; ++k)
            for (int l = 0; l <= 6; ++l)
                if (k != l)
                    c.require(operator_norm(proj.E[static_cast<std::size_t>(k)] *
                                            proj.E[static_cast<std::size_t>(l)]) <= 1e-9,
                              "E_k E_l orthogonal");
        double err = qccr_reconstruct_gamma_error(m, proj, 6);
        double bound = std::pow(q.to_double(), 14.0) + 1e-9;
        c.require(err <= bound, "Gamma reconstruction tail bound, q=" + q.to_string());
        for (int k = 0; k <= 5; ++k) {
            auto ladder = qccr_ladder_isometry(m, proj, k);
            c.require(ladder.isometry_defect <= 1e-9 && ladder.range_defect <= 1e-9,
                      "ladder isometry E_k -> E_(k+1), k=" + std::to_string(k));
        }
    }
    c.log << "relations, projections, and Gamma reconstruction verified at q=1/4,1/2,3/4, depth 32";
}

inline void check_opvalued(Checker& c) {
    // 100 seeded M_2-valued instances with m = 2
    const std::uint64_t base_seed = 20240901;
    std::vector<std::vector<ObservableBlocks>> instances;
    for (int i = 0; i < 100; ++i) {
        ObservableSampler sampler(base_seed + static_cast<std::uint64_t>(i), 2, 2);
        std::vector<ObservableBlocks> obs;
        for (int k = 0; k < 8; ++k) obs.push_back(sampler.sample("o" + std::to_string(k)));
        instances.push_back(std::move(obs));
    }
    for (int i = 0; i < 100; ++i) {
        int n = 1 + i % 8;
        std::span<const ObservableBlocks> word(instances[static_cast<std::size_t>(i)].data(),
                                               static_cast<std::size_t>(n));
        c.require(opvalued_vacuum_moment(word) == opvalued_limit_formula(word),
                  "vacuum moment equals limit formula, instance " + std::to_string(i));
    }
    // entrywise 1/N decay on the degree-4 prefixes of the same instances
    const std::vector<long> Ns{2, 4, 8, 16};
    for (int i = 0; i < 100; ++i) {
        std::span<const ObservableBlocks> word(instances[static_cast<std::size_t>(i)].data(), 4);
        BScalar limit = opvalued_limit_formula(word);
        BScalar first_scaled;
        for (std::size_t t = 0; t < Ns.size(); ++t) {
            BScalar err = opvalued_finite_n_moment(word, Ns[t]).coeff - limit;
            BScalar scaled = GaussianRational{Rational(Ns[t])} * err;
            if (t == 0)
                first_scaled = scaled;
            else
                c.require(scaled == first_scaled,
                          "error is exactly c/N entrywise, instance " + std::to_string(i));
        }
    }
    // d = 1 specialization reproduces the scalar boolean limits
    ObservableBlocks scalar;
    scalar.label = "b";
    scalar.d = 1;
    scalar.m = 1;
    scalar.alpha = BScalar(1, 1);
    BScalar unit(1, 1);
    unit(0, 0) = GaussianRational{Rational(1)};
    scalar.beta = {unit};
    scalar.gamma = {unit};
    scalar.delta = {{BScalar(1, 1)}};
    SiteDistribution d1 = bernoulli();
    for (int n = 2; n <= 12; n += 2) {
        std::vector<ObservableBlocks> obs(static_cast<std::size_t>(n), scalar);
        auto v = opvalued_limit_formula(obs);
        c.require(v(0, 0) == GaussianRational{Rational(1)}, "d=1 limit is 1 at n=" + std::to_string(n));
        c.require(v(0, 0) == limit_moment(IndependenceKind::Boolean, d1, bs(n)),
                  "d=1 equals scalar boolean limit at n=" + std::to_string(n));
    }
    c.log << "appendix identity exact on 100 seeded instances; finite-N errors are exactly c/N at n=4; "
          << "d=1 reduces to the scalar boolean CLT";
}

inline void check_partitions(Checker& c) {
    for (int n = 2; n <= 12; n += 2) {
        long long count = 0;
        BigInt noncrossing = 0;
        for_each_pair_partition(n, [&](const PairPartition& p) {
            ++count;
            if (is_noncrossing(p)) noncrossing += 1;
        });
        c.require(BigInt(count) == double_factorial(n - 1), "(n-1)!! pairings at n=" + std::to_string(n));
        c.require(BigInt(count) == oracle::matchings_count(n),
                  "pairings vs counting DP at n=" + std::to_string(n));
        c.require(noncrossing == oracle::catalan_count(n), "Catalan count at n=" + std::to_string(n));
    }
    for (int n = 1; n <= 8; ++n) {
        long long count = 0;
        for_each_ordered_set_partition(n, n, [&](const std::vector<int>&, int) { ++count; });
        c.require(BigInt(count) == oracle::fubini_bruteforce(n, n),
                  "Fubini count vs surjection brute force at n=" + std::to_string(n));
    }
    std::vector<int> census(4, 0);
    for_each_pair_partition(6, [&](const PairPartition& p) {
        int cr = crossing_number(p);
        if (cr < 4) ++census[static_cast<std::size_t>(cr)];
    });
    c.require(census == std::vector<int>{5, 6, 3, 1}, "crossing census (5,6,3,1) at n=6");
    c.log << "pairing, Catalan, Fubini counts and the crossing census verified";
}

}  // namespace verify_detail

inline std::vector<CheckResult> run_verification(const std::string& only = "") {
    using verify_detail::Checker;
    struct Entry {
        const char* name;
        int criterion;
        double budget_ms;
        std::function<void(Checker&)> fn;
    };
    const std::vector<Entry> entries{
        {"tensor-limit", 1, 1000, verify_detail::check_tensor_limit},
        {"free-limit", 2, 1000, verify_detail::check_free_limit},
        {"boolean-limit", 3, 1000, verify_detail::check_boolean_limit},
        {"monotone-limit", 4, 5000, verify_detail::check_monotone_limit},
        {"fock-cross", 5, 10000, verify_detail::check_fock_cross},
        {"finite-n-convergence", 6, 60000, verify_detail::check_finite_n_convergence},
        {"hypotheses", 7, 60000, verify_detail::check_hypotheses},
        {"qccr", 8, 10000, verify_detail::check_qccr_lab},
        {"opvalued", 9, 120000, verify_detail::check_opvalued},
        {"partitions", 10, 30000, verify_detail::check_partitions},
    };
    std::vector<CheckResult> results;
    for (const auto& e : entries) {
        if (!only.empty() && std::string(e.name).find(only) == std::string::npos) continue;
        CheckResult r;
        r.name = e.name;
        r.criterion = e.criterion;
        r.budget_ms = e.budget_ms;
        Checker c;
        auto t0 = std::chrono::steady_clock::now();
        try {
            e.fn(c);
        } catch (const std::exception& ex) {
            c.ok = false;
            c.log << "EXCEPTION: " << ex.what();
        }
        auto t1 = std::chrono::steady_clock::now();
        r.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        r.pass = c.ok;
        r.detail = c.log.str();
        if (r.ms > r.budget_ms) {
            r.pass = false;
            r.detail += " [over budget: " + std::to_string(r.ms) + " ms > " +
                        std::to_string(r.budget_ms) + " ms]";
        }
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace aclt
