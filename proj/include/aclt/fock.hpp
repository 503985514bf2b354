#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "aclt/polynomial.hpp"
#include "aclt/rational.hpp"

namespace aclt {

/// Truncated Fock flavor, identified by its level-indexed down-step weights.
enum class FockFlavor { Full, Boson, Boolean, QFock };

inline std::string to_string(FockFlavor f) {
    switch (f) {
        case FockFlavor::Full: return "full";
        case FockFlavor::Boson: return "boson";
        case FockFlavor::Boolean: return "boolean";
        case FockFlavor::QFock: return "qfock";
    }
    throw std::logic_error("unreachable");
}

inline FockFlavor fock_flavor_from_string(std::string_view s) {
    if (s == "full") return FockFlavor::Full;
    if (s == "boson") return FockFlavor::Boson;
    if (s == "boolean") return FockFlavor::Boolean;
    if (s == "qfock" || s == "q") return FockFlavor::QFock;
    throw std::invalid_argument("unknown Fock flavor: " + std::string(s));
}

/// Weight picked up when the walk steps down from level k (k >= 1):
///   Full 1, Boson k, Boolean [k = 1], QFock [k]_q = 1 + q + ... + q^(k-1).
struct LadderSpec {
    FockFlavor flavor = FockFlavor::Full;
    std::optional<Rational> q;  ///< evaluation point for QFock; empty = symbolic

    Polynomial down_weight(int k) const {
        if (k < 1) throw std::invalid_argument("LadderSpec: level must be >= 1");
        switch (flavor) {
            case FockFlavor::Full: return Polynomial(1);
            case FockFlavor::Boson: return Polynomial(Rational(k));
            case FockFlavor::Boolean: return Polynomial(k == 1 ? 1 : 0);
            case FockFlavor::QFock: return Polynomial::q_integer(static_cast<unsigned>(k));
        }
        throw std::logic_error("unreachable");
    }
};

namespace detail {

// sum over lattice paths 0 -> 0 with steps +-1 staying >= 0, of the product
// of w(level before each down-step); DP over (steps made, current level)
template <class S, class W>
S weighted_dyck_sum(int n, W&& w) {
    if (n < 0) throw std::invalid_argument("weighted_dyck_sum: negative length");
    if (n % 2 != 0) return S(0);
    // f[level] = weighted count of completions after `step` steps
    std::vector<S> cur(static_cast<std::size_t>(n) + 2, S(0)), next;
    cur[0] = S(1);  // completed paths end at level 0
    // walk backwards from the last step
    for (int step = n; step-- > 0;) {
        next.assign(cur.size(), S(0));
        int max_level = std::min(step, n - step);
        for (int level = (step % 2); level <= max_level; level += 2) {
            S acc = cur[static_cast<std::size_t>(level) + 1];  // step up
            if (level >= 1) acc += w(level) * cur[static_cast<std::size_t>(level) - 1];  // step down
            next[static_cast<std::size_t>(level)] = std::move(acc);
        }
        std::swap(cur, next);
    }
    return cur[0];
}

}  // namespace detail

/// <vacuum, (a* + a)^n vacuum> on the Fock space of the given flavor, as a
/// weighted Dyck-path sum; a polynomial in q for the symbolic QFock flavor,
/// constant for the others.  Exact: a length-n walk never climbs past level n,
/// so the level-n truncation is invisible.
inline Polynomial vacuum_moment_poly(const LadderSpec& spec, int n) {
    return detail::weighted_dyck_sum<Polynomial>(n, [&](int level) { return spec.down_weight(level); });
}

/// Scalar vacuum moment; QFock requires an evaluation point q in the ladder.
inline Rational vacuum_moment(const LadderSpec& spec, int n) {
    if (spec.flavor == FockFlavor::QFock) {
        if (!spec.q) throw std::invalid_argument("vacuum_moment: QFock needs a rational q (or use vacuum_moment_poly)");
        return vacuum_moment_poly(spec, n).evaluate(*spec.q);
    }
    Polynomial p = vacuum_moment_poly(spec, n);
    return p.coeff(0);
}

}  // namespace aclt
