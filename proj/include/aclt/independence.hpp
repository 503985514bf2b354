#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "aclt/words.hpp"

namespace aclt {

enum class IndependenceKind { Tensor, Free, Boolean, Monotone };

inline std::string to_string(IndependenceKind k) {
    switch (k) {
        case IndependenceKind::Tensor: return "tensor";
        case IndependenceKind::Free: return "free";
        case IndependenceKind::Boolean: return "boolean";
        case IndependenceKind::Monotone: return "monotone";
    }
    throw std::logic_error("unreachable");
}

inline IndependenceKind independence_from_string(std::string_view s) {
    if (s == "tensor") return IndependenceKind::Tensor;
    if (s == "free") return IndependenceKind::Free;
    if (s == "boolean") return IndependenceKind::Boolean;
    if (s == "monotone") return IndependenceKind::Monotone;
    throw std::invalid_argument("unknown independence kind: " + std::string(s));
}

inline bool is_fully_exchangeable(IndependenceKind k) { return k != IndependenceKind::Monotone; }

/// Evaluates joint moments of normalized words from single-site moments under
/// one of the built-in independences.  Pure given the distribution; the free
/// rule memoizes on words with sites renamed by first occurrence, which is
/// sound because that rule only ever tests sites for equality.  The memo cache
/// is not synchronized: use one evaluator per thread.
class MomentEvaluator {
public:
    explicit MomentEvaluator(const SiteDistribution& dist) : dist_(&dist) {}

    GaussianRational evaluate(IndependenceKind kind, const NormalWord& w) {
        for (std::size_t i = 0; i + 1 < w.blocks.size(); ++i)
            if (w.blocks[i].site == w.blocks[i + 1].site)
                throw std::invalid_argument("evaluate: word is not in normal form");
        switch (kind) {
            case IndependenceKind::Tensor: return eval_tensor(w);
            case IndependenceKind::Boolean: return eval_boolean(w);
            case IndependenceKind::Free: return eval_free(w.blocks);
            case IndependenceKind::Monotone: return eval_monotone(w.blocks);
        }
        throw std::logic_error("unreachable");
    }

    GaussianRational evaluate(IndependenceKind kind, const Word& w) {
        return evaluate(kind, normalize_word(w));
    }

private:
    const SiteDistribution* dist_;
    std::map<std::vector<int>, GaussianRational> free_cache_;

    // phi(w) = prod over sites s of phi_0(subword of all letters at s, in order)
    GaussianRational eval_tensor(const NormalWord& w) {
        std::map<int, LabelWord> per_site;
        for (const SiteBlock& b : w.blocks) {
            LabelWord& acc = per_site[b.site];
            acc.insert(acc.end(), b.labels.begin(), b.labels.end());
        }
        GaussianRational r{Rational(1)};
        for (const auto& [site, labels] : per_site) {
            r *= dist_->at(labels);
            if (r.is_zero()) return r;
        }
        return r;
    }

    // phi(w) = prod over maximal constant-site runs of phi_0(run)
    GaussianRational eval_boolean(const NormalWord& w) {
        GaussianRational r{Rational(1)};
        for (const SiteBlock& b : w.blocks) {
            r *= dist_->at(b.labels);
            if (r.is_zero()) return r;
        }
        return r;
    }

    // Centering recursion.  For k >= 2 alternating blocks the fully centered
    // product vanishes, so expanding each block as (centered + scalar) and
    // solving for phi(w):
    //   phi(w) = sum over nonempty U of (-1)^(|U|+1) prod_{i in U} phi_0(b_i)
    //            * phi(word with the U-blocks removed and neighbours merged).
    // Subsets containing a block with vanishing phi_0 contribute nothing.
    GaussianRational eval_free(const std::vector<SiteBlock>& blocks) {
        const std::size_t k = blocks.size();
        if (k == 0) return GaussianRational{Rational(1)};
        if (k == 1) return dist_->at(blocks[0].labels);

        std::vector<int> key = canonical_key(blocks);
        if (auto it = free_cache_.find(key); it != free_cache_.end()) return it->second;

        std::vector<std::size_t> support;
        std::vector<GaussianRational> scalars;
        for (std::size_t i = 0; i < k; ++i) {
            GaussianRational s = dist_->at(blocks[i].labels);
            if (!s.is_zero()) {
                support.push_back(i);
                scalars.push_back(std::move(s));
            }
        }

        GaussianRational total;
        const std::size_t m = support.size();
        std::vector<bool> removed(k, false);
        for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
            GaussianRational coeff{Rational(1)};
            int bits = 0;
            for (std::size_t t = 0; t < m; ++t) {
                bool in = (mask >> t) & 1u;
                removed[support[t]] = in;
                if (in) {
                    coeff *= scalars[t];
                    ++bits;
                }
            }
            if (bits % 2 == 0) coeff = -coeff;
            std::vector<SiteBlock> rest;
            rest.reserve(k - static_cast<std::size_t>(bits));
            for (std::size_t i = 0; i < k; ++i) {
                if (removed[i]) continue;
                if (!rest.empty() && rest.back().site == blocks[i].site)
                    rest.back().labels.insert(rest.back().labels.end(), blocks[i].labels.begin(),
                                              blocks[i].labels.end());
                else
                    rest.push_back(blocks[i]);
            }
            total += coeff * eval_free(rest);
        }

        free_cache_.emplace(std::move(key), total);
        return total;
    }

    // Peak rule: repeatedly factor out the leftmost block whose site exceeds
    // both neighbours' sites (the word ends count as site 0), then merge the
    // exposed neighbours if their sites coincide.
    GaussianRational eval_monotone(std::vector<SiteBlock> blocks) {
        GaussianRational r{Rational(1)};
        while (!blocks.empty()) {
            std::size_t peak = blocks.size();
            for (std::size_t i = 0; i < blocks.size(); ++i) {
                int left = i == 0 ? 0 : blocks[i - 1].site;
                int right = i + 1 == blocks.size() ? 0 : blocks[i + 1].site;
                if (blocks[i].site > left && blocks[i].site > right) {
                    peak = i;
                    break;
                }
            }
            // a leftmost maximal-site block is always a strict peak
            r *= dist_->at(blocks[peak].labels);
            if (r.is_zero()) return r;
            blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(peak));
            if (peak > 0 && peak < blocks.size() && blocks[peak - 1].site == blocks[peak].site) {
                blocks[peak - 1].labels.insert(blocks[peak - 1].labels.end(), blocks[peak].labels.begin(),
                                               blocks[peak].labels.end());
                blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(peak));
            }
        }
        return r;
    }

    // sites renamed by first occurrence; layout: [site, len, labels...] per block
    static std::vector<int> canonical_key(const std::vector<SiteBlock>& blocks) {
        std::map<int, int> rename;
        std::vector<int> key;
        for (const SiteBlock& b : blocks) {
            auto it = rename.emplace(b.site, static_cast<int>(rename.size())).first;
            key.push_back(it->second);
            key.push_back(static_cast<int>(b.labels.size()));
            key.insert(key.end(), b.labels.begin(), b.labels.end());
        }
        return key;
    }
};

/// One-shot convenience wrapper; prefer a long-lived MomentEvaluator when
/// evaluating many words against the same distribution.
inline GaussianRational evaluate_moment(IndependenceKind kind, const Word& w, const SiteDistribution& d) {
    MomentEvaluator ev(d);
    return ev.evaluate(kind, w);
}

}  // namespace aclt
