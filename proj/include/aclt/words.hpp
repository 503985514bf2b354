#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "aclt/rational.hpp"

namespace aclt {

using LabelId = int;
/// A finite sequence of labels; the key type of a single-site moment functional.
using LabelWord = std::vector<LabelId>;

/// A finite label set with an involution j -> j' (the adjoint label).
class Alphabet {
public:
    LabelId add_self_adjoint(std::string name) {
        LabelId id = static_cast<LabelId>(names_.size());
        names_.push_back(std::move(name));
        adjoint_.push_back(id);
        return id;
    }

    /// Adds a label and its distinct adjoint; returns (id, id').
    std::pair<LabelId, LabelId> add_adjoint_pair(std::string name, std::string adjoint_name) {
        LabelId a = static_cast<LabelId>(names_.size());
        names_.push_back(std::move(name));
        names_.push_back(std::move(adjoint_name));
        adjoint_.push_back(a + 1);
        adjoint_.push_back(a);
        return {a, a + 1};
    }

    LabelId adjoint(LabelId id) const { return adjoint_.at(static_cast<std::size_t>(id)); }
    const std::string& name(LabelId id) const { return names_.at(static_cast<std::size_t>(id)); }
    std::size_t size() const { return names_.size(); }

    std::optional<LabelId> find(std::string_view name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return static_cast<LabelId>(i);
        return std::nullopt;
    }

    std::vector<LabelId> all_labels() const {
        std::vector<LabelId> v(names_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<LabelId>(i);
        return v;
    }

    LabelWord word_adjoint(const LabelWord& w) const {
        LabelWord out(w.rbegin(), w.rend());
        for (auto& l : out) l = adjoint(l);
        return out;
    }

    /// One self-adjoint generator; the workhorse single-variable alphabet.
    static Alphabet single(std::string name = "b") {
        Alphabet a;
        a.add_self_adjoint(std::move(name));
        return a;
    }

private:
    std::vector<std::string> names_;
    std::vector<LabelId> adjoint_;
};

/// One letter of a monomial: a generator with the given label at the given
/// site, raised to `power`.
struct Letter {
    int site = 1;
    LabelId label = 0;
    int power = 1;

    friend bool operator==(const Letter&, const Letter&) = default;
};

struct Word {
    std::vector<Letter> letters;

    Word() = default;
    explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

    Word& append(int site, LabelId label, int power = 1) {
        letters.push_back({site, label, power});
        return *this;
    }

    friend bool operator==(const Word&, const Word&) = default;
};

/// Builds the word with letter k at site sites[k] carrying labels[k].
inline Word word_from_pattern(std::span<const int> sites, std::span<const LabelId> labels) {
    if (sites.size() != labels.size()) throw std::invalid_argument("word_from_pattern: length mismatch");
    Word w;
    for (std::size_t k = 0; k < sites.size(); ++k) w.append(sites[k], labels[k]);
    return w;
}

/// Maximal run of letters at one site, with the site's label-word spelled out.
struct SiteBlock {
    int site = 1;
    LabelWord labels;

    friend bool operator==(const SiteBlock&, const SiteBlock&) = default;
};

/// A word in normal form: consecutive blocks have distinct sites.
struct NormalWord {
    std::vector<SiteBlock> blocks;

    bool empty() const { return blocks.empty(); }
    std::size_t size() const { return blocks.size(); }

    friend bool operator==(const NormalWord&, const NormalWord&) = default;
};

/// Merges adjacent letters with equal site, expanding powers, so that sites
/// strictly alternate between consecutive blocks.
inline NormalWord normalize_word(const Word& w) {
    NormalWord out;
    for (const Letter& l : w.letters) {
        if (l.site < 1) throw std::invalid_argument("normalize_word: sites must be positive");
        if (l.power < 1) throw std::invalid_argument("normalize_word: powers must be positive");
        if (out.blocks.empty() || out.blocks.back().site != l.site) out.blocks.push_back({l.site, {}});
        for (int p = 0; p < l.power; ++p) out.blocks.back().labels.push_back(l.label);
    }
    return out;
}

/// Reverses the letter order and replaces each label by its adjoint.
inline Word word_adjoint(const Word& w, const Alphabet& alphabet) {
    Word out;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        out.append(it->site, alphabet.adjoint(it->label), it->power);
    return out;
}

inline std::string word_to_string(const Word& w, const Alphabet& alphabet) {
    std::string s;
    for (const Letter& l : w.letters) {
        if (!s.empty()) s += " ";
        s += alphabet.name(l.label) + "[" + std::to_string(l.site) + "]";
        if (l.power > 1) s += "^" + std::to_string(l.power);
    }
    return s.empty() ? "(empty)" : s;
}

class missing_moment_error : public std::runtime_error {
public:
    explicit missing_moment_error(LabelWord w)
        : std::runtime_error("missing moment for a label-word of length " + std::to_string(w.size())),
          word(std::move(w)) {}

    LabelWord word;
};

/// The single-site joint moment functional: label-words to exact scalars,
/// with the empty word pinned to 1.
class SiteDistribution {
public:
    void set(LabelWord w, GaussianRational v) {
        if (w.empty()) throw std::invalid_argument("SiteDistribution: the empty-word moment is fixed to 1");
        table_[std::move(w)] = std::move(v);
    }

    bool contains(const LabelWord& w) const { return w.empty() || table_.count(w) > 0; }

    const GaussianRational& at(const LabelWord& w) const {
        static const GaussianRational one{Rational(1)};
        if (w.empty()) return one;
        auto it = table_.find(w);
        if (it == table_.end()) throw missing_moment_error(w);
        return it->second;
    }

    const std::map<LabelWord, GaussianRational>& table() const { return table_; }

    /// Moment map of a single label with the prescribed power moments;
    /// moments[k] is the (k+1)-st moment.
    static SiteDistribution from_moments(LabelId label, const std::vector<Rational>& moments) {
        SiteDistribution d;
        LabelWord w;
        for (const Rational& m : moments) {
            w.push_back(label);
            d.set(w, GaussianRational(m));
        }
        return d;
    }

    /// Moments of (delta_{-1} + delta_{1})/2: even moments 1, odd moments 0.
    static SiteDistribution symmetric_bernoulli(LabelId label, int max_degree) {
        std::vector<Rational> m(static_cast<std::size_t>(max_degree));
        for (int k = 1; k <= max_degree; ++k) m[static_cast<std::size_t>(k) - 1] = (k % 2 == 0) ? 1 : 0;
        return from_moments(label, m);
    }

    /// First stored word violating moments(adjoint of w) == conj(moments(w)),
    /// if any.  A missing mirror word counts as a violation.
    std::optional<LabelWord> hermitian_violation(const Alphabet& alphabet) const {
        for (const auto& [w, v] : table_) {
            LabelWord wa = alphabet.word_adjoint(w);
            auto it = table_.find(wa);
            if (it == table_.end() || !(it->second == v.conj())) return w;
        }
        return std::nullopt;
    }

private:
    std::map<LabelWord, GaussianRational> table_;
};

}  // namespace aclt
