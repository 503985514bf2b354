#pragma once

// Parsing and rendering helpers for the command-line front end.  Exact values
// always travel as strings ("p/q"); doubles are only ever the approximate
// rendering alongside.

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "aclt/clt.hpp"
#include "aclt/opvalued.hpp"
#include "aclt/words.hpp"

namespace aclt::cli {

using ordered_json = nlohmann::ordered_json;

class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        std::string tok = s.substr(pos, comma - pos);
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw input_error("bad integer in list: \"" + tok + "\"");
        }
        pos = comma + 1;
    }
    if (out.empty()) throw input_error("empty integer list");
    return out;
}

inline Rational parse_rational(const std::string& s) {
    try {
        return Rational::from_string(s);
    } catch (const std::exception&) {
        throw input_error("bad rational: \"" + s + "\" (expected p or p/q)");
    }
}

/// entry = "p/q" or [re, im] with rational strings
inline GaussianRational parse_scalar(const ordered_json& j) {
    if (j.is_string()) return GaussianRational{parse_rational(j.get<std::string>())};
    if (j.is_array() && j.size() == 2 && j[0].is_string() && j[1].is_string())
        return {parse_rational(j[0].get<std::string>()), parse_rational(j[1].get<std::string>())};
    throw input_error("scalar entries must be \"p/q\" strings or [re, im] pairs");
}

inline std::string exact_string(const GaussianRational& v) { return v.to_string(); }

inline ordered_json approx_json(const GaussianRational& v) {
    if (v.is_real()) return v.re.to_double();
    return ordered_json::array({v.re.to_double(), v.im.to_double()});
}

inline std::string exact_string(const ScaledValue& v) { return v.to_string(); }

inline ordered_json approx_json(const ScaledValue& v, long N) {
    if (!v.coeff.is_real()) return approx_json(v.coeff);
    return v.to_double(N);
}

/// A problem distribution plus the alphabet its labels live in.
struct DistributionSpec {
    Alphabet alphabet = Alphabet::single();
    SiteDistribution dist;
    std::string source = "builtin symmetric bernoulli";
};

/// Built-in default: one self-adjoint label with symmetric Bernoulli moments.
inline DistributionSpec builtin_bernoulli(int max_degree) {
    DistributionSpec spec;
    spec.dist = SiteDistribution::symmetric_bernoulli(0, max_degree);
    return spec;
}

/// Loads a distribution file:
/// {
///   "labels": ["b"],                    optional self-adjoint labels
///   "adjoint_pairs": [["c", "c*"]],     optional involutive pairs
///   "moments": ["0", "1", ...],         powers of the first label
///   "words": {"b b": "1", ...}          explicit label-word moments
/// }
inline DistributionSpec load_distribution(const ordered_json& j, const std::string& source) {
    DistributionSpec spec;
    spec.source = source;
    if (!j.is_object()) throw input_error("distribution file must hold a JSON object");
    if (j.contains("labels") || j.contains("adjoint_pairs")) {
        spec.alphabet = Alphabet{};
        if (j.contains("labels"))
            for (const auto& l : j.at("labels")) spec.alphabet.add_self_adjoint(l.get<std::string>());
        if (j.contains("adjoint_pairs"))
            for (const auto& p : j.at("adjoint_pairs"))
                spec.alphabet.add_adjoint_pair(p.at(0).get<std::string>(), p.at(1).get<std::string>());
        if (spec.alphabet.size() == 0) throw input_error("distribution file defines no labels");
    }
    bool any = false;
    if (j.contains("moments")) {
        any = true;
        LabelWord w;
        for (const auto& m : j.at("moments")) {
            w.push_back(0);
            spec.dist.set(w, parse_scalar(m));
        }
    }
    if (j.contains("words")) {
        any = true;
        for (const auto& [key, value] : j.at("words").items()) {
            LabelWord w;
            std::size_t pos = 0;
            while (pos < key.size()) {
                std::size_t space = key.find(' ', pos);
                if (space == std::string::npos) space = key.size();
                std::string name = key.substr(pos, space - pos);
                if (!name.empty()) {
                    auto id = spec.alphabet.find(name);
                    if (!id) throw input_error("unknown label \"" + name + "\" in word \"" + key + "\"");
                    w.push_back(*id);
                }
                pos = space + 1;
            }
            if (w.empty()) throw input_error("empty word key in distribution file");
            spec.dist.set(w, parse_scalar(value));
        }
    }
    if (!any) throw input_error("distribution file needs \"moments\" or \"words\"");
    return spec;
}

/// Resolves the word labels: explicit --labels names, else n copies of the
/// first label.
inline std::vector<LabelId> resolve_labels(const DistributionSpec& spec,
                                           const std::vector<std::string>& names, int n) {
    std::vector<LabelId> out;
    if (!names.empty()) {
        for (const auto& name : names) {
            auto id = spec.alphabet.find(name);
            if (!id) throw input_error("unknown label \"" + name + "\"");
            out.push_back(*id);
        }
        return out;
    }
    out.assign(static_cast<std::size_t>(n), 0);
    return out;
}

inline ordered_json matrix_exact_json(const Mat<GaussianRational>& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline ordered_json matrix_approx_json(const Mat<GaussianRational>& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(approx_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline BScalar parse_bscalar(const ordered_json& j, int d) {
    if (!j.is_array() || static_cast<int>(j.size()) != d) throw input_error("matrix must have d rows");
    BScalar s(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        const auto& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != d)
            throw input_error("matrix row must have d entries");
        for (int k = 0; k < d; ++k)
            s(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) =
                parse_scalar(row[static_cast<std::size_t>(k)]);
    }
    return s;
}

/// Loads observables {"d": 2, "m": 2, "observables": [{"label", "beta",
/// "gamma", "delta", "alpha"?}]}; beta/gamma are arrays of m matrices, delta
/// an m x m array of matrices, alpha a single matrix (default zero).
inline std::vector<ObservableBlocks> load_observables(const ordered_json& j) {
    if (!j.is_object() || !j.contains("d") || !j.contains("m") || !j.contains("observables"))
        throw input_error("blocks file needs d, m, observables");
    int d = j.at("d").get<int>(), m = j.at("m").get<int>();
    if (d < 1 || d > 4 || m < 1 || m > 4) throw input_error("supported envelope: 1 <= d, m <= 4");
    std::vector<ObservableBlocks> out;
    for (const auto& jo : j.at("observables")) {
        ObservableBlocks o;
        o.d = d;
        o.m = m;
        o.label = jo.contains("label") ? jo.at("label").get<std::string>() : "o" + std::to_string(out.size());
        o.alpha = jo.contains("alpha") ? parse_bscalar(jo.at("alpha"), d)
                                       : BScalar(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
        auto parse_vec = [&](const ordered_json& arr) {
            if (!arr.is_array() || static_cast<int>(arr.size()) != m)
                throw input_error("beta/gamma must list m matrices");
            BVector v;
            for (const auto& e : arr) v.push_back(parse_bscalar(e, d));
            return v;
        };
        o.beta = parse_vec(jo.at("beta"));
        o.gamma = parse_vec(jo.at("gamma"));
        if (jo.contains("delta")) {
            const auto& dd = jo.at("delta");
            if (!dd.is_array() || static_cast<int>(dd.size()) != m)
                throw input_error("delta must be an m x m array of matrices");
            for (const auto& row : dd) {
                if (!row.is_array() || static_cast<int>(row.size()) != m)
                    throw input_error("delta must be an m x m array of matrices");
                std::vector<BScalar> r;
                for (const auto& e : row) r.push_back(parse_bscalar(e, d));
                o.delta.push_back(std::move(r));
            }
        } else {
            o.delta.assign(static_cast<std::size_t>(m),
                           std::vector<BScalar>(static_cast<std::size_t>(m),
                                                BScalar(static_cast<std::size_t>(d), static_cast<std::size_t>(d))));
        }
        out.push_back(std::move(o));
    }
    if (out.empty()) throw input_error("blocks file lists no observables");
    return out;
}

/// Flat CSV projection of the JSON result rows; columns are the union of the
/// row keys in first-seen order.
inline std::string rows_to_csv(const ordered_json& rows) {
    std::vector<std::string> columns;
    for (const auto& row : rows)
        for (const auto& [key, value] : row.items()) {
            bool seen = false;
            for (const auto& c : columns) seen |= c == key;
            if (!seen) columns.push_back(key);
        }
    std::string csv;
    for (std::size_t i = 0; i < columns.size(); ++i) csv += (i ? "," : "") + columns[i];
    csv += "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i) csv += ",";
            if (!row.contains(columns[i])) continue;
            const auto& v = row.at(columns[i]);
            if (v.is_string()) {
                std::string s = v.get<std::string>();
                bool quote = s.find(',') != std::string::npos || s.find('"') != std::string::npos;
                if (quote) {
                    std::string esc = "\"";
                    for (char ch : s) {
                        if (ch == '"') esc += "\"\"";
                        else esc += ch;
                    }
                    esc += "\"";
                    csv += esc;
                } else {
                    csv += s;
                }
            } else {
                csv += v.dump();
            }
        }
        csv += "\n";
    }
    return csv;
}

}  // namespace aclt::cli
