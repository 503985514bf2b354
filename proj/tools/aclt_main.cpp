// aclt: exact moments of central sums under tensor, free, boolean, and
// monotone independence, their CLT limits, Fock-space cross-checks, the
// q^2-CCR laboratory, and the operator-valued boolean CLT.
//
// Exit codes: 0 ok, 1 input error, 2 evaluation (missing moment) error,
// 3 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include "aclt/cli_support.hpp"
#include "aclt/fock.hpp"
#include "aclt/qccr.hpp"
#include "aclt/verify.hpp"

namespace {

using aclt::cli::input_error;
using aclt::cli::ordered_json;

struct Args {
    std::string command;
    std::string kind = "tensor";
    std::string n_list = "2,4,6";
    std::string N_list = "2,4,8,16";
    std::string dist_path;
    std::optional<ordered_json> dist_inline;
    std::vector<std::string> labels;
    std::string flavor = "boson";
    std::string q_str;
    std::string blocks_path;
    std::optional<ordered_json> blocks_inline;
    std::string only;
    int depth = 32, k_max = 6, jobs = 1;
    int op_n = 4, n_max = 5, d = 2, m = 2;
    long seed = 1;
    bool verify_json = false;
    bool csv = false;
    bool timings = false;
};

void emit(ordered_json doc, const Args& args, double total_ms) {
    if (args.timings) doc["timings"] = ordered_json{{"total_ms", total_ms}};
    if (args.csv)
        std::cout << aclt::cli::rows_to_csv(doc.at("results"));
    else
        std::cout << doc.dump(2) << "\n";
}

ordered_json document_skeleton(const std::string& command, ordered_json inputs) {
    ordered_json doc;
    doc["schema_version"] = "1";
    doc["command"] = command;
    doc["inputs"] = std::move(inputs);
    doc["results"] = ordered_json::array();
    doc["timings"] = ordered_json::object();
    return doc;
}

ordered_json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    try {
        return ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error("JSON parse error in " + path + ": " + e.what());
    }
}

aclt::cli::DistributionSpec distribution_for(const Args& args, int max_degree) {
    if (args.dist_inline) return aclt::cli::load_distribution(*args.dist_inline, "inline");
    if (!args.dist_path.empty())
        return aclt::cli::load_distribution(load_json_file(args.dist_path), args.dist_path);
    return aclt::cli::builtin_bernoulli(max_degree);
}

// bounded worker-pool map over row indices; results land by index, so the
// assembled output does not depend on the schedule
template <class F>
void parallel_rows(std::size_t count, int jobs, F&& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = next++; i < count; i = next++) fn(i);
            } catch (...) {
                errors[static_cast<std::size_t>(t)] = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

std::vector<int> degrees_for(const Args& args) {
    if (!args.labels.empty()) return {static_cast<int>(args.labels.size())};
    return aclt::cli::parse_int_list(args.n_list);
}

ordered_json run_limit(const Args& args) {
    auto kind = aclt::independence_from_string(args.kind);
    std::vector<int> degrees = degrees_for(args);
    int max_degree = *std::max_element(degrees.begin(), degrees.end());
    auto spec = distribution_for(args, max_degree);

    ordered_json doc = document_skeleton(
        "limit", {{"kind", args.kind}, {"n", degrees}, {"dist", spec.source}});
    std::vector<ordered_json> computed(degrees.size());
    parallel_rows(degrees.size(), args.jobs, [&](std::size_t i) {
        int n = degrees[i];
        auto labels = aclt::cli::resolve_labels(spec, args.labels, n);
        auto v = aclt::limit_moment(kind, spec.dist, labels);
        ordered_json row;
        row["n"] = n;
        row["N"] = "limit";
        row["exact"] = aclt::cli::exact_string(v);
        row["approx"] = aclt::cli::approx_json(v);
        computed[i] = std::move(row);
    });
    for (auto& row : computed) doc["results"].push_back(std::move(row));
    return doc;
}

ordered_json run_finite_n(const Args& args) {
    auto kind = aclt::independence_from_string(args.kind);
    std::vector<int> degrees = degrees_for(args);
    std::vector<int> Ns = aclt::cli::parse_int_list(args.N_list);
    for (int N : Ns)
        if (N < 1) throw input_error("N must be positive");
    int max_degree = *std::max_element(degrees.begin(), degrees.end());
    auto spec = distribution_for(args, max_degree);

    ordered_json doc = document_skeleton(
        "finite-n", {{"kind", args.kind}, {"n", degrees}, {"N", Ns}, {"dist", spec.source}});
    std::vector<ordered_json> computed(degrees.size());
    parallel_rows(degrees.size(), args.jobs, [&](std::size_t i) {
        int n = degrees[i];
        auto labels = aclt::cli::resolve_labels(spec, args.labels, n);
        std::vector<long> longNs(Ns.begin(), Ns.end());
        auto table = aclt::convergence_table(kind, spec.dist, labels, longNs);
        ordered_json rows = ordered_json::array();
        for (const auto& r : table.rows) {
            ordered_json row;
            row["n"] = r.n;
            if (r.N)
                row["N"] = *r.N;
            else
                row["N"] = "limit";
            row["exact"] = aclt::cli::exact_string(r.value);
            row["approx"] = aclt::cli::approx_json(r.value, r.N ? *r.N : 1);
            if (r.signed_error) row["error_exact"] = aclt::cli::exact_string(*r.signed_error);
            rows.push_back(std::move(row));
        }
        computed[i] = std::move(rows);
    });
    for (auto& group : computed)
        for (auto& row : group) doc["results"].push_back(std::move(row));
    return doc;
}

ordered_json run_qlimit(const Args& args) {
    std::vector<int> degrees = aclt::cli::parse_int_list(args.n_list);
    ordered_json doc = document_skeleton("qlimit", {{"n", degrees}});
    for (int n : degrees) {
        if (n < 0 || n % 2 != 0) throw input_error("qlimit degrees must be even and nonnegative");
        aclt::Polynomial p = aclt::q_limit_moment(n);
        ordered_json row;
        row["n"] = n;
        row["exact"] = p.to_string();
        row["at_one"] = p.evaluate(1).to_string();
        row["at_zero"] = p.evaluate(0).to_string();
        doc["results"].push_back(std::move(row));
    }
    return doc;
}

ordered_json run_fock(const Args& args) {
    auto flavor = aclt::fock_flavor_from_string(args.flavor);
    std::vector<int> degrees = aclt::cli::parse_int_list(args.n_list);
    aclt::LadderSpec spec{flavor, {}};
    if (!args.q_str.empty()) spec.q = aclt::cli::parse_rational(args.q_str);
    ordered_json doc = document_skeleton(
        "fock",
        {{"flavor", args.flavor}, {"n", degrees}, {"q", args.q_str.empty() ? "symbolic" : args.q_str}});
    for (int n : degrees) {
        ordered_json row;
        row["n"] = n;
        if (flavor == aclt::FockFlavor::QFock && !spec.q) {
            row["exact"] = aclt::vacuum_moment_poly(spec, n).to_string();
            row["approx"] = nullptr;
        } else {
            aclt::Rational v = aclt::vacuum_moment(spec, n);
            row["exact"] = v.to_string();
            row["approx"] = v.to_double();
        }
        doc["results"].push_back(std::move(row));
    }
    return doc;
}

ordered_json run_qccr(const Args& args) {
    if (args.q_str.empty()) throw input_error("qccr needs --q");
    ordered_json doc =
        document_skeleton("qccr", {{"q", args.q_str}, {"depth", args.depth}, {"k_max", args.k_max}});
    std::size_t pos = 0;
    while (pos <= args.q_str.size()) {
        std::size_t comma = args.q_str.find(',', pos);
        if (comma == std::string::npos) comma = args.q_str.size();
        std::string tok = args.q_str.substr(pos, comma - pos);
        pos = comma + 1;
        if (tok.empty()) continue;
        aclt::Rational q = aclt::cli::parse_rational(tok);
        aclt::QccrModel m = aclt::qccr_build(q, args.depth);
        auto rel = aclt::qccr_check_relations(m);
        auto proj = aclt::qccr_projections(m, args.k_max);
        double idem = 0, basis = 0, ortho = 0, psd_floor = 0, isom = 0;
        for (int k = 0; k <= args.k_max; ++k) {
            idem = std::max(idem, aclt::idempotency_defect(proj.P[static_cast<std::size_t>(k)]));
            basis = std::max(basis, aclt::basis_projection_error(proj.E[static_cast<std::size_t>(k)],
                                                                 static_cast<std::size_t>(k),
                                                                 static_cast<std::size_t>(args.depth) - 1));
            psd_floor =
                std::min(psd_floor, aclt::min_symmetric_eigenvalue(proj.E[static_cast<std::size_t>(k)]));
            for (int l = 0; l <= args.k_max; ++l)
                if (k != l)
                    ortho = std::max(ortho, aclt::operator_norm(proj.E[static_cast<std::size_t>(k)] *
                                                                proj.E[static_cast<std::size_t>(l)]));
        }
        for (int k = 0; k + 1 <= args.k_max; ++k) {
            auto ladder = aclt::qccr_ladder_isometry(m, proj, k);
            isom = std::max({isom, ladder.isometry_defect, ladder.range_defect});
        }
        double rec_err = aclt::qccr_reconstruct_gamma_error(m, proj, args.k_max);
        ordered_json row;
        row["q"] = q.to_string();
        row["depth"] = args.depth;
        row["k_max"] = args.k_max;
        row["ccr_interior_residual"] = rel.ccr_interior;
        row["ccr_boundary_residual"] = rel.ccr_boundary;
        row["exchange_interior_residual"] = rel.exchange_interior;
        row["gamma_diag_error"] = rel.gamma_diag_error;
        row["projection_idempotency_defect"] = idem;
        row["basis_projection_error"] = basis;
        row["orthogonality_defect"] = ortho;
        row["min_E_eigenvalue"] = psd_floor;
        row["ladder_isometry_defect"] = isom;
        row["gamma_reconstruction_error"] = rec_err;
        row["gamma_reconstruction_bound"] =
            std::pow(q.to_double(), 2.0 * (args.k_max + 1)) + 1e-9;
        doc["results"].push_back(std::move(row));
    }
    return doc;
}

ordered_json run_opvalued(const Args& args) {
    std::vector<aclt::ObservableBlocks> obs;
    std::string source = "sampled";
    if (args.blocks_inline) {
        obs = aclt::cli::load_observables(*args.blocks_inline);
        source = "inline";
    } else if (!args.blocks_path.empty()) {
        obs = aclt::cli::load_observables(load_json_file(args.blocks_path));
        source = args.blocks_path;
    }
    if (!obs.empty()) {
        if (static_cast<int>(obs.size()) < args.op_n)
            throw input_error("blocks file lists fewer observables than n");
        obs.resize(static_cast<std::size_t>(args.op_n));
    } else {
        aclt::ObservableSampler sampler(static_cast<std::uint64_t>(args.seed), args.d, args.m);
        for (int k = 0; k < args.op_n; ++k) obs.push_back(sampler.sample("o" + std::to_string(k)));
    }
    ordered_json doc = document_skeleton(
        "opvalued", {{"n", args.op_n},
                     {"N", args.N_list},
                     {"source", source},
                     {"seed", source == "sampled" ? ordered_json(args.seed) : ordered_json(nullptr)},
                     {"d", obs[0].d},
                     {"m", obs[0].m}});
    aclt::BScalar limit = aclt::opvalued_limit_formula(obs);
    aclt::BScalar vacuum = aclt::opvalued_vacuum_moment(obs);
    {
        ordered_json row;
        row["n"] = args.op_n;
        row["N"] = "limit";
        row["exact"] = aclt::cli::matrix_exact_json(limit);
        row["approx"] = aclt::cli::matrix_approx_json(limit);
        row["vacuum_equals_formula"] = vacuum == limit;
        doc["results"].push_back(std::move(row));
    }
    if (!args.N_list.empty()) {
        for (int N : aclt::cli::parse_int_list(args.N_list)) {
            if (N < 1) throw input_error("N must be positive");
            auto v = aclt::opvalued_finite_n_moment(obs, N);
            ordered_json row;
            row["n"] = args.op_n;
            row["N"] = N;
            row["exact"] = aclt::cli::matrix_exact_json(v.coeff);
            row["approx"] = aclt::cli::matrix_approx_json(v.coeff);
            if (!v.half_power) row["error_exact"] = aclt::cli::matrix_exact_json(v.coeff - limit);
            doc["results"].push_back(std::move(row));
        }
    }
    return doc;
}

ordered_json run_check_hypotheses(const Args& args) {
    auto kind = aclt::independence_from_string(args.kind);
    auto spec = distribution_for(args, args.n_max + 2);
    auto letters = spec.alphabet.all_labels();
    ordered_json doc = document_skeleton(
        "check-hypotheses", {{"kind", args.kind}, {"n_max", args.n_max}, {"dist", spec.source}});
    auto witness_fields = [&](ordered_json& row, const aclt::HypothesisReport& rep) {
        if (rep.witness) {
            row["witness"] = aclt::word_to_string(*rep.witness, spec.alphabet);
            row["value"] = rep.value.to_string();
        }
        if (rep.witness_mapped) {
            row["witness_mapped"] = aclt::word_to_string(*rep.witness_mapped, spec.alphabet);
            row["mapped_value"] = rep.mapped_value.to_string();
        }
    };
    {
        auto rep = aclt::check_singleton(kind, spec.dist, letters, args.n_max);
        ordered_json row;
        row["check"] = "singleton";
        row["pass"] = rep.pass;
        row["words_checked"] = rep.words_checked;
        witness_fields(row, rep);
        doc["results"].push_back(std::move(row));
    }
    {
        auto rep = aclt::check_spreadability(kind, spec.dist, letters, args.n_max);
        ordered_json row;
        row["check"] = "spreadability-order-preserving";
        row["pass"] = rep.pass;
        row["words_checked"] = rep.words_checked;
        witness_fields(row, rep);
        doc["results"].push_back(std::move(row));
    }
    {
        auto rep =
            aclt::check_spreadability(kind, spec.dist, letters, args.n_max, aclt::InjectionFamily::All);
        ordered_json row;
        row["check"] = "exchangeability-all-injections";
        row["pass"] = rep.pass;
        row["words_checked"] = rep.words_checked;
        witness_fields(row, rep);
        doc["results"].push_back(std::move(row));
    }
    for (int n = 1; n <= args.n_max; ++n) {
        auto bound = aclt::check_bound(kind, spec.dist, letters, n);
        ordered_json row;
        row["check"] = "bound";
        row["n"] = n;
        row["exact"] =
            bound.max_value.is_real() ? bound.bound().to_string() : bound.max_value.to_string();
        row["approx"] = bound.max_value.is_real() ? ordered_json(bound.bound().to_double())
                                                  : aclt::cli::approx_json(bound.max_value);
        if (bound.witness) row["witness"] = aclt::word_to_string(*bound.witness, spec.alphabet);
        doc["results"].push_back(std::move(row));
    }
    return doc;
}

int run_verify(const Args& args) {
    auto results = aclt::run_verification(args.only);
    if (results.empty()) throw input_error("no verification check matches \"" + args.only + "\"");
    int failed = 0;
    if (args.verify_json) {
        ordered_json doc = document_skeleton("verify", {{"only", args.only}});
        for (const auto& r : results) {
            ordered_json row;
            row["criterion"] = r.criterion;
            row["name"] = r.name;
            row["pass"] = r.pass;
            row["ms"] = r.ms;
            row["detail"] = r.detail;
            doc["results"].push_back(std::move(row));
            failed += r.pass ? 0 : 1;
        }
        emit(std::move(doc), args, 0);
    } else {
        for (const auto& r : results) {
            std::printf("[%s] criterion %2d %-22s %9.1f ms  %s\n", r.pass ? "PASS" : "FAIL", r.criterion,
                        r.name.c_str(), r.ms, r.detail.c_str());
            failed += r.pass ? 0 : 1;
        }
        std::printf("%zu checks, %d failed\n", results.size(), failed);
    }
    return failed == 0 ? 0 : 3;
}

// config-file front end: every flag has a same-named key
Args args_from_config(const ordered_json& cfg, Args base) {
    if (!cfg.is_object()) throw input_error("config must be a JSON object");
    if (!cfg.contains("command")) throw input_error("config field \"command\" is required");
    auto int_list_string = [](const ordered_json& v, const char* field) -> std::string {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_array()) {
            std::string s;
            for (const auto& e : v) {
                if (!e.is_number_integer()) throw input_error(std::string("config field \"") + field +
                                                              "\" must hold integers");
                if (!s.empty()) s += ",";
                s += std::to_string(e.get<long long>());
            }
            return s;
        }
        if (v.is_number_integer()) return std::to_string(v.get<long long>());
        throw input_error(std::string("config field \"") + field + "\" must be a list or string");
    };
    for (const auto& [key, value] : cfg.items()) {
        if (key == "command") base.command = value.get<std::string>();
        else if (key == "kind") base.kind = value.get<std::string>();
        else if (key == "n") base.n_list = int_list_string(value, "n");
        else if (key == "N") base.N_list = int_list_string(value, "N");
        else if (key == "labels") base.labels = value.get<std::vector<std::string>>();
        else if (key == "dist") {
            if (value.is_string()) base.dist_path = value.get<std::string>();
            else base.dist_inline = value;
        } else if (key == "blocks") {
            if (value.is_string()) base.blocks_path = value.get<std::string>();
            else base.blocks_inline = value;
        } else if (key == "flavor") base.flavor = value.get<std::string>();
        else if (key == "q") base.q_str = value.is_string() ? value.get<std::string>()
                                                            : int_list_string(value, "q");
        else if (key == "depth") base.depth = value.get<int>();
        else if (key == "k_max") base.k_max = value.get<int>();
        else if (key == "jobs") base.jobs = value.get<int>();
        else if (key == "seed") base.seed = value.get<long>();
        else if (key == "d") base.d = value.get<int>();
        else if (key == "m") base.m = value.get<int>();
        else if (key == "n_max") base.n_max = value.get<int>();
        else if (key == "only") base.only = value.get<std::string>();
        else if (key == "csv") base.csv = value.get<bool>();
        else throw input_error("unknown config field \"" + key + "\"");
    }
    if (base.command == "opvalued" && cfg.contains("n")) {
        auto ns = aclt::cli::parse_int_list(base.n_list);
        if (ns.size() != 1) throw input_error("opvalued takes a single n");
        base.op_n = ns[0];
    }
    if (base.command == "check-hypotheses" && cfg.contains("n"))
        base.n_max = aclt::cli::parse_int_list(base.n_list).back();
    return base;
}

int dispatch(const Args& args) {
    auto t0 = std::chrono::steady_clock::now();
    ordered_json doc;
    if (args.command == "limit") doc = run_limit(args);
    else if (args.command == "finite-n") doc = run_finite_n(args);
    else if (args.command == "qlimit") doc = run_qlimit(args);
    else if (args.command == "fock") doc = run_fock(args);
    else if (args.command == "qccr") doc = run_qccr(args);
    else if (args.command == "opvalued") doc = run_opvalued(args);
    else if (args.command == "check-hypotheses") doc = run_check_hypotheses(args);
    else if (args.command == "verify") return run_verify(args);
    else throw input_error("unknown command \"" + args.command + "\"");
    auto t1 = std::chrono::steady_clock::now();
    emit(std::move(doc), args, std::chrono::duration<double, std::milli>(t1 - t0).count());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"aclt: exact algebraic central limit engine"};
    app.require_subcommand(1);

    Args args;
    std::string config_path;

    auto add_output_flags = [&](CLI::App* cmd) {
        cmd->add_flag("--csv", args.csv, "emit CSV rows instead of JSON");
        cmd->add_flag("--json", [](std::size_t) {}, "emit JSON (default)");
        cmd->add_flag("--timings", args.timings, "include wall-clock timings (breaks byte-stability)");
    };

    auto* limit_cmd = app.add_subcommand("limit", "N -> infinity moments of the central sums");
    limit_cmd->add_option("--kind", args.kind, "tensor|free|boolean|monotone");
    limit_cmd->add_option("--n", args.n_list, "comma list of degrees");
    limit_cmd->add_option("--dist", args.dist_path, "distribution JSON file");
    limit_cmd->add_option("--labels", args.labels, "label names forming the word")->delimiter(',');
    limit_cmd->add_option("--jobs", args.jobs, "worker threads");
    add_output_flags(limit_cmd);

    auto* finite_cmd = app.add_subcommand("finite-n", "exact finite-N moments with errors vs the limit");
    finite_cmd->add_option("--kind", args.kind, "tensor|free|boolean|monotone");
    finite_cmd->add_option("--n", args.n_list, "comma list of degrees");
    finite_cmd->add_option("--N", args.N_list, "comma list of N values");
    finite_cmd->add_option("--dist", args.dist_path, "distribution JSON file");
    finite_cmd->add_option("--labels", args.labels, "label names forming the word")->delimiter(',');
    finite_cmd->add_option("--jobs", args.jobs, "worker threads");
    add_output_flags(finite_cmd);

    auto* qlimit_cmd = app.add_subcommand("qlimit", "crossing-number generating polynomials");
    qlimit_cmd->add_option("--n", args.n_list, "comma list of even degrees");
    add_output_flags(qlimit_cmd);

    auto* fock_cmd = app.add_subcommand("fock", "vacuum moments of a* + a on a truncated Fock space");
    fock_cmd->add_option("--flavor", args.flavor, "full|boson|boolean|qfock");
    fock_cmd->add_option("--n", args.n_list, "comma list of degrees");
    fock_cmd->add_option("--q", args.q_str, "rational q for qfock (symbolic when omitted)");
    add_output_flags(fock_cmd);

    auto* qccr_cmd = app.add_subcommand("qccr", "q^2-CCR representation laboratory");
    qccr_cmd->add_option("--q", args.q_str, "comma list of rational q, |q| < 1")->required();
    qccr_cmd->add_option("--depth", args.depth, "truncation depth");
    qccr_cmd->add_option("--k-max", args.k_max, "highest spectral projection");
    add_output_flags(qccr_cmd);

    auto* op_cmd = app.add_subcommand("opvalued", "operator-valued boolean CLT on M_d");
    op_cmd->add_option("--n", args.op_n, "word length");
    op_cmd->add_option("--N", args.N_list, "comma list of N values");
    op_cmd->add_option("--blocks", args.blocks_path, "observable blocks JSON file");
    op_cmd->add_option("--seed", args.seed, "sampler seed (when no blocks file)");
    op_cmd->add_option("--d", args.d, "matrix size of B = M_d");
    op_cmd->add_option("--m", args.m, "module rank of E = B^m");
    add_output_flags(op_cmd);

    auto* hyp_cmd = app.add_subcommand("check-hypotheses", "singleton, spreadability, bound checks");
    hyp_cmd->add_option("--kind", args.kind, "tensor|free|boolean|monotone");
    hyp_cmd->add_option("--n-max", args.n_max, "maximal word length");
    hyp_cmd->add_option("--dist", args.dist_path, "distribution JSON file");
    add_output_flags(hyp_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "run the full cross-validation suite");
    verify_cmd->add_option("--only", args.only, "substring filter on check names");
    verify_cmd->add_flag("--json", args.verify_json, "emit the report as JSON");
    verify_cmd->add_flag("--csv", args.csv, "emit CSV rows (with --json)");

    auto* run_cmd = app.add_subcommand("run", "execute a problem description from a config file");
    run_cmd->add_option("config", config_path, "JSON config file; fields mirror the flags")->required();
    add_output_flags(run_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        ordered_json err;
        err["error"] = {{"type", "input"}, {"message", e.what()}};
        std::cout << err.dump(2) << "\n";
        return 1;
    }

    try {
        if (limit_cmd->parsed()) args.command = "limit";
        else if (finite_cmd->parsed()) args.command = "finite-n";
        else if (qlimit_cmd->parsed()) args.command = "qlimit";
        else if (fock_cmd->parsed()) args.command = "fock";
        else if (qccr_cmd->parsed()) args.command = "qccr";
        else if (op_cmd->parsed()) args.command = "opvalued";
        else if (hyp_cmd->parsed()) args.command = "check-hypotheses";
        else if (verify_cmd->parsed()) args.command = "verify";
        else if (run_cmd->parsed()) args = args_from_config(load_json_file(config_path), args);
        return dispatch(args);
    } catch (const aclt::missing_moment_error& e) {
        ordered_json err;
        err["error"] = {{"type", "missing-moment"}, {"message", e.what()}};
        std::cout << err.dump(2) << "\n";
        return 2;
    } catch (const input_error& e) {
        ordered_json err;
        err["error"] = {{"type", "input"}, {"message", e.what()}};
        std::cout << err.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        ordered_json err;
        err["error"] = {{"type", "input"}, {"message", e.what()}};
        std::cout << err.dump(2) << "\n";
        return 1;
    }
    return 0;
}
