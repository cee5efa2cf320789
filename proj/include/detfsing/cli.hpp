#ifndef DETFSING_CLI_HPP
#define DETFSING_CLI_HPP

// Command-line front end: argument parsing, report emission, exit codes.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "detfsing/lattice.hpp"
#include "detfsing/verify.hpp"

namespace detfsing {

enum class OutputMode { text, json };

enum ExitCode : int { exit_pass = 0, exit_fail = 1, exit_usage = 2, exit_inconclusive = 3 };

inline int exit_code(Verdict v) {
    switch (v) {
        case Verdict::pass: return exit_pass;
        case Verdict::fail: return exit_fail;
        case Verdict::inconclusive: return exit_inconclusive;
    }
    return exit_fail;
}

inline Json report_to_json(const VerificationReport& r) {
    return {{"check", r.check},
            {"params", r.params},
            {"verdict", verdict_name(r.verdict)},
            {"witness", r.witness},
            {"stats",
             {{"spairs", r.stats.spairs_processed},
              {"reductions", r.stats.reductions},
              {"max_degree", r.stats.max_degree_seen},
              {"elapsed_ms", r.stats.elapsed_ms}}}};
}

/// Inverse of report_to_json; throws std::invalid_argument on malformed input.
inline VerificationReport report_from_json(const Json& j) {
    try {
        VerificationReport r;
        r.check = j.at("check").get<std::string>();
        r.params = j.at("params");
        auto v = verdict_from_name(j.at("verdict").get<std::string>());
        if (!v) throw std::invalid_argument("unknown verdict");
        r.verdict = *v;
        r.witness = j.at("witness");
        const Json& s = j.at("stats");
        r.stats.spairs_processed = s.at("spairs").get<std::uint64_t>();
        r.stats.reductions = s.at("reductions").get<std::uint64_t>();
        r.stats.max_degree_seen = s.at("max_degree").get<unsigned>();
        r.stats.elapsed_ms = s.at("elapsed_ms").get<double>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed report: ") + e.what());
    }
}

inline std::string emit_report(const VerificationReport& r, OutputMode mode) {
    if (mode == OutputMode::json) return report_to_json(r).dump() + "\n";
    std::string params;
    for (const auto& [k, v] : r.params.items()) params += " " + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
    std::ostringstream os;
    os << "[" << verdict_name(r.verdict) << "] " << r.check << params << "\n";
    for (const auto& [k, v] : r.witness.items()) os << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    os << "  stats: spairs=" << r.stats.spairs_processed << " reductions=" << r.stats.reductions
       << " max_degree=" << r.stats.max_degree_seen << " elapsed_ms=" << r.stats.elapsed_ms << "\n";
    return os.str();
}

/// A parsed invocation. Everything is validated before any computation.
struct CommandRequest {
    std::string subcommand;  // gen, check, verify, lattice
    std::string name;        // e.g. "delta", "split", "suite"
    CheckRequest params;
    OutputMode mode = OutputMode::text;
    Budget budget;
    unsigned workers = 1;
    std::size_t node_cap = 512;
    std::string premultiplier;           // check compat --a
    std::string ideal;                   // check compat --ideal, ';'-separated
    std::vector<std::string> seeds;      // lattice --seed, each ';'-separated
};

namespace detail {

inline std::vector<std::string> split_generators(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string piece; std::getline(ss, piece, ';');)
        if (piece.find_first_not_of(" \t") != std::string::npos) out.push_back(piece);
    return out;
}

inline const std::vector<std::string>& gen_names() {
    static const std::vector<std::string> v = {"matrix", "minors", "divisor", "delta", "gamma"};
    return v;
}
inline const std::vector<std::string>& check_cmd_names() {
    static const std::vector<std::string> v = {"split", "compat", "fedder", "freg", "pure-freg", "dim"};
    return v;
}
inline const std::vector<std::string>& verify_cmd_names() {
    static const std::vector<std::string> v = {"suite",     "rowdec",    "gammadec", "local",
                                               "sylvester", "extension", "reduction"};
    return v;
}

inline void add_matrix_options(CLI::App* sub, CheckRequest& q) {
    sub->add_option("--m", q.m, "rows");
    sub->add_option("--n", q.n, "columns");
    sub->add_option("--t", q.t, "minor size");
    sub->add_option("-p,--p", q.p, "characteristic")->capture_default_str();
}

inline void validate_gen(const CommandRequest& c) {
    const auto& q = c.params;
    detail::require(q.m >= 1 && q.n >= 1 && q.m <= 8 && q.n <= 8, "gen: needs 1 <= m, n <= 8");
    detail::validate_prime(q);
    if (c.name == "minors") detail::require(q.t >= 1 && q.t <= std::min(q.m, q.n), "gen minors: needs 1 <= t <= min(m, n)");
    if (c.name == "divisor") detail::require(q.t >= 2 && q.t <= std::min(q.m, q.n), "gen divisor: needs 2 <= t <= min(m, n)");
    if (c.name == "gamma") detail::require(q.m <= q.n, "gen gamma: needs m <= n");
}

}  // namespace detail

/// Parses argv (without the program name). Usage problems raise UsageError
/// or a CLI11 error; `--help` raises CLI::CallForHelp.
inline CommandRequest parse_command(const std::vector<std::string>& args, std::string* help = nullptr) {
    CommandRequest c;
    CLI::App app{"Frobenius-splitting workbench for determinantal rings", "detfsing"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "line-delimited JSON output");
    app.add_option("--max-gb-steps", c.budget.max_reductions, "reduction cap per check")
        ->envname("DETF_MAX_GB_STEPS")
        ->capture_default_str();
    app.add_option("--max-seconds", c.budget.max_seconds, "wall clock cap per check")
        ->envname("DETF_MAX_SECONDS")
        ->capture_default_str();
    app.fallthrough();

    auto* gen = app.add_subcommand("gen", "print generators in the polynomial grammar");
    gen->add_option("what", c.name)->required()->check(CLI::IsMember(detail::gen_names()));
    detail::add_matrix_options(gen, c.params);

    auto* check = app.add_subcommand("check", "run one check on a determinantal spec");
    check->add_option("name", c.name)->required()->check(CLI::IsMember(detail::check_cmd_names()));
    detail::add_matrix_options(check, c.params);
    check->add_option("--e-max", c.params.e_max, "largest Frobenius iterate to try");
    check->add_option("--a", c.premultiplier, "compat: premultiplier a of Phi . a");
    check->add_option("--ideal", c.ideal, "compat: ';'-separated generators");

    auto* verify = app.add_subcommand("verify", "run a structural verification or the default suite");
    verify->add_option("name", c.name)->required()->check(CLI::IsMember(detail::verify_cmd_names()));
    detail::add_matrix_options(verify, c.params);
    verify->add_option("--s", c.params.s, "auxiliary pair: divisor minor size");
    verify->add_option("--k", c.params.k, "sylvester: border size");
    verify->add_option("--r", c.params.r, "gammadec: rows");
    verify->add_option("--cols-added", c.params.cols_added, "extension: added columns");
    verify->add_option("--block", c.params.block, "reduction: w, z or xprime");
    verify->add_option("--row", c.params.row, "reduction: 1-based pivot row");
    verify->add_option("--col", c.params.col, "reduction: 1-based pivot column");
    verify->add_option("--workers", c.workers, "suite parallelism")->capture_default_str();

    auto* lattice = app.add_subcommand("lattice", "close the determinantal seeds under ideal operations");
    detail::add_matrix_options(lattice, c.params);
    lattice->add_option("--node-cap", c.node_cap, "largest lattice size")->capture_default_str();
    lattice->add_option("--seed", c.seeds, "extra seed ideal, ';'-separated generators");

    if (help) *help = app.help();
    std::vector<const char*> argv{"detfsing"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError&) {
        // show the help of the subcommand that was reached, if any
        if (help && !app.get_subcommands().empty()) *help = app.get_subcommands().front()->help();
        throw;
    }

    c.mode = json ? OutputMode::json : OutputMode::text;
    c.subcommand = app.get_subcommands().front()->get_name();
    detail::require(c.budget.max_reductions >= 1, "--max-gb-steps must be positive");
    detail::require(c.budget.max_seconds > 0, "--max-seconds must be positive");
    detail::require(c.workers >= 1 && c.workers <= 64, "--workers must be in [1, 64]");

    if (c.subcommand == "gen") {
        detail::validate_gen(c);
    } else if (c.subcommand == "check") {
        c.params.check = c.name;
        if (c.name != "compat") detail::require(c.premultiplier.empty() && c.ideal.empty(), "--a and --ideal apply to compat only");
        if (c.name == "dim" || c.name == "split" || c.name == "compat") detail::require(c.params.e_max == 0, "--e-max applies to fedder, freg and pure-freg");
        validate_request(c.params);
    } else if (c.subcommand == "verify") {
        c.params.check = c.name;
        if (c.name != "suite") validate_request(c.params);
    } else {
        CheckRequest q = c.params;
        q.check = "split";
        validate_request(q);
        detail::require(c.node_cap >= 2, "--node-cap must be at least 2");
    }
    return c;
}

namespace detail {

inline void print_polys(std::ostream& out, OutputMode mode, const std::string& kind, const std::vector<Polynomial>& ps) {
    if (mode == OutputMode::json) {
        Json arr = Json::array();
        for (const auto& p : ps) arr.push_back(to_string(p));
        out << Json{{"kind", kind}, {"polynomials", arr}}.dump() << "\n";
    } else {
        for (const auto& p : ps) out << to_string(p) << "\n";
    }
}

inline int run_gen(const CommandRequest& c, std::ostream& out) {
    const auto& q = c.params;
    PolyMatrix x = generic_matrix(q.m, q.n, q.p);
    if (c.name == "matrix") {
        if (c.mode == OutputMode::json) {
            Json rows = Json::array();
            for (std::size_t i = 0; i < x.rows(); ++i) {
                Json row = Json::array();
                for (std::size_t j = 0; j < x.cols(); ++j) row.push_back(to_string(x(i, j)));
                rows.push_back(row);
            }
            out << Json{{"kind", "matrix"}, {"rows", rows}}.dump() << "\n";
        } else {
            for (std::size_t i = 0; i < x.rows(); ++i) {
                for (std::size_t j = 0; j < x.cols(); ++j) out << (j ? " " : "") << to_string(x(i, j));
                out << "\n";
            }
        }
    } else if (c.name == "minors") {
        print_polys(out, c.mode, "minors", minors(x, q.t));
    } else if (c.name == "divisor") {
        print_polys(out, c.mode, "divisor", divisor_ideal(x, q.t).gens());
    } else if (c.name == "delta") {
        print_polys(out, c.mode, "delta", {splitting_delta(x)});
    } else {
        print_polys(out, c.mode, "gamma", gamma_minors(x));
    }
    return exit_pass;
}

/// check compat with a user-supplied premultiplier and/or ideal.
inline VerificationReport custom_compat(const CommandRequest& c) {
    const auto& q = c.params;
    auto D = determinantal({q.m, q.n, q.t}, q.p);
    const Ring& R = D.ring();
    Polynomial a = c.premultiplier.empty() ? splitting_delta(D.x).pow(q.p - 1) : parse_polynomial(c.premultiplier, R);
    if (a.is_zero()) throw UsageError("--a must be nonzero");
    Ideal I = D.presentation;
    if (!c.ideal.empty()) {
        std::vector<Polynomial> gens;
        for (const auto& g : split_generators(c.ideal)) gens.push_back(parse_polynomial(g, R));
        I = Ideal(R, std::move(gens));
    }
    Json params = spec_params(DeterminantalSpec{q.m, q.n, q.t}, q.p);
    params["a"] = to_string(a);
    Json gens = Json::array();
    for (const auto& g : I.gens()) gens.push_back(to_string(g));
    params["ideal"] = gens;
    return run_check("compat", params, c.budget, [&](Context& ctx, Json& w) {
        PhiMap phi(a, 1);
        w["split"] = is_split(phi);
        if (auto rem = compatibility_witness(phi, I, ctx)) {
            w["remainder"] = to_string(*rem);
            return Verdict::fail;
        }
        return Verdict::pass;
    });
}

inline int run_lattice(const CommandRequest& c, std::ostream& out, std::ostream& err) {
    const auto& q = c.params;
    auto D = determinantal({q.m, q.n, q.t}, q.p);
    const Ring& R = D.ring();
    std::vector<Ideal> seeds{D.presentation};
    if (q.t >= 2) seeds.push_back(D.divisor);
    for (const auto& s : c.seeds) {
        std::vector<Polynomial> gens;
        for (const auto& g : split_generators(s)) gens.push_back(parse_polynomial(g, R));
        seeds.emplace_back(R, std::move(gens));
    }
    PhiMap phi(splitting_delta(D.x).pow(q.p - 1), 1);
    Context ctx(c.budget);
    try {
        auto L = compatible_closure(phi, seeds, ctx, c.node_cap);
        out << lattice_export(L);
        return exit_pass;
    } catch (const SeedIncompatible& e) {
        err << "detfsing: " << e.what() << "\n";
        return exit_fail;
    } catch (const NodeCapExceeded& e) {
        out << lattice_export(e.partial());
        err << "detfsing: " << e.what() << "; the lattice above is partial\n";
        return exit_inconclusive;
    } catch (const BudgetExceeded& e) {
        err << "detfsing: " << e.what() << "\n";
        return exit_inconclusive;
    }
}

}  // namespace detail

/// Runs a validated request, writing reports to `out` and diagnostics to `err`.
inline int execute(const CommandRequest& c, std::ostream& out, std::ostream& err) {
    if (c.subcommand == "gen") return detail::run_gen(c, out);
    if (c.subcommand == "lattice") return detail::run_lattice(c, out, err);
    std::vector<VerificationReport> reports;
    if (c.subcommand == "check" && c.name == "compat" && (!c.premultiplier.empty() || !c.ideal.empty())) {
        reports.push_back(detail::custom_compat(c));
    } else if (c.subcommand == "verify" && c.name == "suite") {
        reports = run_suite(default_grid(), SuiteOptions{c.budget, c.workers});
    } else {
        reports.push_back(run_request(c.params, c.budget));
    }
    for (const auto& r : reports) out << emit_report(r, c.mode);
    out.flush();
    return exit_code(overall(reports));
}

/// The whole command line: parse, validate, execute. Never throws.
inline int run_command(const std::vector<std::string>& args, std::ostream& out = std::cout,
                       std::ostream& err = std::cerr) {
    std::string help;
    CommandRequest c;
    try {
        c = parse_command(args, &help);
    } catch (const CLI::CallForHelp&) {
        out << help;
        return exit_pass;
    } catch (const CLI::ParseError& e) {
        err << "detfsing: " << e.what() << "\n" << help;
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "detfsing: " << e.what() << "\n" << help;
        return exit_usage;
    }
    try {
        return execute(c, out, err);
    } catch (const ParseError& e) {
        err << "detfsing: " << e.what() << "\n";
        return exit_usage;
    } catch (const UsageError& e) {
        err << "detfsing: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "detfsing: " << e.what() << "\n";
        return exit_fail;
    }
}

}  // namespace detfsing

#endif  // DETFSING_CLI_HPP
