#ifndef QSUPER_CLI_HPP
#define QSUPER_CLI_HPP

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <exception>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "brundan.hpp"
#include "characters.hpp"
#include "errors.hpp"
#include "report.hpp"
#include "weights.hpp"

namespace qsuper::cli {

enum exit_code : int {
    ok = 0,
    parse_failure = 2,
    domain_failure = 3,
    internal_failure = 4,
    theorem_failure = 5,
};

enum class output_format { plain, json, csv };

struct options {
    std::string weight_text;
    std::size_t rank = 0;
    int bound = 0;
    int sumbound = 0;
    std::string format;
    unsigned jobs = 1;
    bool timing = false;
};

inline output_format parse_format(const std::string& s, output_format fallback) {
    if (s.empty())
        return fallback;
    if (s == "plain")
        return output_format::plain;
    if (s == "json")
        return output_format::json;
    if (s == "csv")
        return output_format::csv;
    throw parse_error("unknown format '" + s + "'");
}

inline report_json report_head(const std::string& command, const weight& w) {
    report_json j;
    j["command"] = command;
    j["rank"] = w.rank();
    j["weight"] = weight_json(w);
    return j;
}

/// schur, schurp, euler, irr: a single Laurent polynomial.
inline int run_poly_command(const std::string& command, const options& opt, std::ostream& out) {
    auto fmt = parse_format(opt.format, output_format::plain);
    if (fmt == output_format::csv)
        throw parse_error(command + " has no csv output");
    const weight w = parse_weight(opt.weight_text);

    laurent_poly f;
    if (command == "schur")
        f = schur(w);
    else if (command == "schurp")
        f = schur_p(w);
    else if (command == "euler")
        f = euler_char(w);
    else
        f = irreducible_character(w);

    if (fmt == output_format::json) {
        auto j = report_head(command, w);
        j["terms"] = terms_json(f);
        out << j.dump(2) << "\n";
    } else {
        out << to_string(f) << "\n";
    }
    return ok;
}

inline int run_branch(const options& opt, std::ostream& out) {
    auto fmt = parse_format(opt.format, output_format::plain);
    if (fmt == output_format::csv)
        throw parse_error("branch has no csv output");
    const weight w = parse_weight(opt.weight_text);
    character_solver solver(w.rank());
    const auto ex = solver.branching(w);
    auto it = ex.find(weight::zero(w.rank()));
    const integer trivial = it == ex.end() ? integer(0) : it->second;

    if (fmt == output_format::json) {
        auto j = report_head("branch", w);
        j["expansion"] = expansion_json(ex);
        j["trivial_mult"] = trivial.str();
        out << j.dump(2) << "\n";
    } else {
        out << expansion_plain(ex) << "trivial_mult: " << trivial.str() << "\n";
    }
    return ok;
}

inline int run_verma(const options& opt, std::ostream& out) {
    auto fmt = parse_format(opt.format, output_format::plain);
    if (fmt == output_format::csv)
        throw parse_error("verma has no csv output");
    const weight w = parse_weight(opt.weight_text);
    const integer mult = verma_trivial_multiplicity(w);
    const integer sch = sch_verma(w);
    if (fmt == output_format::json) {
        auto j = report_head("verma", w);
        j["trivial_mult"] = mult.str();
        j["sch"] = sch.str();
        out << j.dump(2) << "\n";
    } else {
        out << "trivial_mult: " << mult.str() << "\nsch: " << sch.str() << "\n";
    }
    return ok;
}

/// Computes one sweep row. A nonzero trivial multiplicity for nu != 0 is
/// recorded as a failing row rather than thrown, so the sweep can report it.
inline sweep_row verify_one(character_solver& solver, const weight& nu) {
    sweep_row r;
    r.nu = nu;
    r.ell = ell(nu);
    r.p = pairing(nu).p();
    r.trivial_mult = solver.trivial_multiplicity(nu);
    if (nu.is_zero()) {
        r.sch = solver.supercharacter_verdict(nu);
        r.pass = r.trivial_mult == 1 && r.sch == 1;
    } else if (r.trivial_mult != 0) {
        r.sch = -1;
        r.pass = false;
    } else {
        r.sch = solver.supercharacter_verdict(nu);
        r.pass = r.sch == 0;
    }
    return r;
}

/// Evaluates the sweep, fanning out over `jobs` workers with one solver
/// each; rows come back in enumeration order.
inline std::vector<sweep_row> verify_sweep(std::size_t n, int bound, int sumbound, unsigned jobs) {
    const auto weights = dominant_sweep_box(n, bound, sumbound);
    std::vector<sweep_row> rows(weights.size());
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, weights.size()))));

    std::vector<std::exception_ptr> errors(jobs);
    auto work = [&](unsigned worker) {
        try {
            character_solver solver(n);
            for (std::size_t i = worker; i < weights.size(); i += jobs)
                rows[i] = verify_one(solver, weights[i]);
        } catch (...) {
            errors[worker] = std::current_exception();
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back(work, t);
        for (auto& th : pool)
            th.join();
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return rows;
}

inline int run_verify(const options& opt, std::ostream& out, std::ostream& err) {
    auto fmt = parse_format(opt.format, output_format::csv);
    if (opt.rank < 1)
        throw domain_error("verify: rank must be at least 1");
    if (opt.bound < 0 || opt.sumbound < 0)
        throw domain_error("verify: bounds must be nonnegative");

    const auto rows = verify_sweep(opt.rank, opt.bound, opt.sumbound, opt.jobs);
    const bool all_pass = std::all_of(rows.begin(), rows.end(), [](const sweep_row& r) { return r.pass; });

    if (fmt == output_format::json) {
        report_json j;
        j["command"] = "verify";
        j["rank"] = opt.rank;
        j["bound"] = opt.bound;
        j["sumbound"] = opt.sumbound;
        report_json results = report_json::array();
        for (const auto& r : rows)
            results.push_back(sweep_row_json(r));
        j["results"] = std::move(results);
        j["verdict"] = all_pass ? "pass" : "fail";
        out << j.dump(2) << "\n";
    } else if (fmt == output_format::csv) {
        out << csv_header << "\n";
        for (const auto& r : rows)
            out << csv_line(r) << "\n";
    } else {
        out << "checked " << rows.size() << " weights: " << (all_pass ? "pass" : "fail") << "\n";
    }

    for (const auto& r : rows)
        if (!r.pass)
            err << "theorem violation at " << to_string(r.nu) << ": trivial_mult=" << r.trivial_mult.str() << "\n";
    return all_pass ? ok : theorem_failure;
}

/**
 * Entry point shared by the `qsuper` tool and the tests. `args` excludes
 * the program name. Errors are reported on `err` and mapped to the exit
 * code contract: 2 parse, 3 domain, 4 internal invariant, 5 theorem.
 */
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Characters and supercharacters of finite-dimensional q(n)-modules", "qsuper"};
    app.require_subcommand(1);
    options opt;

    auto add_weight = [&](CLI::App* sub) {
        sub->add_option("-w,--weight", opt.weight_text, "comma-separated coordinates, e.g. 2,0,-2")
            ->required()
            ->allow_extra_args(false);
        sub->add_option("--format", opt.format, "plain or json");
        sub->add_flag("--timing", opt.timing, "print elapsed time on stderr");
    };

    auto* schur_cmd = app.add_subcommand("schur", "Schur Laurent polynomial s_mu");
    auto* schurp_cmd = app.add_subcommand("schurp", "Schur P-Laurent polynomial P_lambda");
    auto* euler_cmd = app.add_subcommand("euler", "character of the Euler characteristic E(lambda)");
    auto* irr_cmd = app.add_subcommand("irr", "character of the simple module L(lambda)");
    auto* branch_cmd = app.add_subcommand("branch", "gl(n)-composition multiplicities of L(lambda)");
    auto* verma_cmd = app.add_subcommand("verma", "trivial gl(n)-multiplicity and supercharacter of a Verma module");
    for (auto* sub : {schur_cmd, schurp_cmd, euler_cmd, irr_cmd, branch_cmd, verma_cmd})
        add_weight(sub);

    auto* verify_cmd = app.add_subcommand("verify", "sweep dominant integral weights and check sch L = 0");
    verify_cmd->add_option("-n,--rank", opt.rank, "rank n")->required();
    verify_cmd->add_option("-b,--bound", opt.bound, "max |lambda_i|")->required();
    verify_cmd->add_option("-s,--sumbound", opt.sumbound, "max sum |lambda_i|")->required();
    verify_cmd->add_option("--format", opt.format, "csv, json or plain");
    verify_cmd->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--timing", opt.timing, "print elapsed time on stderr");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return parse_failure;
    }

    const auto start = std::chrono::steady_clock::now();
    int code = ok;
    try {
        if (verify_cmd->parsed())
            code = run_verify(opt, out, err);
        else if (branch_cmd->parsed())
            code = run_branch(opt, out);
        else if (verma_cmd->parsed())
            code = run_verma(opt, out);
        else
            code = run_poly_command(app.get_subcommands().front()->get_name(), opt, out);
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return parse_failure;
    } catch (const domain_error& e) {
        err << "domain error: " << e.what() << "\n";
        return domain_failure;
    } catch (const invariant_violation& e) {
        err << "internal invariant violated: " << e.what() << "\n";
        return internal_failure;
    } catch (const theorem_violation& e) {
        err << "theorem violation: " << e.what() << "\n";
        return theorem_failure;
    }
    if (opt.timing) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        err << "elapsed: " << ms.count() << " ms\n";
    }
    return code;
}

} // namespace qsuper::cli

#endif
