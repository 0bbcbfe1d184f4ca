// qsc: experiment driver for subset-cover query-complexity simulations.
//
// Subcommands: solve, scaling, bounds, mc-check, co-check, fit.
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsc/bounds.hpp"
#include "qsc/check_suites.hpp"
#include "qsc/scaling.hpp"
#include "qsc/serialize.hpp"

namespace {

using namespace qsc;

std::string fmt(double v) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.10g", v);
    return buffer;
}

struct CommonOptions {
    std::string problem = "one-k-sc";
    std::uint32_t r = 1;
    std::uint32_t k = 2;
    std::vector<std::uint64_t> n_values;
    std::uint32_t trials = 100;
    std::uint64_t seed = 1;
    std::string variant = "fixed";
    std::string out;
    std::string format = "csv";
};

Problem parse_problem(const std::string& name) {
    if (name == "one-k-sc") return Problem::one_k_sc;
    if (name == "r-k-sc") return Problem::r_k_sc;
    throw CLI::ValidationError("--problem must be one-k-sc or r-k-sc");
}

Variant parse_variant(const std::string& name) {
    if (name == "fixed") return Variant::fixed_indices;
    if (name == "any") return Variant::any_indices;
    throw CLI::ValidationError("--variant must be fixed or any");
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw CLI::ValidationError("cannot open output file " + path);
    return file;
}

int cmd_solve(const CommonOptions& opt) {
    if (opt.n_values.size() != 1) throw CLI::ValidationError("solve expects exactly one --n");
    const std::uint64_t n = opt.n_values.front();
    const Problem problem = parse_problem(opt.problem);
    const std::uint64_t m = problem == Problem::one_k_sc ? recommended_domain_1k(opt.k, n)
                                                         : recommended_domain_rk(opt.r, opt.k, n);

    FunctionFamily family(opt.seed, opt.k, n, m);
    Rng rng(mix64(opt.seed ^ 0x7c3a9d0553c5ed3bULL));
    QueryLedger ledger;
    const SolveResult result =
        problem == Problem::one_k_sc
            ? solve_1k(family, default_params_1k(opt.k, n, parse_variant(opt.variant)), rng,
                       ledger)
            : solve_rk(family, opt.r, rng, ledger);

    nlohmann::json output;
    output["problem"] = opt.problem;
    output["N"] = n;
    output["M"] = m;
    output["seed"] = opt.seed;
    output["status"] = result.status == SolveStatus::found        ? "found"
                       : result.status == SolveStatus::infeasible ? "infeasible"
                                                                  : "cutoff";
    output["ledger"] = nlohmann::json::parse(ledger_to_json(ledger));
    output["witness"] = result.ok() ? nlohmann::json::parse(witness_to_json(result.witness))
                                    : nlohmann::json(nullptr);
    std::cout << output.dump(2) << '\n';
    return result.ok() ? 0 : 1;
}

int cmd_scaling(const CommonOptions& opt) {
    ScalingConfig config;
    config.problem = parse_problem(opt.problem);
    config.r = opt.r;
    config.k = opt.k;
    config.variant = parse_variant(opt.variant);
    config.n_values = opt.n_values;
    config.trials = opt.trials;
    config.master_seed = opt.seed;

    const ScalingRun run = run_scaling(config);
    std::ofstream file;
    std::ostream& out = open_output(opt.out, file);
    emit(run, opt.format == "json" ? EmitFormat::json : EmitFormat::csv, out);

    const auto points = mean_queries_by_n(run);
    if (points.size() >= 3) {
        const FitResult fit = fit_exponent(points);
        std::cerr << "fit: slope=" << fmt(fit.slope) << " intercept=" << fmt(fit.intercept)
                  << " r2=" << fmt(fit.r2) << '\n';
    }
    return 0;
}

void bound_row(std::ostream& out, const std::string& formula, const std::string& args,
               const BoundValue& b) {
    out << formula << ',' << args << ',' << fmt(b.raw) << ',' << fmt(b.clamped) << ','
        << fmt(b.as_probability) << '\n';
}

void scalar_row(std::ostream& out, const std::string& formula, const std::string& args,
                double value) {
    const double clamped = std::min(value, 1.0);
    out << formula << ',' << args << ',' << fmt(value) << ',' << fmt(clamped) << ','
        << fmt(clamped * clamped) << '\n';
}

int cmd_bounds(std::uint32_t k, std::uint64_t n, const std::vector<std::uint64_t>& queries,
               const std::string& out_path) {
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    out << "formula,args,raw,clamped,probability\n";

    const double nd = static_cast<double>(n);
    for (std::uint64_t i : queries) {
        const double id = static_cast<double>(i);
        for (std::uint64_t j : {1ULL, 2ULL, 4ULL})
            bound_row(out, "collision_bound",
                      "i=" + std::to_string(i) + ";j=" + std::to_string(j) + ";N=" +
                          std::to_string(n),
                      collision_bound(id, static_cast<double>(j), nd));
        for (std::uint32_t j : {2u, 3u})
            bound_row(out, "repetition_bound",
                      "i=" + std::to_string(i) + ";l=1;j=" + std::to_string(j) + ";N=" +
                          std::to_string(n),
                      repetition_bound(id, 1.0, j, nd));
        if (k >= 2)
            bound_row(out, "one_ksc_amplitude_bound",
                      "i=" + std::to_string(i) + ";k=" + std::to_string(k) + ";N=" +
                          std::to_string(n),
                      one_ksc_amplitude_bound(id, k, nd));
        scalar_row(out, "mu3", "l=" + std::to_string(i) + ";N=" + std::to_string(n), mu3(id, nd));
        scalar_row(out, "a_i", "i=" + std::to_string(i) + ";N=" + std::to_string(n), a_i(i, nd));
        scalar_row(out, "a_is", "i=" + std::to_string(i) + ";s=3;N=" + std::to_string(n),
                   a_is(i, 3, nd));
    }
    for (std::uint32_t s : {1u, 2u, 3u, 4u, 8u})
        scalar_row(out, "pi_s", "s=" + std::to_string(s), pi_s(s));
    scalar_row(out, "mu_s", "s=3;l=0;N=" + std::to_string(n), mu_s(3, 0.0, nd));
    if (k >= 2) {
        scalar_row(out, "c_k", "k=" + std::to_string(k), static_cast<double>(c_k(k)));
        scalar_row(out, "lower_exponent_one_k_sc", "k=" + std::to_string(k),
                   lower_bound_exponent(LowerBoundProblem::one_k_sc, k).value());
    }
    scalar_row(out, "lower_exponent_k_rsc", "k=" + std::to_string(k),
               lower_bound_exponent(LowerBoundProblem::k_rsc, k).value());
    scalar_row(out, "lower_exponent_k_rsc_shifted", "s=" + std::to_string(k),
               k_rsc_exponent_shifted(k).value());
    scalar_row(out, "lower_exponent_k_distinct_2_rsc", "k=" + std::to_string(k),
               lower_bound_exponent(LowerBoundProblem::k_distinct_2_rsc, k).value());
    return 0;
}

int cmd_mc_check(std::uint64_t trials, std::uint64_t seed, const std::string& out_path) {
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    out << "property,i,N,k,params,trials,p_hat,ci_half_width,bound_prob,holds,margin\n";
    bool all_hold = true;
    for (const auto& row : run_mc_suite(trials, seed)) {
        out << row.property << ',' << row.entries << ',' << row.codomain << ',' << row.k << ','
            << row.params << ',' << row.trials << ',' << fmt(row.p_hat) << ','
            << fmt(row.ci_half_width) << ',' << fmt(row.bound_prob) << ','
            << (row.holds ? 1 : 0) << ',' << fmt(row.margin) << '\n';
        all_hold = all_hold && row.holds;
    }
    return all_hold ? 0 : 1;
}

int cmd_co_check(std::uint64_t seed, std::uint32_t circuits, const std::string& out_path) {
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    out << "check,dims,queries,max_error,pass\n";
    bool all_pass = true;
    for (const auto& row : run_co_suite(seed, circuits)) {
        out << row.check << ',' << row.dims << ',' << row.queries << ',' << fmt(row.max_error)
            << ',' << (row.pass ? 1 : 0) << '\n';
        all_pass = all_pass && row.pass;
    }
    return all_pass ? 0 : 1;
}

int cmd_fit(const std::string& in_path) {
    std::ifstream in(in_path);
    if (!in) throw CLI::ValidationError("cannot open input file " + in_path);
    const auto points = points_from_csv(in);
    const FitResult fit = fit_exponent(points);
    nlohmann::json output{{"points", points.size()},
                          {"slope", fit.slope},
                          {"intercept", fit.intercept},
                          {"r2", fit.r2}};
    std::cout << output.dump(2) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"subset-cover quantum query complexity workbench"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::uint64_t mc_trials = 100000;
    std::uint32_t co_circuits = 50;
    std::string fit_in;
    std::vector<std::uint64_t> bound_queries{0, 1, 2, 4, 8, 16};

    auto add_common = [&](CLI::App* cmd, bool needs_n) {
        cmd->add_option("--problem", opt.problem, "one-k-sc or r-k-sc");
        cmd->add_option("--r", opt.r, "number of covering elements");
        cmd->add_option("--k", opt.k, "number of hash functions");
        auto* n_opt = cmd->add_option("--n", opt.n_values, "codomain size (repeatable)");
        if (needs_n) n_opt->required();
        cmd->add_option("--trials", opt.trials, "trials per N");
        cmd->add_option("--seed", opt.seed, "master seed");
        cmd->add_option("--variant", opt.variant, "fixed or any");
        cmd->add_option("--out", opt.out, "output path (default stdout)");
        cmd->add_option("--format", opt.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    auto* solve = app.add_subcommand("solve", "solve one instance and print the witness");
    add_common(solve, true);

    auto* scaling = app.add_subcommand("scaling", "run a query-count sweep over N");
    add_common(scaling, true);

    auto* bounds = app.add_subcommand("bounds", "print the closed-form bound table");
    bounds->add_option("--k", opt.k, "number of hash functions");
    bounds->add_option("--n", opt.n_values, "codomain size");
    bounds->add_option("--i", bound_queries, "query counts to tabulate (repeatable)");
    bounds->add_option("--out", opt.out, "output path (default stdout)");

    auto* mc = app.add_subcommand("mc-check", "Monte-Carlo bound consistency grid");
    mc->add_option("--trials", mc_trials, "trials per grid point");
    mc->add_option("--seed", opt.seed, "seed");
    mc->add_option("--out", opt.out, "output path (default stdout)");

    auto* co = app.add_subcommand("co-check", "compressed-oracle invariant suite");
    co->add_option("--seed", opt.seed, "seed");
    co->add_option("--circuits", co_circuits, "corpus size");
    co->add_option("--out", opt.out, "output path (default stdout)");

    auto* fit = app.add_subcommand("fit", "fit a query exponent from a scaling CSV");
    fit->add_option("--in", fit_in, "scaling CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) return cmd_solve(opt);
        if (scaling->parsed()) return cmd_scaling(opt);
        if (bounds->parsed())
            return cmd_bounds(opt.k, opt.n_values.empty() ? 256 : opt.n_values.front(),
                              bound_queries, opt.out);
        if (mc->parsed()) return cmd_mc_check(mc_trials, opt.seed, opt.out);
        if (co->parsed()) return cmd_co_check(opt.seed, co_circuits, opt.out);
        if (fit->parsed()) return cmd_fit(fit_in);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const argument_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
