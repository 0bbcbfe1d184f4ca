#include "qsc/scaling.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include <Eigen/Dense>
#include <json.hpp>

#include "qsc/serialize.hpp"

namespace qsc {

const char* problem_name(Problem problem) {
    return problem == Problem::one_k_sc ? "one-k-sc" : "r-k-sc";
}

const char* variant_name(Variant variant) {
    return variant == Variant::fixed_indices ? "fixed" : "any";
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t counter) {
    return keyed_mix(master_seed, counter);
}

namespace {

std::uint64_t domain_for(const ScalingConfig& config, std::uint64_t n) {
    return config.problem == Problem::one_k_sc ? recommended_domain_1k(config.k, n)
                                               : recommended_domain_rk(config.r, config.k, n);
}

TrialRecord run_trial(const ScalingConfig& config, std::uint64_t n, std::uint64_t m,
                      std::uint32_t trial, std::uint64_t counter) {
    TrialRecord record;
    record.n = n;
    record.m = m;
    record.trial = trial;
    record.seed = trial_seed(config.master_seed, counter);

    FunctionFamily family(record.seed, config.k, n, m);
    Rng rng(mix64(record.seed ^ 0x7c3a9d0553c5ed3bULL));
    QueryLedger ledger;

    SolveResult result =
        config.problem == Problem::one_k_sc
            ? solve_1k(family, default_params_1k(config.k, n, config.variant), rng, ledger)
            : solve_rk(family, config.r, rng, ledger);

    record.quantum_queries = ledger.quantum_queries;
    record.classical_evals = ledger.classical_evals;
    record.success = result.ok();
    if (record.success) record.witness_json = witness_to_json(result.witness);
    return record;
}

} // namespace

ScalingRun run_scaling(const ScalingConfig& config, unsigned workers) {
    if (config.n_values.empty()) throw argument_error("run_scaling: no N values");
    if (config.trials == 0) throw argument_error("run_scaling: trials must be >= 1");

    // Validate every domain before doing any work.
    std::vector<std::uint64_t> domains;
    domains.reserve(config.n_values.size());
    for (std::uint64_t n : config.n_values) domains.push_back(domain_for(config, n));

    ScalingRun run{config, {}};
    const std::size_t total = config.n_values.size() * config.trials;
    run.records.resize(total);

    if (workers == 0)
        workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t idx = next.fetch_add(1); idx < total; idx = next.fetch_add(1)) {
            const std::size_t n_index = idx / config.trials;
            const std::uint32_t trial = static_cast<std::uint32_t>(idx % config.trials);
            run.records[idx] = run_trial(config, config.n_values[n_index], domains[n_index],
                                         trial, static_cast<std::uint64_t>(idx));
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    // Replay soundness: stored witnesses must verify against a fresh family.
    for (const auto& record : run.records) {
        if (!record.success) continue;
        FunctionFamily family(record.seed, config.k, record.n, record.m);
        if (!verify_sc(family, sc_witness_from_json(record.witness_json)))
            throw state_error("run_scaling: stored witness failed replay verification");
    }
    return run;
}

FitResult fit_exponent(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 3) throw argument_error("fit_exponent: need at least 3 points");
    const Eigen::Index n = static_cast<Eigen::Index>(points.size());
    Eigen::MatrixXd design(n, 2);
    Eigen::VectorXd target(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto [x, y] = points[static_cast<std::size_t>(i)];
        if (x <= 0.0 || y <= 0.0) throw argument_error("fit_exponent: points must be positive");
        design(i, 0) = std::log(x);
        design(i, 1) = 1.0;
        target(i) = std::log(y);
    }
    const Eigen::Vector2d coeff = design.colPivHouseholderQr().solve(target);

    const Eigen::VectorXd residual = target - design * coeff;
    const double ss_res = residual.squaredNorm();
    const double ss_tot = (target.array() - target.mean()).square().sum();

    FitResult fit;
    fit.slope = coeff(0);
    fit.intercept = coeff(1);
    fit.r2 = ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
    return fit;
}

std::vector<std::pair<double, double>> mean_queries_by_n(const ScalingRun& run) {
    std::map<std::uint64_t, std::pair<double, std::uint64_t>> sums;
    for (const auto& record : run.records) {
        if (!record.success) continue;
        auto& [sum, count] = sums[record.n];
        sum += static_cast<double>(record.quantum_queries);
        count += 1;
    }
    std::vector<std::pair<double, double>> points;
    points.reserve(sums.size());
    for (const auto& [n, acc] : sums)
        points.emplace_back(static_cast<double>(n), acc.first / static_cast<double>(acc.second));
    return points;
}

namespace {

std::string csv_quote(const std::string& field) {
    std::string quoted = "\"";
    for (char c : field) {
        quoted += c;
        if (c == '"') quoted += '"';
    }
    quoted += '"';
    return quoted;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                field += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else {
            field += c;
        }
    }
    fields.push_back(std::move(field));
    return fields;
}

} // namespace

void emit(const ScalingRun& run, EmitFormat format, std::ostream& out) {
    if (format == EmitFormat::csv) {
        out << "problem,r,k,variant,N,M,trial,seed,quantum_queries,classical_evals,success,"
               "witness_json\n";
        for (const auto& rec : run.records) {
            out << problem_name(run.config.problem) << ',' << run.config.r << ','
                << run.config.k << ',' << variant_name(run.config.variant) << ',' << rec.n << ','
                << rec.m << ',' << rec.trial << ',' << rec.seed << ',' << rec.quantum_queries
                << ',' << rec.classical_evals << ',' << (rec.success ? 1 : 0) << ','
                << csv_quote(rec.witness_json) << '\n';
        }
        return;
    }

    nlohmann::json root;
    root["config"] = {{"problem", problem_name(run.config.problem)},
                      {"r", run.config.r},
                      {"k", run.config.k},
                      {"variant", variant_name(run.config.variant)},
                      {"n_values", run.config.n_values},
                      {"trials", run.config.trials},
                      {"master_seed", run.config.master_seed}};
    root["records"] = nlohmann::json::array();
    for (const auto& rec : run.records) {
        nlohmann::json item{{"N", rec.n},
                            {"M", rec.m},
                            {"trial", rec.trial},
                            {"seed", rec.seed},
                            {"quantum_queries", rec.quantum_queries},
                            {"classical_evals", rec.classical_evals},
                            {"success", rec.success}};
        item["witness"] = rec.success ? nlohmann::json::parse(rec.witness_json)
                                      : nlohmann::json(nullptr);
        root["records"].push_back(std::move(item));
    }
    out << root.dump(2) << '\n';
}

std::vector<std::pair<double, double>> points_from_csv(std::istream& in) {
    std::map<std::uint64_t, std::pair<double, std::uint64_t>> sums;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        const auto fields = split_csv_line(line);
        if (fields.size() < 12) throw argument_error("points_from_csv: malformed row");
        if (fields[10] != "1") continue;
        auto& [sum, count] = sums[std::stoull(fields[4])];
        sum += std::stod(fields[8]);
        count += 1;
    }
    std::vector<std::pair<double, double>> points;
    for (const auto& [n, acc] : sums)
        points.emplace_back(static_cast<double>(n), acc.first / static_cast<double>(acc.second));
    return points;
}

} // namespace qsc
