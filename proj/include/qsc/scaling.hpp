#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qsc/sc_algorithms.hpp"

namespace qsc {

enum class Problem { one_k_sc, r_k_sc };

const char* problem_name(Problem problem);
const char* variant_name(Variant variant);

struct ScalingConfig {
    Problem problem = Problem::one_k_sc;
    std::uint32_t r = 1;
    std::uint32_t k = 2;
    Variant variant = Variant::fixed_indices;
    std::vector<std::uint64_t> n_values;
    std::uint32_t trials = 100;
    std::uint64_t master_seed = 1;
};

struct TrialRecord {
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::uint32_t trial = 0;
    std::uint64_t seed = 0;
    std::uint64_t quantum_queries = 0;
    std::uint64_t classical_evals = 0;
    bool success = false;
    std::string witness_json; // empty unless success
};

struct ScalingRun {
    ScalingConfig config;
    std::vector<TrialRecord> records; // ordered by (N, trial)
};

/// Per-trial seed: the master seed pushed through the hash family's keyed
/// mapping with the global trial counter.
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t counter);

/// Runs trials deterministically from (config, master seed); domain sizes are
/// validated against the 2^24 cap before any work. Every successful witness
/// is re-verified against a freshly reconstructed family. Records come back
/// ordered by (N, trial) no matter how many workers run them (0 = auto).
ScalingRun run_scaling(const ScalingConfig& config, unsigned workers = 0);

/// Least-squares fit of log(mean queries) against log(N). Needs >= 3 points
/// with positive coordinates.
struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};

FitResult fit_exponent(const std::vector<std::pair<double, double>>& points);

/// Per-N mean quantum queries over successful trials.
std::vector<std::pair<double, double>> mean_queries_by_n(const ScalingRun& run);

enum class EmitFormat { csv, json };

/// CSV columns, in order: problem,r,k,variant,N,M,trial,seed,quantum_queries,
/// classical_evals,success,witness_json.
void emit(const ScalingRun& run, EmitFormat format, std::ostream& out);

/// Parses the CSV back into (N, mean queries) points for `fit`.
std::vector<std::pair<double, double>> points_from_csv(std::istream& in);

} // namespace qsc
