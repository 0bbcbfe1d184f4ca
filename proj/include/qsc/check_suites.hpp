#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsc/compressed_oracle.hpp"
#include "qsc/oracle_mc.hpp"

namespace qsc {

/// One row of the Monte-Carlo bound-consistency table: an empirical success
/// proportion checked against the squared clamped amplitude bound.
struct McCheckRow {
    std::string property;
    std::uint64_t entries = 0;
    std::uint64_t codomain = 0;
    std::uint32_t k = 0;
    std::string params;
    std::uint64_t trials = 0;
    double p_hat = 0.0;
    double ci_half_width = 0.0;
    double bound_prob = 0.0;
    bool holds = false;
    double margin = 0.0;
};

/// Collision grid (i in {2,4,8,16}, N in {64,256}, j in {1,2}) plus the
/// single-repetition grid (j in {2,3}).
std::vector<McCheckRow> run_mc_suite(std::uint64_t trials, std::uint64_t seed);

/// One row of the compressed-oracle invariant suite.
struct CoCheckRow {
    std::string check;
    std::string dims;
    std::uint32_t queries = 0;
    double max_error = 0.0;
    bool pass = false;
};

/// Checks: Comp involution (1e-12), cO unitarity (1e-10), standard-vs-
/// compressed adversary marginals and decompressed state equality (1e-9),
/// support growth (exact), the Zhandry output bound and the recursive
/// projection inequality on a corpus of random circuits.
std::vector<CoCheckRow> run_co_suite(std::uint64_t seed, std::uint32_t circuits);

} // namespace qsc
