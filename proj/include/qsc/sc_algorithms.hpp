#pragma once

#include <cstdint>
#include <vector>

#include "qsc/bounds.hpp"
#include "qsc/grover.hpp"
#include "qsc/hash_family.hpp"
#include "qsc/witness.hpp"

namespace qsc {

/// Phase-1 repetition filter: fixed uses functions 0..j-1, any accepts a
/// repetition on any j distinct functions.
enum class Variant { fixed_indices, any_indices };

struct OneKParams {
    std::uint32_t j = 2;      // repetition order, 2 <= j <= k
    std::uint64_t t = 1;      // repetitions to collect
    Variant variant = Variant::fixed_indices;
};

/// j = (k+2)/2 for even k, (k+1)/2 for odd k; t = max(1, N^{(k-2j+2)/3}).
OneKParams default_params_1k(std::uint32_t k, std::uint64_t codomain_size,
                             Variant variant = Variant::fixed_indices);

struct RKParams {
    std::uint32_t k_prime = 1;    // sub-problem width, divisible by r
    std::uint64_t t = 1;          // sub-solutions to collect
    std::uint32_t k_extended = 0; // k rounded up to a multiple of r+1 (== k when divisible)
};

/// k' = r*k''/(r+1) where k'' is k rounded up to a multiple of r+1;
/// t = max(1, N^{(r*k'' - r*k' - k')/(3r)}).
RKParams default_params_rk(std::uint32_t r, std::uint32_t k, std::uint64_t codomain_size);

enum class SolveStatus {
    found,       // verified witness produced
    infeasible,  // a marked set came up empty / too small at this instance
    cutoff,      // a BBHT run exhausted its iteration budget
};

struct SolveResult {
    SolveStatus status = SolveStatus::infeasible;
    SubsetCoverWitness witness;
    bool ok() const noexcept { return status == SolveStatus::found; }
};

/// Marked set of the phase-1 filter; hash evaluations are charged to
/// ledger.classical_evals.
std::vector<std::uint64_t> phase1_marked_set(const FunctionFamily& family, std::uint32_t j,
                                             Variant variant, QueryLedger& ledger);

/// Two-phase (1,k)-SC search: collect t distinct j-repetitions by Grover,
/// then Grover for an element whose images cover one of them. The returned
/// witness always passes verify_sc. Sized for M = N^k domains; much smaller
/// domains tend to come back infeasible.
SolveResult solve_1k(const FunctionFamily& family, const OneKParams& params, Rng& rng,
                     QueryLedger& ledger);

/// Recursive (r,k)-SC search: t distinct (r-1,k')-SC on the first k'
/// functions, then Grover for an element covering the remaining coordinates
/// of one sub-solution. Bottoms out at r=1 via solve_1k. When r+1 does not
/// divide k the search runs on an extended family and the witness is
/// projected back to the original functions.
SolveResult solve_rk(const FunctionFamily& family, std::uint32_t r, Rng& rng,
                     QueryLedger& ledger);

enum class UpperBoundProblem {
    one_k_sc,    // k/4 for even k, k/4 + 1/12 for odd
    r_k_sc,      // k/(2+2r), plus 1/2 when r+1 does not divide k
    k_rsc_upper, // (2^k - 1)/(2^{k+1} - 1)
};

/// N-exponent of the expected quantum query count.
Rational predicted_query_exponent(UpperBoundProblem problem, std::uint32_t r, std::uint32_t k);

} // namespace qsc
