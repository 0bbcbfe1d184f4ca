#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qsc/errors.hpp"
#include "qsc/rng.hpp"

namespace qsc {

/// Query accounting for one experiment. quantum_queries counts simulated
/// Grover iterations (one iteration = one oracle query); classical_evals
/// counts hash evaluations spent building marked sets.
struct QueryLedger {
    std::uint64_t quantum_queries = 0;
    std::uint64_t classical_evals = 0;
    std::uint64_t grover_runs = 0;
};

/// A search problem with an explicitly known marked set. The simulator works
/// in the two-dimensional marked/unmarked subspace, so only |marked| matters
/// for dynamics, but members are kept to sample outcomes.
struct SearchInstance {
    std::uint64_t space_size = 0;
    std::vector<std::uint64_t> marked; // sorted, unique, all < space_size

    static SearchInstance make(std::uint64_t space_size, std::vector<std::uint64_t> marked);
};

/// sin^2((2m+1) * asin(sqrt(t/M))): exact success probability of measuring a
/// marked element after m Grover iterations.
double success_probability(std::uint64_t space_size, std::uint64_t marked_count, std::uint64_t m);

/// One Grover run with a fixed iteration count m. Charges exactly m queries,
/// then returns a uniformly random marked element with the rotation
/// probability, or nullopt for an unmarked measurement.
std::optional<std::uint64_t> grover_sample(const SearchInstance& inst, std::uint64_t m, Rng& rng,
                                           QueryLedger& ledger);

/// Default BBHT budget: 64 * sqrt(M) total iterations.
std::uint64_t default_cutoff(std::uint64_t space_size);

/// Grover search with unknown marked count: iteration bound grows by 6/5 up
/// to sqrt(M), the per-round count is drawn uniformly below it. Returns
/// nullopt once the cutoff would be exceeded (or the marked set is empty).
std::optional<std::uint64_t> bbht_search(const SearchInstance& inst, Rng& rng, QueryLedger& ledger,
                                         std::uint64_t cutoff);

inline std::optional<std::uint64_t> bbht_search(const SearchInstance& inst, Rng& rng,
                                                QueryLedger& ledger) {
    return bbht_search(inst, rng, ledger, default_cutoff(inst.space_size));
}

/// `count` distinct marked elements via repeated bbht_search, removing each
/// find from the marked set. nullopt if |marked| < count or a run exhausts
/// its cutoff.
std::optional<std::vector<std::uint64_t>> find_distinct(const SearchInstance& inst,
                                                        std::uint64_t count, Rng& rng,
                                                        QueryLedger& ledger);

/// Grover sampler for a known marked count: runs the rotation-optimal
/// iteration count m* = round((pi/(2 theta) - 1)/2) and retries on failure,
/// charging m* per attempt. Expected cost (pi/4 + o(1)) * sqrt(M/t) with an
/// N-independent constant. nullopt once another attempt would exceed the
/// cutoff, or when the marked set is empty.
std::optional<std::uint64_t> grover_known_count(const SearchInstance& inst, Rng& rng,
                                                QueryLedger& ledger, std::uint64_t cutoff);

inline std::optional<std::uint64_t> grover_known_count(const SearchInstance& inst, Rng& rng,
                                                       QueryLedger& ledger) {
    return grover_known_count(inst, rng, ledger, default_cutoff(inst.space_size));
}

} // namespace qsc
