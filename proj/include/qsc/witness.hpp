#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qsc/hash_family.hpp"

namespace qsc {

/// Default ceiling on brute-force tuple enumeration.
inline constexpr std::uint64_t kEnumerationBudget = std::uint64_t{1} << 24;

/// An (r,k) subset-cover candidate: x0 plus r covering elements. The covered
/// element must not appear among the coverers; coverers may repeat.
struct SubsetCoverWitness {
    std::uint64_t x0 = 0;
    std::vector<std::uint64_t> coverers;
};

/// A k-RSC candidate: x0 plus one colliding partner per function.
/// partners[i] must collide with x0 on function i and differ from x0.
struct RestrictedSCWitness {
    std::uint64_t x0 = 0;
    std::vector<std::uint64_t> partners;
};

/// A j-repetition: one element on which the listed functions agree.
/// indices holds j >= 2 distinct function indices, sorted ascending.
struct RepetitionWitness {
    std::uint64_t x = 0;
    std::vector<std::uint32_t> indices;
};

bool verify_sc(const FunctionFamily& family, const SubsetCoverWitness& w);
bool verify_rsc(const FunctionFamily& family, const RestrictedSCWitness& w);
bool verify_repetition(const FunctionFamily& family, const RepetitionWitness& w);

/// Exhaustive search over (r+1)-tuples, smallest witness first.
/// Requires M^(r+1) <= budget.
std::optional<SubsetCoverWitness> brute_force_sc(const FunctionFamily& family, std::uint32_t r,
                                                 std::uint64_t budget = kEnumerationBudget);

/// Exhaustive search for a k-RSC (per-coordinate partner scan, O(M^2 k)).
/// Requires M^2 <= budget.
std::optional<RestrictedSCWitness> brute_force_rsc(const FunctionFamily& family,
                                                   std::uint64_t budget = kEnumerationBudget);

/// All x in [0, M) carrying a j-repetition: on `fixed_indices` when given,
/// on any j distinct indices otherwise. Requires M <= budget.
std::vector<RepetitionWitness> enumerate_repetitions(
    const FunctionFamily& family, std::uint32_t j,
    const std::optional<std::vector<std::uint32_t>>& fixed_indices = std::nullopt,
    std::uint64_t budget = kEnumerationBudget);

/// The canonical index set enumerate_repetitions would report for x, if any.
std::optional<std::vector<std::uint32_t>> repetition_indices_at(const FunctionFamily& family,
                                                                std::uint32_t j, std::uint64_t x);

} // namespace qsc
