#include "qsc/grover.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qsc {

SearchInstance SearchInstance::make(std::uint64_t space_size, std::vector<std::uint64_t> marked) {
    if (space_size == 0) throw argument_error("SearchInstance: space must be nonempty");
    std::sort(marked.begin(), marked.end());
    marked.erase(std::unique(marked.begin(), marked.end()), marked.end());
    if (!marked.empty() && marked.back() >= space_size)
        throw argument_error("SearchInstance: marked element out of range");
    return SearchInstance{space_size, std::move(marked)};
}

double success_probability(std::uint64_t space_size, std::uint64_t marked_count, std::uint64_t m) {
    if (space_size == 0) throw argument_error("success_probability: M must be >= 1");
    if (marked_count > space_size) throw argument_error("success_probability: t > M");
    const double theta =
        std::asin(std::sqrt(static_cast<double>(marked_count) / static_cast<double>(space_size)));
    const double s = std::sin((2.0 * static_cast<double>(m) + 1.0) * theta);
    return s * s;
}

std::optional<std::uint64_t> grover_sample(const SearchInstance& inst, std::uint64_t m, Rng& rng,
                                           QueryLedger& ledger) {
    ledger.quantum_queries += m;
    if (inst.marked.empty()) return std::nullopt;
    const double p = success_probability(inst.space_size, inst.marked.size(), m);
    if (rng.uniform() >= p) return std::nullopt;
    return inst.marked[rng.below(inst.marked.size())];
}

std::uint64_t default_cutoff(std::uint64_t space_size) {
    return static_cast<std::uint64_t>(
        std::ceil(64.0 * std::sqrt(static_cast<double>(space_size))));
}

std::optional<std::uint64_t> bbht_search(const SearchInstance& inst, Rng& rng, QueryLedger& ledger,
                                         std::uint64_t cutoff) {
    if (cutoff == 0) throw argument_error("bbht_search: cutoff must be >= 1");
    ledger.grover_runs += 1;

    const double m_cap = std::max(1.0, std::sqrt(static_cast<double>(inst.space_size)));
    double bound = 1.0;
    std::uint64_t used = 0;
    // Rounds with j = 0 cost no queries, so bound the round count as well.
    const std::uint64_t max_rounds = 64 + 4 * cutoff;

    for (std::uint64_t round = 0; round < max_rounds; ++round) {
        const std::uint64_t j = rng.below(static_cast<std::uint64_t>(std::ceil(bound)));
        if (used + j > cutoff) return std::nullopt;
        used += j;
        if (auto hit = grover_sample(inst, j, rng, ledger)) return hit;
        bound = std::min(bound * 1.2, m_cap);
    }
    return std::nullopt;
}

std::optional<std::uint64_t> grover_known_count(const SearchInstance& inst, Rng& rng,
                                                QueryLedger& ledger, std::uint64_t cutoff) {
    if (cutoff == 0) throw argument_error("grover_known_count: cutoff must be >= 1");
    if (inst.marked.empty()) return std::nullopt;
    ledger.grover_runs += 1;

    const double theta = std::asin(std::sqrt(static_cast<double>(inst.marked.size()) /
                                             static_cast<double>(inst.space_size)));
    const std::uint64_t iterations = static_cast<std::uint64_t>(
        std::max(0.0, std::round((std::numbers::pi / (2.0 * theta) - 1.0) / 2.0)));

    // Zero-iteration attempts (t close to M) still consume one budget unit so
    // an unlucky streak cannot loop past the cutoff.
    const std::uint64_t attempt_cost = std::max<std::uint64_t>(iterations, 1);
    std::uint64_t used = 0;
    while (used + attempt_cost <= cutoff) {
        used += attempt_cost;
        if (auto hit = grover_sample(inst, iterations, rng, ledger)) return hit;
    }
    return std::nullopt;
}

std::optional<std::vector<std::uint64_t>> find_distinct(const SearchInstance& inst,
                                                        std::uint64_t count, Rng& rng,
                                                        QueryLedger& ledger) {
    if (count == 0) throw argument_error("find_distinct: count must be >= 1");
    if (inst.marked.size() < count) return std::nullopt;

    SearchInstance remaining = inst;
    std::vector<std::uint64_t> found;
    found.reserve(count);
    while (found.size() < count) {
        auto hit = bbht_search(remaining, rng, ledger, default_cutoff(remaining.space_size));
        if (!hit) return std::nullopt;
        found.push_back(*hit);
        auto it = std::lower_bound(remaining.marked.begin(), remaining.marked.end(), *hit);
        remaining.marked.erase(it);
    }
    std::sort(found.begin(), found.end());
    return found;
}

} // namespace qsc
