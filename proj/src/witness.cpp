#include "qsc/witness.hpp"

#include <algorithm>
#include <unordered_map>

namespace qsc {

namespace {

void check_element(const FunctionFamily& family, std::uint64_t x, const char* what) {
    if (x >= family.domain_size()) throw argument_error(std::string(what) + ": element out of range");
}

bool is_subset(const std::vector<std::uint64_t>& sorted_small,
               const std::vector<std::uint64_t>& sorted_big) {
    return std::includes(sorted_big.begin(), sorted_big.end(), sorted_small.begin(),
                         sorted_small.end());
}

std::uint64_t pow_capped(std::uint64_t base, std::uint32_t exp, std::uint64_t limit) {
    std::uint64_t value = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (base != 0 && value > limit / base) return limit + 1;
        value *= base;
        if (value > limit) return limit + 1;
    }
    return value;
}

} // namespace

bool verify_sc(const FunctionFamily& family, const SubsetCoverWitness& w) {
    if (w.coverers.empty()) throw argument_error("verify_sc: witness needs at least one coverer");
    check_element(family, w.x0, "verify_sc");
    for (std::uint64_t x : w.coverers) check_element(family, x, "verify_sc");

    for (std::uint64_t x : w.coverers)
        if (x == w.x0) return false;

    std::vector<std::uint64_t> covered;
    covered.reserve(w.coverers.size() * family.k());
    for (std::uint64_t x : w.coverers)
        for (std::uint32_t i = 0; i < family.k(); ++i) covered.push_back(family.eval(i, x));
    std::sort(covered.begin(), covered.end());
    covered.erase(std::unique(covered.begin(), covered.end()), covered.end());

    return is_subset(family.image_set(w.x0), covered);
}

bool verify_rsc(const FunctionFamily& family, const RestrictedSCWitness& w) {
    if (w.partners.size() != family.k())
        throw argument_error("verify_rsc: partner count must equal k");
    check_element(family, w.x0, "verify_rsc");
    for (std::uint64_t x : w.partners) check_element(family, x, "verify_rsc");

    for (std::uint32_t i = 0; i < family.k(); ++i) {
        if (w.partners[i] == w.x0) return false;
        if (family.eval(i, w.x0) != family.eval(i, w.partners[i])) return false;
    }
    return true;
}

bool verify_repetition(const FunctionFamily& family, const RepetitionWitness& w) {
    if (w.indices.size() < 2) throw argument_error("verify_repetition: need at least 2 indices");
    std::vector<std::uint32_t> sorted = w.indices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw argument_error("verify_repetition: duplicate function indices");
    if (sorted.back() >= family.k())
        throw argument_error("verify_repetition: function index out of range");
    check_element(family, w.x, "verify_repetition");

    const std::uint64_t first = family.eval(sorted.front(), w.x);
    for (std::uint32_t i : sorted)
        if (family.eval(i, w.x) != first) return false;
    return true;
}

std::optional<SubsetCoverWitness> brute_force_sc(const FunctionFamily& family, std::uint32_t r,
                                                 std::uint64_t budget) {
    if (r == 0) throw argument_error("brute_force_sc: r must be >= 1");
    const std::uint64_t m = family.domain_size();
    if (pow_capped(m, r + 1, budget) > budget)
        throw resource_error("brute_force_sc: M^(r+1) exceeds the enumeration budget");

    std::vector<std::vector<std::uint64_t>> image_sets;
    image_sets.reserve(m);
    for (std::uint64_t x = 0; x < m; ++x) image_sets.push_back(family.image_set(x));

    // Lexicographic odometer over (x0, x_1, ..., x_r); first hit wins.
    std::vector<std::uint64_t> tuple(r, 0);
    for (std::uint64_t x0 = 0; x0 < m; ++x0) {
        std::fill(tuple.begin(), tuple.end(), 0);
        while (true) {
            bool self_cover = false;
            for (std::uint64_t x : tuple)
                if (x == x0) { self_cover = true; break; }
            if (!self_cover) {
                std::vector<std::uint64_t> covered;
                for (std::uint64_t x : tuple)
                    covered.insert(covered.end(), image_sets[x].begin(), image_sets[x].end());
                std::sort(covered.begin(), covered.end());
                covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
                if (is_subset(image_sets[x0], covered))
                    return SubsetCoverWitness{x0, tuple};
            }
            std::uint32_t pos = r;
            while (pos > 0) {
                if (++tuple[pos - 1] < m) break;
                tuple[pos - 1] = 0;
                --pos;
            }
            if (pos == 0) break;
        }
    }
    return std::nullopt;
}

std::optional<RestrictedSCWitness> brute_force_rsc(const FunctionFamily& family,
                                                   std::uint64_t budget) {
    const std::uint64_t m = family.domain_size();
    if (pow_capped(m, 2, budget) > budget)
        throw resource_error("brute_force_rsc: M^2 exceeds the enumeration budget");

    // Per-function index: value -> elements carrying it, ascending.
    std::vector<std::unordered_map<std::uint64_t, std::vector<std::uint64_t>>> by_value(family.k());
    for (std::uint64_t x = 0; x < m; ++x)
        for (std::uint32_t i = 0; i < family.k(); ++i) by_value[i][family.eval(i, x)].push_back(x);

    for (std::uint64_t x0 = 0; x0 < m; ++x0) {
        RestrictedSCWitness w{x0, {}};
        w.partners.reserve(family.k());
        bool complete = true;
        for (std::uint32_t i = 0; i < family.k(); ++i) {
            const auto& bucket = by_value[i].at(family.eval(i, x0));
            auto it = std::find_if(bucket.begin(), bucket.end(),
                                   [x0](std::uint64_t x) { return x != x0; });
            if (it == bucket.end()) { complete = false; break; }
            w.partners.push_back(*it);
        }
        if (complete) return w;
    }
    return std::nullopt;
}

std::optional<std::vector<std::uint32_t>> repetition_indices_at(const FunctionFamily& family,
                                                                std::uint32_t j,
                                                                std::uint64_t x) {
    if (j < 2 || j > family.k()) throw argument_error("repetition_indices_at: need 2 <= j <= k");
    check_element(family, x, "repetition_indices_at");

    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> groups;
    for (std::uint32_t i = 0; i < family.k(); ++i) groups[family.eval(i, x)].push_back(i);

    std::optional<std::vector<std::uint32_t>> best;
    for (const auto& [value, indices] : groups) {
        if (indices.size() < j) continue;
        std::vector<std::uint32_t> candidate(indices.begin(), indices.begin() + j);
        if (!best || candidate < *best) best = std::move(candidate);
    }
    return best;
}

std::vector<RepetitionWitness> enumerate_repetitions(
    const FunctionFamily& family, std::uint32_t j,
    const std::optional<std::vector<std::uint32_t>>& fixed_indices, std::uint64_t budget) {
    if (j < 2 || j > family.k()) throw argument_error("enumerate_repetitions: need 2 <= j <= k");
    if (family.domain_size() > budget)
        throw resource_error("enumerate_repetitions: M exceeds the enumeration budget");

    std::vector<std::uint32_t> fixed;
    if (fixed_indices) {
        fixed = *fixed_indices;
        std::sort(fixed.begin(), fixed.end());
        if (fixed.size() != j) throw argument_error("enumerate_repetitions: fixed set must have j indices");
        if (std::adjacent_find(fixed.begin(), fixed.end()) != fixed.end())
            throw argument_error("enumerate_repetitions: duplicate fixed indices");
        if (fixed.back() >= family.k())
            throw argument_error("enumerate_repetitions: fixed index out of range");
    }

    std::vector<RepetitionWitness> found;
    for (std::uint64_t x = 0; x < family.domain_size(); ++x) {
        if (fixed_indices) {
            const std::uint64_t first = family.eval(fixed.front(), x);
            bool equal = true;
            for (std::uint32_t i : fixed)
                if (family.eval(i, x) != first) { equal = false; break; }
            if (equal) found.push_back(RepetitionWitness{x, fixed});
        } else if (auto indices = repetition_indices_at(family, j, x)) {
            found.push_back(RepetitionWitness{x, std::move(*indices)});
        }
    }
    return found;
}

} // namespace qsc
