#include "qsc/sc_algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace qsc {

namespace {

std::uint64_t rounded_power(std::uint64_t n, double exponent) {
    if (exponent <= 0.0) return 1;
    const double value = std::pow(static_cast<double>(n), exponent);
    return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::llround(value)));
}

// Injective assignment of required values to function indices of x, i.e. a
// perfect matching on the small bipartite graph (values) x (indices).
bool values_matchable(const std::vector<std::uint64_t>& required,
                      const std::vector<std::uint64_t>& have) {
    const std::size_t nv = required.size();
    const std::size_t ni = have.size();
    std::vector<std::int32_t> owner(ni, -1);
    std::vector<char> visited(ni, 0);

    auto augment = [&](auto&& self, std::size_t v) -> bool {
        for (std::size_t i = 0; i < ni; ++i) {
            if (visited[i] || have[i] != required[v]) continue;
            visited[i] = 1;
            if (owner[i] < 0 || self(self, static_cast<std::size_t>(owner[i]))) {
                owner[i] = static_cast<std::int32_t>(v);
                return true;
            }
        }
        return false;
    };

    for (std::size_t v = 0; v < nv; ++v) {
        std::fill(visited.begin(), visited.end(), 0);
        if (!augment(augment, v)) return false;
    }
    return true;
}

// Phase-2 target patterns, one per collected repetition element.
struct CoverTarget {
    std::uint64_t x0 = 0;
    std::vector<std::uint64_t> required; // fixed: positional; any: multiset to match
};

} // namespace

OneKParams default_params_1k(std::uint32_t k, std::uint64_t codomain_size, Variant variant) {
    if (k < 2) throw argument_error("default_params_1k: k must be >= 2");
    OneKParams params;
    params.j = k % 2 == 0 ? (k + 2) / 2 : (k + 1) / 2;
    const double exponent =
        (static_cast<double>(k) - 2.0 * static_cast<double>(params.j) + 2.0) / 3.0;
    params.t = rounded_power(codomain_size, exponent);
    params.variant = variant;
    return params;
}

RKParams default_params_rk(std::uint32_t r, std::uint32_t k, std::uint64_t codomain_size) {
    if (r == 0) throw argument_error("default_params_rk: r must be >= 1");
    if (k < 2) throw argument_error("default_params_rk: k must be >= 2");
    RKParams params;
    const std::uint32_t step = r + 1;
    params.k_extended = k % step == 0 ? k : k + (step - k % step);
    params.k_prime = r * params.k_extended / step;
    const double exponent = (static_cast<double>(r) * params.k_extended -
                             static_cast<double>(r) * params.k_prime - params.k_prime) /
                            (3.0 * static_cast<double>(r));
    params.t = rounded_power(codomain_size, exponent);
    return params;
}

std::vector<std::uint64_t> phase1_marked_set(const FunctionFamily& family, std::uint32_t j,
                                             Variant variant, QueryLedger& ledger) {
    if (j < 2 || j > family.k()) throw argument_error("phase1_marked_set: need 2 <= j <= k");
    std::vector<std::uint64_t> marked;
    std::uint64_t evals = 0;
    std::vector<std::uint64_t> values(family.k());

    for (std::uint64_t x = 0; x < family.domain_size(); ++x) {
        if (variant == Variant::fixed_indices) {
            const std::uint64_t first = family.eval(0, x);
            ++evals;
            bool equal = true;
            for (std::uint32_t i = 1; i < j; ++i) {
                ++evals;
                if (family.eval(i, x) != first) { equal = false; break; }
            }
            if (equal) marked.push_back(x);
        } else {
            for (std::uint32_t i = 0; i < family.k(); ++i) values[i] = family.eval(i, x);
            evals += family.k();
            bool hit = false;
            for (std::uint32_t a = 0; a < family.k() && !hit; ++a) {
                std::uint32_t multiplicity = 1;
                for (std::uint32_t b = a + 1; b < family.k(); ++b)
                    if (values[b] == values[a]) ++multiplicity;
                hit = multiplicity >= j;
            }
            if (hit) marked.push_back(x);
        }
    }
    ledger.classical_evals += evals;
    return marked;
}

namespace {

// Phase-2 marked set for Algorithm 1 (fixed variant): the first k-j+1 values
// of x must reproduce x0's repetition value followed by its tail values.
std::vector<std::uint64_t> phase2_marked_fixed(const FunctionFamily& family, std::uint32_t j,
                                               const std::vector<CoverTarget>& targets,
                                               const std::unordered_set<std::uint64_t>& excluded,
                                               QueryLedger& ledger) {
    std::unordered_map<std::uint64_t, std::vector<const CoverTarget*>> by_head;
    for (const auto& target : targets) by_head[target.required.front()].push_back(&target);

    const std::uint32_t width = family.k() - j + 1;
    std::vector<std::uint64_t> marked;
    std::uint64_t evals = 0;
    for (std::uint64_t x = 0; x < family.domain_size(); ++x) {
        if (excluded.contains(x)) continue;
        const std::uint64_t head = family.eval(0, x);
        ++evals;
        auto it = by_head.find(head);
        if (it == by_head.end()) continue;
        std::vector<std::uint64_t> prefix(width);
        prefix[0] = head;
        for (std::uint32_t m = 1; m < width; ++m) prefix[m] = family.eval(m, x);
        evals += width - 1;
        for (const CoverTarget* target : it->second) {
            if (target->required == prefix) {
                marked.push_back(x);
                break;
            }
        }
    }
    ledger.classical_evals += evals;
    return marked;
}

// Phase-2 marked set for Algorithm 2 (any variant): the required values of
// some target must be realizable on pairwise-distinct functions of x.
std::vector<std::uint64_t> phase2_marked_any(const FunctionFamily& family,
                                             const std::vector<CoverTarget>& targets,
                                             const std::unordered_set<std::uint64_t>& excluded,
                                             QueryLedger& ledger) {
    std::vector<std::uint64_t> marked;
    std::uint64_t evals = 0;
    std::vector<std::uint64_t> values(family.k());
    for (std::uint64_t x = 0; x < family.domain_size(); ++x) {
        if (excluded.contains(x)) continue;
        for (std::uint32_t i = 0; i < family.k(); ++i) values[i] = family.eval(i, x);
        evals += family.k();
        for (const auto& target : targets) {
            if (values_matchable(target.required, values)) {
                marked.push_back(x);
                break;
            }
        }
    }
    ledger.classical_evals += evals;
    return marked;
}

// t distinct marked elements by repeated known-count Grover runs, removing
// each find from the instance.
std::optional<std::vector<std::uint64_t>> collect_distinct(SearchInstance inst, std::uint64_t count,
                                                           Rng& rng, QueryLedger& ledger) {
    std::vector<std::uint64_t> found;
    found.reserve(count);
    while (found.size() < count) {
        auto hit = grover_known_count(inst, rng, ledger);
        if (!hit) return std::nullopt;
        found.push_back(*hit);
        inst.marked.erase(std::lower_bound(inst.marked.begin(), inst.marked.end(), *hit));
    }
    std::sort(found.begin(), found.end());
    return found;
}

const CoverTarget* match_target(const FunctionFamily& family, std::uint64_t x, std::uint32_t j,
                                Variant variant, const std::vector<CoverTarget>& targets) {
    std::vector<std::uint64_t> values(family.k());
    for (std::uint32_t i = 0; i < family.k(); ++i) values[i] = family.eval(i, x);
    for (const auto& target : targets) {
        if (variant == Variant::fixed_indices) {
            const std::uint32_t width = family.k() - j + 1;
            bool equal = true;
            for (std::uint32_t m = 0; m < width; ++m)
                if (values[m] != target.required[m]) { equal = false; break; }
            if (equal) return &target;
        } else if (values_matchable(target.required, values)) {
            return &target;
        }
    }
    return nullptr;
}

} // namespace

SolveResult solve_1k(const FunctionFamily& family, const OneKParams& params, Rng& rng,
                     QueryLedger& ledger) {
    if (family.k() < 2) throw argument_error("solve_1k: family needs k >= 2");
    if (params.j < 2 || params.j > family.k()) throw argument_error("solve_1k: bad j");
    if (params.t == 0) throw argument_error("solve_1k: t must be >= 1");

    const std::uint32_t j = params.j;
    const std::uint32_t k = family.k();

    auto marked1 = phase1_marked_set(family, j, params.variant, ledger);
    if (marked1.size() < params.t) return {SolveStatus::infeasible, {}};

    auto inst1 = SearchInstance::make(family.domain_size(), std::move(marked1));
    auto collected = collect_distinct(std::move(inst1), params.t, rng, ledger);
    if (!collected) return {SolveStatus::cutoff, {}};

    std::vector<CoverTarget> targets;
    targets.reserve(collected->size());
    std::unordered_set<std::uint64_t> excluded(collected->begin(), collected->end());
    for (std::uint64_t x0 : *collected) {
        CoverTarget target;
        target.x0 = x0;
        if (params.variant == Variant::fixed_indices) {
            target.required.push_back(family.eval(0, x0));
            for (std::uint32_t i = j; i < k; ++i) target.required.push_back(family.eval(i, x0));
            ledger.classical_evals += k - j + 1;
        } else {
            auto indices = repetition_indices_at(family, j, x0);
            ledger.classical_evals += k;
            if (!indices) throw state_error("solve_1k: collected element lost its repetition");
            std::vector<char> in_rep(k, 0);
            for (std::uint32_t i : *indices) in_rep[i] = 1;
            target.required.push_back(family.eval((*indices)[0], x0));
            for (std::uint32_t i = 0; i < k; ++i)
                if (!in_rep[i]) target.required.push_back(family.eval(i, x0));
        }
        targets.push_back(std::move(target));
    }

    auto marked2 = params.variant == Variant::fixed_indices
                       ? phase2_marked_fixed(family, j, targets, excluded, ledger)
                       : phase2_marked_any(family, targets, excluded, ledger);
    if (marked2.empty()) return {SolveStatus::infeasible, {}};

    auto inst2 = SearchInstance::make(family.domain_size(), std::move(marked2));
    auto cover = grover_known_count(inst2, rng, ledger);
    if (!cover) return {SolveStatus::cutoff, {}};

    const CoverTarget* target = match_target(family, *cover, j, params.variant, targets);
    if (target == nullptr) throw state_error("solve_1k: marked element matches no target");

    SubsetCoverWitness witness{target->x0, {*cover}};
    if (!verify_sc(family, witness)) throw state_error("solve_1k: constructed witness is invalid");
    return {SolveStatus::found, std::move(witness)};
}

SolveResult solve_rk(const FunctionFamily& family, std::uint32_t r, Rng& rng,
                     QueryLedger& ledger) {
    if (r == 0) throw argument_error("solve_rk: r must be >= 1");
    if (family.k() < 2) throw argument_error("solve_rk: family needs k >= 2");
    if (r == 1)
        return solve_1k(family, default_params_1k(family.k(), family.codomain_size()), rng,
                        ledger);

    const auto params = default_params_rk(r, family.k(), family.codomain_size());
    const FunctionFamily work =
        params.k_extended > family.k() ? family.extend(params.k_extended - family.k()) : family;
    const FunctionFamily sub = work.prefix(params.k_prime);

    // t sub-solutions with distinct covered elements and distinct image tuples.
    std::vector<SubsetCoverWitness> sub_witnesses;
    std::set<std::vector<std::uint64_t>> seen_tuples;
    const std::uint64_t max_attempts = 16 * params.t + 16;
    for (std::uint64_t attempt = 0; attempt < max_attempts && sub_witnesses.size() < params.t;
         ++attempt) {
        SolveResult res = solve_rk(sub, r - 1, rng, ledger);
        if (!res.ok()) return {res.status, {}};
        auto tuple = sub.image_tuple(res.witness.x0);
        ledger.classical_evals += sub.k();
        if (seen_tuples.contains(tuple)) continue;
        seen_tuples.insert(std::move(tuple));
        sub_witnesses.push_back(std::move(res.witness));
    }
    if (sub_witnesses.size() < params.t) return {SolveStatus::infeasible, {}};

    // F marks x reproducing the uncovered coordinates k'..k_ext-1 of some
    // covered element on its own functions 0..k_ext-k'-1.
    const std::uint32_t tail = work.k() - params.k_prime;
    std::vector<CoverTarget> targets;
    std::unordered_set<std::uint64_t> excluded;
    for (const auto& w : sub_witnesses) {
        CoverTarget target;
        target.x0 = w.x0;
        for (std::uint32_t m = 0; m < tail; ++m)
            target.required.push_back(work.eval(params.k_prime + m, w.x0));
        ledger.classical_evals += tail;
        targets.push_back(std::move(target));
        excluded.insert(w.x0);
    }

    std::unordered_map<std::uint64_t, std::vector<const CoverTarget*>> by_head;
    for (const auto& target : targets) by_head[target.required.front()].push_back(&target);

    std::vector<std::uint64_t> marked;
    std::uint64_t evals = 0;
    for (std::uint64_t x = 0; x < work.domain_size(); ++x) {
        if (excluded.contains(x)) continue;
        const std::uint64_t head = work.eval(0, x);
        ++evals;
        auto it = by_head.find(head);
        if (it == by_head.end()) continue;
        std::vector<std::uint64_t> prefix(tail);
        prefix[0] = head;
        for (std::uint32_t m = 1; m < tail; ++m) prefix[m] = work.eval(m, x);
        evals += tail - 1;
        for (const CoverTarget* target : it->second) {
            if (target->required == prefix) {
                marked.push_back(x);
                break;
            }
        }
    }
    ledger.classical_evals += evals;
    if (marked.empty()) return {SolveStatus::infeasible, {}};

    auto inst = SearchInstance::make(work.domain_size(), std::move(marked));
    auto cover = grover_known_count(inst, rng, ledger);
    if (!cover) return {SolveStatus::cutoff, {}};

    const CoverTarget* matched = nullptr;
    std::vector<std::uint64_t> prefix(tail);
    for (std::uint32_t m = 0; m < tail; ++m) prefix[m] = work.eval(m, *cover);
    for (const auto& target : targets)
        if (target.required == prefix) { matched = &target; break; }
    if (matched == nullptr) throw state_error("solve_rk: marked element matches no target");

    const auto& sub_witness =
        *std::find_if(sub_witnesses.begin(), sub_witnesses.end(),
                      [&](const SubsetCoverWitness& w) { return w.x0 == matched->x0; });

    SubsetCoverWitness witness{matched->x0, sub_witness.coverers};
    witness.coverers.push_back(*cover);
    // Projection back to the original functions: the witness must verify
    // against the un-extended family.
    if (!verify_sc(family, witness)) throw state_error("solve_rk: constructed witness is invalid");
    return {SolveStatus::found, std::move(witness)};
}

Rational predicted_query_exponent(UpperBoundProblem problem, std::uint32_t r, std::uint32_t k) {
    switch (problem) {
    case UpperBoundProblem::one_k_sc:
        if (k < 2) throw argument_error("predicted_query_exponent: one_k_sc needs k >= 2");
        return k % 2 == 0 ? make_rational(k, 4) : make_rational(3 * static_cast<std::int64_t>(k) + 1, 12);
    case UpperBoundProblem::r_k_sc:
        if (r < 1 || k < 2) throw argument_error("predicted_query_exponent: r_k_sc needs r >= 1, k >= 2");
        if (k % (r + 1) == 0) return make_rational(k, 2 * static_cast<std::int64_t>(r) + 2);
        return make_rational(static_cast<std::int64_t>(k) + r + 1, 2 * static_cast<std::int64_t>(r) + 2);
    case UpperBoundProblem::k_rsc_upper: {
        if (k < 1 || k > 61) throw argument_error("predicted_query_exponent: k out of range");
        const std::int64_t p = std::int64_t{1} << k;
        return make_rational(p - 1, 2 * p - 1);
    }
    }
    throw argument_error("predicted_query_exponent: unsupported problem");
}

} // namespace qsc
