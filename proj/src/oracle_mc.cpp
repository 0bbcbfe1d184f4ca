#include "qsc/oracle_mc.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace qsc {

ClassicalDatabase sample_database(std::uint64_t entries, std::uint64_t codomain_size,
                                  std::uint32_t k, Rng& rng) {
    ClassicalDatabase db(entries, codomain_size, k);
    for (std::uint64_t e = 0; e < entries; ++e)
        for (std::uint32_t f = 0; f < k; ++f) db.value(e, f) = rng.below(codomain_size);
    return db;
}

namespace {

std::vector<std::uint64_t> tuple_of(const ClassicalDatabase& db, std::uint64_t entry) {
    std::vector<std::uint64_t> t(db.k());
    for (std::uint32_t f = 0; f < db.k(); ++f) t[f] = db.value(entry, f);
    return t;
}

} // namespace

std::uint64_t count_distinct_2collisions(const ClassicalDatabase& db, std::uint32_t fn) {
    if (fn >= db.k()) throw argument_error("count_distinct_2collisions: fn out of range");
    std::map<std::uint64_t, std::vector<std::uint64_t>> groups;
    for (std::uint64_t e = 0; e < db.entries(); ++e) groups[db.value(e, fn)].push_back(e);

    std::uint64_t total = 0;
    for (const auto& [value, members] : groups) {
        if (members.size() < 2) continue;
        std::set<std::vector<std::uint64_t>> tuples;
        for (std::uint64_t e : members) tuples.insert(tuple_of(db, e));
        total += std::min<std::uint64_t>(members.size() - 1, tuples.size());
    }
    return total;
}

std::uint64_t count_j_repetitions(const ClassicalDatabase& db, std::uint32_t j) {
    if (j < 2 || j > db.k()) throw argument_error("count_j_repetitions: need 2 <= j <= k");
    std::uint64_t count = 0;
    for (std::uint64_t e = 0; e < db.entries(); ++e) {
        bool equal = true;
        for (std::uint32_t f = 1; f < j; ++f)
            if (db.value(e, f) != db.value(e, 0)) { equal = false; break; }
        if (equal) ++count;
    }
    return count;
}

std::uint64_t count_distinct_rsc(const ClassicalDatabase& db, std::uint32_t s) {
    if (s < 1 || s > db.k()) throw argument_error("count_distinct_rsc: need 1 <= s <= k");
    if (db.entries() > 64) throw resource_error("count_distinct_rsc: database exceeds 64 entries");

    std::set<std::vector<std::uint64_t>> covered_tuples;
    for (std::uint64_t e = 0; e < db.entries(); ++e) {
        bool valid = true;
        for (std::uint32_t f = 0; f < s && valid; ++f) {
            bool partner = false;
            for (std::uint64_t other = 0; other < db.entries() && !partner; ++other)
                partner = other != e && db.value(other, f) == db.value(e, f);
            valid = partner;
        }
        if (!valid) continue;
        std::vector<std::uint64_t> prefix(s);
        for (std::uint32_t f = 0; f < s; ++f) prefix[f] = db.value(e, f);
        covered_tuples.insert(std::move(prefix));
    }
    return covered_tuples.size();
}

bool contains_1ksc(const ClassicalDatabase& db) {
    std::vector<std::set<std::uint64_t>> image_sets(db.entries());
    for (std::uint64_t e = 0; e < db.entries(); ++e)
        for (std::uint32_t f = 0; f < db.k(); ++f) image_sets[e].insert(db.value(e, f));

    for (std::uint64_t x0 = 0; x0 < db.entries(); ++x0)
        for (std::uint64_t x1 = 0; x1 < db.entries(); ++x1) {
            if (x0 == x1) continue;
            if (std::includes(image_sets[x1].begin(), image_sets[x1].end(),
                              image_sets[x0].begin(), image_sets[x0].end()))
                return true;
        }
    return false;
}

bool holds_on(const PropertySpec& spec, const ClassicalDatabase& db) {
    switch (spec.kind) {
    case PropertySpec::Kind::collisions_at_least:
        return count_distinct_2collisions(db, spec.fn) >= spec.threshold;
    case PropertySpec::Kind::repetitions_at_least:
        return count_j_repetitions(db, spec.order) >= spec.threshold;
    case PropertySpec::Kind::rsc_at_least:
        return count_distinct_rsc(db, spec.order) >= spec.threshold;
    case PropertySpec::Kind::contains_sc:
        return contains_1ksc(db);
    case PropertySpec::Kind::nonempty:
        return db.entries() > 0;
    }
    throw argument_error("holds_on: unsupported property");
}

Estimate estimate_probability(const PropertySpec& spec, std::uint64_t entries,
                              std::uint64_t codomain_size, std::uint32_t k, std::uint64_t trials,
                              Rng& rng) {
    if (trials < 1000) throw argument_error("estimate_probability: need at least 1000 trials");
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const ClassicalDatabase db = sample_database(entries, codomain_size, k, rng);
        if (holds_on(spec, db)) ++hits;
    }

    constexpr double z = 2.5758293035489004; // 99% two-sided normal quantile
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(hits) / n;
    const double z2n = z * z / n;
    const double half_width =
        z * std::sqrt(p * (1.0 - p) / n + z2n / (4.0 * n)) / (1.0 + z2n);
    return Estimate{p, half_width, trials};
}

BoundCheck check_bound(const Estimate& estimate, const BoundValue& bound) {
    BoundCheck check;
    check.holds = estimate.p_hat - estimate.half_width <= bound.as_probability;
    check.margin = bound.as_probability - estimate.p_hat;
    return check;
}

} // namespace qsc
