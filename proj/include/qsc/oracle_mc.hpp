#pragma once

#include <cstdint>
#include <vector>

#include "qsc/bounds.hpp"
#include "qsc/errors.hpp"
#include "qsc/rng.hpp"

namespace qsc {

/// A lazily sampled random-oracle table: i distinct domain points, each
/// mapped to an independent uniform k-tuple of values in [0, N).
class ClassicalDatabase {
public:
    ClassicalDatabase(std::uint64_t entries, std::uint64_t codomain_size, std::uint32_t k)
        : n_(codomain_size), k_(k), values_(entries * k, 0) {
        if (codomain_size == 0 || k == 0) throw argument_error("ClassicalDatabase: bad sizes");
    }

    std::uint64_t entries() const noexcept { return values_.size() / k_; }
    std::uint64_t codomain_size() const noexcept { return n_; }
    std::uint32_t k() const noexcept { return k_; }

    std::uint64_t value(std::uint64_t entry, std::uint32_t fn) const {
        return values_[entry * k_ + fn];
    }
    std::uint64_t& value(std::uint64_t entry, std::uint32_t fn) {
        return values_[entry * k_ + fn];
    }

private:
    std::uint64_t n_;
    std::uint32_t k_;
    std::vector<std::uint64_t> values_;
};

ClassicalDatabase sample_database(std::uint64_t entries, std::uint64_t codomain_size,
                                  std::uint32_t k, Rng& rng);

/// Distinct 2-collisions on one function: entries are grouped by their value
/// under fn; a group of size m with d distinct full image tuples contributes
/// min(m-1, d).
std::uint64_t count_distinct_2collisions(const ClassicalDatabase& db, std::uint32_t fn);

/// Entries whose first j values agree.
std::uint64_t count_j_repetitions(const ClassicalDatabase& db, std::uint32_t j);

/// Distinct s-RSC count: valid covered entries (each of the first s
/// coordinates collides with some other entry) counted by distinct s-prefix
/// image tuple. Requires entries <= 64.
std::uint64_t count_distinct_rsc(const ClassicalDatabase& db, std::uint32_t s);

/// True when some entry's image set is contained in another entry's.
bool contains_1ksc(const ClassicalDatabase& db);

struct PropertySpec {
    enum class Kind {
        collisions_at_least,   // >= threshold distinct 2-collisions on fn
        repetitions_at_least,  // >= threshold j-repetitions
        rsc_at_least,          // >= threshold distinct order-RSC
        contains_sc,           // some (1,k)-SC present
        nonempty,              // at least one entry
    };
    Kind kind = Kind::nonempty;
    std::uint64_t threshold = 1;
    std::uint32_t order = 2; // j for repetitions, s for RSC
    std::uint32_t fn = 0;    // collision function index
};

bool holds_on(const PropertySpec& spec, const ClassicalDatabase& db);

struct Estimate {
    double p_hat = 0.0;
    double half_width = 0.0; // Wilson 99% interval half-width
    std::uint64_t trials = 0;
};

/// Monte-Carlo proportion of sampled databases satisfying the property.
/// Requires trials >= 1000.
Estimate estimate_probability(const PropertySpec& spec, std::uint64_t entries,
                              std::uint64_t codomain_size, std::uint32_t k, std::uint64_t trials,
                              Rng& rng);

struct BoundCheck {
    bool holds = false;
    double margin = 0.0; // bound probability minus the point estimate
};

/// Classical success probability must stay below the squared clamped
/// amplitude bound: holds when p_hat - half_width <= bound.as_probability.
BoundCheck check_bound(const Estimate& estimate, const BoundValue& bound);

} // namespace qsc
