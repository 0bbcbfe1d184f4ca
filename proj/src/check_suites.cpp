#include "qsc/check_suites.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qsc/bounds.hpp"

namespace qsc {

namespace {

McCheckRow collision_row(std::uint64_t i, std::uint64_t n, std::uint64_t j, std::uint64_t trials,
                         Rng& rng) {
    PropertySpec spec;
    spec.kind = PropertySpec::Kind::collisions_at_least;
    spec.threshold = j;
    spec.fn = 0;
    const Estimate est = estimate_probability(spec, i, n, 2, trials, rng);
    const BoundValue bound =
        collision_bound(static_cast<double>(i), static_cast<double>(j), static_cast<double>(n));
    const BoundCheck check = check_bound(est, bound);

    McCheckRow row;
    row.property = "collisions>=j";
    row.entries = i;
    row.codomain = n;
    row.k = 2;
    row.params = "j=" + std::to_string(j);
    row.trials = trials;
    row.p_hat = est.p_hat;
    row.ci_half_width = est.half_width;
    row.bound_prob = bound.as_probability;
    row.holds = check.holds;
    row.margin = check.margin;
    return row;
}

McCheckRow repetition_row(std::uint64_t i, std::uint64_t n, std::uint32_t j, std::uint64_t trials,
                          Rng& rng) {
    PropertySpec spec;
    spec.kind = PropertySpec::Kind::repetitions_at_least;
    spec.threshold = 1;
    spec.order = j;
    const Estimate est = estimate_probability(spec, i, n, j, trials, rng);
    const BoundValue bound =
        repetition_bound(static_cast<double>(i), 1.0, static_cast<double>(j),
                         static_cast<double>(n));
    const BoundCheck check = check_bound(est, bound);

    McCheckRow row;
    row.property = "repetitions>=1";
    row.entries = i;
    row.codomain = n;
    row.k = j;
    row.params = "j=" + std::to_string(j) + ",l=1";
    row.trials = trials;
    row.p_hat = est.p_hat;
    row.ci_half_width = est.half_width;
    row.bound_prob = bound.as_probability;
    row.holds = check.holds;
    row.margin = check.margin;
    return row;
}

} // namespace

std::vector<McCheckRow> run_mc_suite(std::uint64_t trials, std::uint64_t seed) {
    std::vector<McCheckRow> rows;
    Rng rng(mix64(seed ^ 0x4d43u));
    for (std::uint64_t n : {64ULL, 256ULL})
        for (std::uint64_t i : {2ULL, 4ULL, 8ULL, 16ULL})
            for (std::uint64_t j : {1ULL, 2ULL}) rows.push_back(collision_row(i, n, j, trials, rng));
    for (std::uint64_t n : {64ULL, 256ULL})
        for (std::uint64_t i : {2ULL, 4ULL, 8ULL, 16ULL})
            for (std::uint32_t j : {2u, 3u}) rows.push_back(repetition_row(i, n, j, trials, rng));
    return rows;
}

namespace {

using MapView =
    Eigen::Map<Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;

void apply_unitary(OracleState& state, const Eigen::MatrixXcd& u) {
    const Eigen::Index slots = state.domain() * state.codomain();
    MapView view(state.amplitudes().data(), slots, state.dimension() / slots);
    view = (u * view).eval();
}

bool has_collision(const std::vector<std::uint8_t>& cells, std::uint8_t fresh) {
    for (std::size_t a = 0; a < cells.size(); ++a)
        for (std::size_t b = a + 1; b < cells.size(); ++b)
            if (cells[a] != fresh && cells[a] == cells[b]) return true;
    return false;
}

struct CorpusCircuit {
    AdversaryCircuit circuit;
    std::uint32_t queries = 0;
};

std::vector<CorpusCircuit> make_corpus(std::uint64_t seed, std::uint32_t circuits) {
    Rng rng(mix64(seed ^ 0x636fu));
    std::vector<CorpusCircuit> corpus;
    corpus.reserve(circuits);
    for (std::uint32_t c = 0; c < circuits; ++c) {
        CorpusCircuit entry;
        entry.circuit.domain = 2 + static_cast<std::uint32_t>(rng.below(2));
        entry.circuit.codomain = 2 + static_cast<std::uint32_t>(rng.below(2));
        entry.queries = 1 + static_cast<std::uint32_t>(rng.below(3));
        const Eigen::Index dim = entry.circuit.domain * entry.circuit.codomain;
        for (std::uint32_t u = 0; u <= entry.queries; ++u)
            entry.circuit.unitaries.push_back(random_unitary(dim, rng));
        corpus.push_back(std::move(entry));
    }
    return corpus;
}

} // namespace

std::vector<CoCheckRow> run_co_suite(std::uint64_t seed, std::uint32_t circuits) {
    std::vector<CoCheckRow> rows;
    const auto corpus = make_corpus(seed, circuits);
    Rng rng(mix64(seed ^ 0x7175u));

    // Comp involution on random database-register states.
    {
        double worst = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            OracleState state = OracleState::compressed(3, 3);
            Eigen::VectorXcd noise(state.dimension());
            for (Eigen::Index i = 0; i < noise.size(); ++i)
                noise(i) = std::complex<double>(rng.uniform() - 0.5, rng.uniform() - 0.5);
            state.amplitudes() = noise.normalized();
            const Eigen::VectorXcd before = state.amplitudes();
            comp_apply(state);
            comp_dagger(state);
            worst = std::max(worst, (state.amplitudes() - before).norm());
        }
        rows.push_back({"comp_involution", "3x3", 0, worst, worst < 1e-12});
    }

    // cO preserves the norm.
    {
        double worst = 0.0;
        std::uint32_t max_queries = 0;
        for (const auto& entry : corpus) {
            OracleState state = run_adversary(entry.circuit, OracleKind::compressed);
            worst = std::max(worst, std::abs(state.norm() - 1.0));
            max_queries = std::max(max_queries, entry.queries);
        }
        rows.push_back({"co_unitarity", "corpus", max_queries, worst, worst < kUnitarityTol});
    }

    // Lazy-sampling equivalence: adversary marginals and full decompressed
    // states agree between the standard and compressed runs.
    {
        double marginal_worst = 0.0;
        double state_worst = 0.0;
        for (const auto& entry : corpus) {
            OracleState standard = run_adversary(entry.circuit, OracleKind::standard);
            OracleState compressed = run_adversary(entry.circuit, OracleKind::compressed);
            marginal_worst =
                std::max(marginal_worst, (adversary_marginal(standard) -
                                          adversary_marginal(compressed)).cwiseAbs().maxCoeff());
            state_worst = std::max(
                state_worst,
                (decompress(compressed).amplitudes() - standard.amplitudes()).norm());
        }
        rows.push_back({"marginal_equality", "corpus", 3, marginal_worst, marginal_worst < 1e-9});
        rows.push_back({"decompress_equality", "corpus", 3, state_worst, state_worst < 1e-9});
    }

    // Support growth: at most q recorded cells after q queries.
    {
        double worst = 0.0;
        for (const auto& entry : corpus) {
            OracleState state = run_adversary(entry.circuit, OracleKind::compressed);
            const double excess = static_cast<double>(max_recorded_cells(state)) -
                                  static_cast<double>(entry.queries);
            worst = std::max(worst, excess);
        }
        rows.push_back({"support_growth", "corpus", 3, worst, worst <= 0.0});
    }

    // Zhandry's output bound with the identity claim.
    {
        double worst = -1.0;
        bool all_hold = true;
        for (const auto& entry : corpus) {
            const auto report =
                zhandry_gap_check(entry.circuit, [](std::uint32_t x, std::uint32_t y) {
                    return std::vector<std::pair<std::uint32_t, std::uint32_t>>{{x, y}};
                });
            const double slack = std::sqrt(1.0 / static_cast<double>(entry.circuit.codomain));
            worst = std::max(worst,
                             std::sqrt(report.p) - std::sqrt(report.p_prime) - slack);
            all_hold = all_hold && report.bound_holds;
        }
        rows.push_back({"zhandry_bound", "corpus", 3, worst, all_hold && worst <= 1e-9});
    }

    // Recursive projection inequality with the collision predicate, measured
    // around the final query of each corpus circuit.
    {
        double worst = -1.0;
        for (const auto& entry : corpus) {
            OracleState phi = OracleState::compressed(entry.circuit.domain,
                                                      entry.circuit.codomain);
            for (std::uint32_t step = 0; step + 1 < entry.circuit.unitaries.size(); ++step) {
                apply_unitary(phi, entry.circuit.unitaries[step]);
                if (step + 2 < entry.circuit.unitaries.size()) co_apply(phi);
            }
            const std::uint8_t fresh = static_cast<std::uint8_t>(entry.circuit.codomain);
            const auto pred = [fresh](const std::vector<std::uint8_t>& cells) {
                return has_collision(cells, fresh);
            };

            OracleState psi = phi;
            co_apply(psi);
            const double lhs = projector_norm(psi, pred);
            const double first = projector_norm(phi, pred);

            OracleState rest = phi;
            for (Eigen::Index i = 0; i < rest.dimension(); ++i)
                if (pred(rest.decode(i).cells)) rest.amplitudes()(i) = 0.0;
            co_apply(rest);
            const double second = projector_norm(rest, pred);
            worst = std::max(worst, lhs - first - second);
        }
        rows.push_back({"recursive_projection", "corpus", 3, worst, worst <= 1e-9});
    }

    return rows;
}

} // namespace qsc
