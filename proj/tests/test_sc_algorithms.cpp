#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "qsc/sc_algorithms.hpp"

using namespace qsc;

TEST_CASE("default_params_1k") {
    auto p = default_params_1k(2, 16);
    CHECK(p.j == 2);
    CHECK(p.t == 1);

    p = default_params_1k(4, 16);
    CHECK(p.j == 3);
    CHECK(p.t == 1);

    p = default_params_1k(3, 64);
    CHECK(p.j == 2);
    CHECK(p.t == 4); // round(64^{1/3})

    CHECK_THROWS_AS(default_params_1k(1, 16), argument_error);
}

TEST_CASE("default_params_rk") {
    auto p = default_params_rk(2, 3, 16);
    CHECK(p.k_prime == 2);
    CHECK(p.t == 1);
    CHECK(p.k_extended == 3);

    p = default_params_rk(1, 2, 1024);
    CHECK(p.k_prime == 1);
    CHECK(p.t == 1);

    // k = 7, r = 3: extends to the next multiple of 4.
    p = default_params_rk(3, 7, 16);
    CHECK(p.k_extended == 8);
    CHECK(p.k_prime == 6);
    CHECK(p.k_prime % 3 == 0);
    CHECK(p.t == 1);

    for (std::uint32_t r = 1; r <= 4; ++r)
        for (std::uint32_t k = 2; k <= 9; ++k) {
            const auto q = default_params_rk(r, k, 64);
            CHECK(q.k_prime % r == 0);
            CHECK(q.k_extended % (r + 1) == 0);
            CHECK(q.k_extended >= k);
            CHECK(q.k_extended <= k + r + 1);
        }
}

TEST_CASE("predicted_query_exponent") {
    auto e = predicted_query_exponent(UpperBoundProblem::one_k_sc, 1, 4);
    CHECK(e.num == 1);
    CHECK(e.den == 1);

    e = predicted_query_exponent(UpperBoundProblem::one_k_sc, 1, 3);
    CHECK(e.num == 5);
    CHECK(e.den == 6); // 3/4 + 1/12

    e = predicted_query_exponent(UpperBoundProblem::r_k_sc, 2, 3);
    CHECK(e.num == 1);
    CHECK(e.den == 2);

    e = predicted_query_exponent(UpperBoundProblem::r_k_sc, 2, 4);
    CHECK(e.num == 7);
    CHECK(e.den == 6); // k/(2+2r) + 1/2

    e = predicted_query_exponent(UpperBoundProblem::k_rsc_upper, 0, 2);
    CHECK(e.num == 3);
    CHECK(e.den == 7);

    CHECK_THROWS_AS(predicted_query_exponent(UpperBoundProblem::one_k_sc, 1, 1), argument_error);
    CHECK_THROWS_AS(predicted_query_exponent(UpperBoundProblem::r_k_sc, 0, 4), argument_error);
}

TEST_CASE("phase-1 marked sets: any-indices dominates fixed") {
    QueryLedger ledger;
    FunctionFamily f(5, 3, 4, 256);
    auto fixed = phase1_marked_set(f, 2, Variant::fixed_indices, ledger);
    auto any = phase1_marked_set(f, 2, Variant::any_indices, ledger);
    CHECK(std::includes(any.begin(), any.end(), fixed.begin(), fixed.end()));
    CHECK(any.size() >= fixed.size());
}

TEST_CASE("solve_1k produces verifier-true witnesses") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        FunctionFamily f(seed, 2, 16, 256);
        Rng rng(seed * 7 + 1);
        QueryLedger ledger;
        auto result = solve_1k(f, default_params_1k(2, 16), rng, ledger);
        if (!result.ok()) continue;
        CHECK(verify_sc(f, result.witness));
        CHECK(result.witness.coverers.size() == 1);
        // independent containment recheck
        std::set<std::uint64_t> covered;
        for (std::uint32_t i = 0; i < 2; ++i) covered.insert(f.eval(i, result.witness.coverers[0]));
        for (std::uint32_t i = 0; i < 2; ++i) CHECK(covered.count(f.eval(i, result.witness.x0)));
    }
}

TEST_CASE("solve_1k witness lies in the exhaustive feasible set") {
    FunctionFamily f(3, 2, 16, 256);
    // All valid (x0, coverer) pairs, enumerated through std::set containment.
    std::set<std::pair<std::uint64_t, std::uint64_t>> feasible;
    for (std::uint64_t x0 = 0; x0 < 256; ++x0)
        for (std::uint64_t x1 = 0; x1 < 256; ++x1) {
            if (x1 == x0) continue;
            std::set<std::uint64_t> covered{f.eval(0, x1), f.eval(1, x1)};
            if (covered.count(f.eval(0, x0)) && covered.count(f.eval(1, x0)))
                feasible.insert({x0, x1});
        }
    REQUIRE(!feasible.empty());

    int successes = 0;
    for (std::uint64_t run = 0; run < 10; ++run) {
        Rng rng(run + 500);
        QueryLedger ledger;
        auto result = solve_1k(f, default_params_1k(2, 16), rng, ledger);
        if (!result.ok()) continue;
        ++successes;
        CHECK(feasible.count({result.witness.x0, result.witness.coverers[0]}) == 1);
    }
    CHECK(successes > 0);
}

TEST_CASE("solver grid smoke") {
    int successes = 0, attempts = 0;
    for (std::uint32_t r = 1; r <= 3; ++r)
        for (std::uint32_t k = 2; k <= 5; ++k) {
            const std::uint64_t n = 4;
            const std::uint64_t m = recommended_domain_rk(r, k, n);
            FunctionFamily f(7 * r + k, k, n, m);
            Rng rng(100 * r + k);
            QueryLedger ledger;
            ++attempts;
            auto result = solve_rk(f, r, rng, ledger);
            if (!result.ok()) continue;
            ++successes;
            CHECK(verify_sc(f, result.witness));
            CHECK(result.witness.coverers.size() == r);
        }
    // Tiny instances may be infeasible, but the bulk of the grid solves.
    CHECK(successes >= attempts / 2);
}

TEST_CASE("solve_1k any-indices variant") {
    int successes = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        FunctionFamily f(seed, 3, 4, 64);
        Rng rng(seed + 100);
        QueryLedger ledger;
        auto result = solve_1k(f, default_params_1k(3, 4, Variant::any_indices), rng, ledger);
        if (result.ok()) {
            CHECK(verify_sc(f, result.witness));
            ++successes;
        }
    }
    CHECK(successes > 0);
}

TEST_CASE("solve_1k reports infeasible when the repetition set is empty") {
    // Small domain against a large codomain: no j-repetition exists.
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        FunctionFamily f(seed, 2, 1 << 16, 64);
        QueryLedger probe;
        if (!phase1_marked_set(f, 2, Variant::fixed_indices, probe).empty()) continue;
        Rng rng(1);
        QueryLedger ledger;
        auto result = solve_1k(f, default_params_1k(2, 1 << 16), rng, ledger);
        CHECK(result.status == SolveStatus::infeasible);
        return;
    }
    FAIL("no empty-marked-set seed found");
}

TEST_CASE("marked-set construction never touches the quantum counter") {
    FunctionFamily f(5, 3, 4, 256);
    QueryLedger ledger;
    ledger.quantum_queries = 123;
    phase1_marked_set(f, 2, Variant::fixed_indices, ledger);
    phase1_marked_set(f, 2, Variant::any_indices, ledger);
    CHECK(ledger.quantum_queries == 123);
    CHECK(ledger.classical_evals > 0);
}

TEST_CASE("ledger accumulates additively across solves") {
    FunctionFamily f(3, 2, 16, 256);
    QueryLedger once;
    {
        Rng rng(12);
        auto r = solve_1k(f, default_params_1k(2, 16), rng, once);
        REQUIRE(r.ok());
    }
    QueryLedger twice;
    for (int rep = 0; rep < 2; ++rep) {
        Rng rng(12);
        auto r = solve_1k(f, default_params_1k(2, 16), rng, twice);
        REQUIRE(r.ok());
    }
    CHECK(twice.quantum_queries == 2 * once.quantum_queries);
    CHECK(twice.classical_evals == 2 * once.classical_evals);
    CHECK(twice.grover_runs == 2 * once.grover_runs);
}

TEST_CASE("solve_rk with r=1 reduces exactly to solve_1k") {
    FunctionFamily f(8, 2, 16, 256);
    Rng rng_a(5), rng_b(5);
    QueryLedger la, lb;
    auto a = solve_rk(f, 1, rng_a, la);
    auto b = solve_1k(f, default_params_1k(2, 16), rng_b, lb);
    REQUIRE(a.ok());
    REQUIRE(b.ok());
    CHECK(a.witness.x0 == b.witness.x0);
    CHECK(a.witness.coverers == b.witness.coverers);
    CHECK(la.quantum_queries == lb.quantum_queries);
    CHECK(la.classical_evals == lb.classical_evals);
}

TEST_CASE("solve_rk r=2, k=3 produces a two-coverer witness") {
    const std::uint64_t n = 8;
    const std::uint64_t m = recommended_domain_rk(2, 3, n);
    int successes = 0;
    for (std::uint64_t seed = 0; seed < 5 && successes == 0; ++seed) {
        FunctionFamily f(seed, 3, n, m);
        Rng rng(seed + 40);
        QueryLedger ledger;
        auto result = solve_rk(f, 2, rng, ledger);
        if (!result.ok()) continue;
        ++successes;
        CHECK(verify_sc(f, result.witness));
        CHECK(result.witness.coverers.size() == 2);
        CHECK(ledger.quantum_queries > 0);
    }
    CHECK(successes == 1);
}

TEST_CASE("solve_rk extends the family when r+1 does not divide k") {
    // r=2, k=4: runs on 6 functions internally, witness verifies on the
    // original 4.
    const std::uint64_t n = 4;
    const std::uint64_t m = recommended_domain_rk(2, 4, n);
    int successes = 0;
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        FunctionFamily f(seed, 4, n, m);
        Rng rng(seed + 77);
        QueryLedger ledger;
        auto result = solve_rk(f, 2, rng, ledger);
        if (!result.ok()) continue;
        ++successes;
        CHECK(verify_sc(f, result.witness));
        CHECK(result.witness.coverers.size() == 2);
    }
    CHECK(successes > 0);
}
