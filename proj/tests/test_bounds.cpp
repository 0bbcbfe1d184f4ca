#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qsc/bounds.hpp"

using namespace qsc;

namespace {
constexpr double kE = std::numbers::e;
}

TEST_CASE("collision_bound") {
    CHECK(collision_bound(0, 3, 64).raw == 0.0);
    CHECK(collision_bound(4, 1, 64).raw == doctest::Approx(kE).epsilon(1e-12));

    // (e/4)^4, cross-checked against a direct product evaluation.
    const double direct = std::pow(kE * std::pow(4.0, 1.5) / (4.0 * std::sqrt(64.0)), 4.0);
    const BoundValue b = collision_bound(4, 4, 64);
    CHECK(b.raw == doctest::Approx(direct).epsilon(1e-12));
    CHECK(b.raw == doctest::Approx(0.2132755).epsilon(1e-5));
    CHECK(b.clamped == b.raw);
    CHECK(b.as_probability == doctest::Approx(b.raw * b.raw).epsilon(1e-12));

    CHECK(collision_bound(4, 1, 64).clamped == 1.0);
    CHECK_THROWS_AS(collision_bound(4, 0, 64), argument_error);
}

TEST_CASE("repetition_bound") {
    CHECK(repetition_bound(0, 1, 2, 16).raw == 0.0);
    CHECK(repetition_bound(2, 1, 2, 16).raw == doctest::Approx(kE / 2.0).epsilon(1e-12));
    CHECK(repetition_bound(4, 2, 3, 4).raw ==
          doctest::Approx((kE / 2.0) * (kE / 2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(repetition_bound(4, 0, 3, 4), argument_error);
}

TEST_CASE("bounds stay finite in log space at cryptographic sizes") {
    const double huge_i = std::pow(2.0, 128.0);
    const double huge_n = std::pow(2.0, 256.0);
    const BoundValue c = collision_bound(huge_i, 3, huge_n);
    CHECK(std::isfinite(c.log_raw));
    CHECK(c.clamped <= 1.0);
    const BoundValue r = repetition_bound(huge_i, 2, 4, huge_n);
    CHECK(std::isfinite(r.log_raw));
    CHECK(r.raw >= 0.0);
}

TEST_CASE("mu3 branches") {
    CHECK(mu3(0, 256) == doctest::Approx(10.0 * std::pow(256.0, 0.125)).epsilon(1e-12));

    // N = 2^56, l = 2^100: the collision branch dominates at 2e * 2^122.
    const double left = mu3(std::pow(2.0, 100.0), std::pow(2.0, 56.0));
    CHECK(left == doctest::Approx(2.0 * kE * std::pow(2.0, 122.0)).epsilon(1e-12));

    // N = 2^256 keeps the flat branch in charge even at l = 2^100.
    CHECK(mu3(std::pow(2.0, 100.0), std::pow(2.0, 256.0)) ==
          doctest::Approx(10.0 * std::pow(2.0, 32.0)).epsilon(1e-12));

    SUBCASE("crossover solves the branch equality") {
        const double n = 256.0;
        // Bisection on 2e*l^{3/2} = 10*N^{5/8}.
        double lo = 0.0, hi = 1e6;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            (2.0 * kE * std::pow(mid, 1.5) < 10.0 * std::pow(n, 0.625) ? lo : hi) = mid;
        }
        const double closed_form = std::pow(10.0 * std::pow(n, 0.625) / (2.0 * kE), 2.0 / 3.0);
        CHECK(lo == doctest::Approx(closed_form).epsilon(1e-9));
        CHECK(closed_form == doctest::Approx(15.1316).epsilon(1e-3));
        // Below the crossover the flat branch rules, above it the power law.
        CHECK(mu3(std::floor(lo), n) == doctest::Approx(10.0 * std::pow(n, 0.125)));
        CHECK(mu3(std::ceil(hi) + 1, n) > 10.0 * std::pow(n, 0.125));
    }
}

TEST_CASE("a_i") {
    CHECK(a_i(0, 256) == 0.0);
    // Single term: sqrt(2) * sqrt(10 * 256^{1/8} / 256).
    const double expected = std::numbers::sqrt2 * std::sqrt(10.0 * 2.0 / 256.0);
    CHECK(a_i(1, 256) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(a_i(1, 256) == doctest::Approx(0.3952847).epsilon(1e-6));

    SUBCASE("A_i stays below 2e N^{1/8} for i <= sqrt(N)") {
        for (double n : {256.0, 4096.0, 65536.0}) {
            const std::uint64_t imax = static_cast<std::uint64_t>(std::sqrt(n));
            const double cap = 2.0 * kE * std::pow(n, 0.125);
            for (std::uint64_t i = 0; i <= imax; i += (imax >= 64 ? 8 : 1))
                CHECK(a_i(i, n) < cap);
            CHECK(a_i(imax, n) < cap);
        }
    }
}

TEST_CASE("pi_s") {
    CHECK_THROWS_AS(pi_s(0), argument_error);
    CHECK(pi_s(1) == 1.0);
    CHECK(pi_s(2) == 1.0);
    CHECK(pi_s(3) == doctest::Approx(2.0 * std::numbers::sqrt2).epsilon(1e-14));
    for (std::uint32_t s = 1; s <= 40; ++s) CHECK(pi_s(s) <= 4.0 * s);
}

TEST_CASE("mu_s and a_is") {
    CHECK_THROWS_AS(mu_s(2, 0, 16), argument_error);
    CHECK_THROWS_AS(a_is(4, 2, 16), argument_error);

    CHECK(mu_s(3, 0, 256) == doctest::Approx(90.0 * std::pow(256.0, 0.125)).epsilon(1e-12));
    CHECK(a_is(0, 3, 256) == 0.0);

    SUBCASE("definition matches a direct per-term evaluation at s=3") {
        const double n = 4096.0;
        double direct = 0.0;
        for (std::uint64_t l = 0; l < 12; ++l) {
            const double ld = static_cast<double>(l);
            const double mu = std::max(2.0 * kE * std::pow(ld, 1.5) / std::sqrt(n),
                                       90.0 * std::pow(n, 1.0 / 8.0));
            direct += std::sqrt(2.0 * mu / n) + std::pow(ld / n, 1.5) +
                      std::sqrt(3.0 * ld / (n * n) + ld / (n * n * n));
        }
        CHECK(a_is(12, 3, n) == doctest::Approx(direct).epsilon(1e-12));
    }

    SUBCASE("cap scales like 2e s^2 Pi_{s-1} N^{1/2^s} for i <= s sqrt(N)") {
        const double n = 65536.0;
        for (std::uint32_t s : {3u, 4u}) {
            const double cap = 2.0 * kE * s * s * pi_s(s - 1) *
                               std::pow(n, std::ldexp(1.0, -static_cast<int>(s)));
            const std::uint64_t imax = static_cast<std::uint64_t>(s * std::sqrt(n));
            for (std::uint64_t i = 0; i <= imax; i += 64) CHECK(a_is(i, s, n) <= cap);
            CHECK(a_is(imax, s, n) <= cap);
        }
    }
}

TEST_CASE("c_k and the (1,k)-SC amplitude bound") {
    CHECK(c_k(2) == 2);
    CHECK(c_k(4) == 40);
    CHECK_THROWS_AS(c_k(1), argument_error);

    CHECK(one_ksc_amplitude_bound(0, 4, 64).raw == 0.0);
    const double n = 64.0, i = 5.0;
    const double direct = std::pow(4.0, 2.0) * std::pow(i, 1.5) / std::pow(n, 2.0) +
                          std::sqrt(40.0) * kE * std::pow(i, 2.5) / std::pow(n, 2.0);
    CHECK(one_ksc_amplitude_bound(i, 4, n).raw == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("evaluators are monotone in the query count") {
    for (double i = 1.0; i < 64.0; i *= 2.0) {
        CHECK(collision_bound(i, 2, 256).raw <= collision_bound(2 * i, 2, 256).raw);
        CHECK(repetition_bound(i, 2, 3, 256).raw <= repetition_bound(2 * i, 2, 3, 256).raw);
        CHECK(one_ksc_amplitude_bound(i, 3, 256).raw <=
              one_ksc_amplitude_bound(2 * i, 3, 256).raw);
    }
    for (std::uint64_t i = 1; i < 64; i *= 2) {
        CHECK(a_i(i, 256.0) <= a_i(2 * i, 256.0));
        CHECK(a_is(i, 3, 256.0) <= a_is(2 * i, 3, 256.0));
    }
}

TEST_CASE("lower bound exponents") {
    CHECK(lower_bound_exponent(LowerBoundProblem::one_k_sc, 5).num == 1);
    CHECK(lower_bound_exponent(LowerBoundProblem::one_k_sc, 5).den == 1);
    CHECK(lower_bound_exponent(LowerBoundProblem::k_rsc, 2).num == 3);
    CHECK(lower_bound_exponent(LowerBoundProblem::k_rsc, 2).den == 7);
    CHECK(lower_bound_exponent(LowerBoundProblem::k_rsc, 1).num == 1);
    CHECK(lower_bound_exponent(LowerBoundProblem::k_rsc, 1).den == 3);
    CHECK(lower_bound_exponent(LowerBoundProblem::k_distinct_2_rsc, 7).num == 3);
    CHECK(lower_bound_exponent(LowerBoundProblem::k_distinct_2_rsc, 7).den == 7);
    CHECK_THROWS_AS(lower_bound_exponent(LowerBoundProblem::one_k_sc, 1), argument_error);

    // The shifted indexing lands one step lower; both forms stay exposed.
    CHECK(k_rsc_exponent_shifted(2).num == 1);
    CHECK(k_rsc_exponent_shifted(2).den == 3);
    CHECK(k_rsc_exponent_shifted(3).num == 3);
    CHECK(k_rsc_exponent_shifted(3).den == 7);
}
