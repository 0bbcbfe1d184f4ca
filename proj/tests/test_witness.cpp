#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "qsc/rng.hpp"
#include "qsc/witness.hpp"

using namespace qsc;

namespace {

// Containment check written against std::set, independent of the library's
// sorted-vector path.
bool sc_oracle(const FunctionFamily& f, std::uint64_t x0,
               const std::vector<std::uint64_t>& coverers) {
    for (std::uint64_t c : coverers)
        if (c == x0) return false;
    std::set<std::uint64_t> covered;
    for (std::uint64_t c : coverers)
        for (std::uint32_t i = 0; i < f.k(); ++i) covered.insert(f.eval(i, c));
    for (std::uint32_t i = 0; i < f.k(); ++i)
        if (!covered.count(f.eval(i, x0))) return false;
    return true;
}

} // namespace

TEST_CASE("verify_sc basics") {
    FunctionFamily f(17, 2, 4, 16);

    SUBCASE("self-cover is rejected") {
        for (std::uint64_t x = 0; x < 16; ++x)
            CHECK_FALSE(verify_sc(f, SubsetCoverWitness{x, {x}}));
    }
    SUBCASE("a full collision covers") {
        FunctionFamily g(3, 2, 2, 64);
        bool found = false;
        for (std::uint64_t a = 0; a < 64 && !found; ++a)
            for (std::uint64_t b = a + 1; b < 64 && !found; ++b)
                if (g.image_set(a) == g.image_set(b)) {
                    CHECK(verify_sc(g, SubsetCoverWitness{a, {b}}));
                    found = true;
                }
        CHECK(found);
    }
    SUBCASE("agrees with an independent containment oracle") {
        Rng rng(99);
        for (int trial = 0; trial < 1000; ++trial) {
            SubsetCoverWitness w;
            w.x0 = rng.below(16);
            const std::uint64_t r = 1 + rng.below(3);
            for (std::uint64_t i = 0; i < r; ++i) w.coverers.push_back(rng.below(16));
            CHECK(verify_sc(f, w) == sc_oracle(f, w.x0, w.coverers));
        }
    }
    SUBCASE("out-of-range elements are argument errors") {
        CHECK_THROWS_AS(verify_sc(f, SubsetCoverWitness{16, {0}}), argument_error);
        CHECK_THROWS_AS(verify_sc(f, SubsetCoverWitness{0, {16}}), argument_error);
        CHECK_THROWS_AS(verify_sc(f, SubsetCoverWitness{0, {}}), argument_error);
    }
}

TEST_CASE("verify_rsc") {
    FunctionFamily f(23, 2, 2, 16);

    SUBCASE("partner equal to x0 is rejected") {
        CHECK_FALSE(verify_rsc(f, RestrictedSCWitness{3, {3, 5}}));
    }
    SUBCASE("k = 1 degenerates to a plain collision") {
        FunctionFamily g(4, 1, 2, 8);
        for (std::uint64_t a = 0; a < 8; ++a)
            for (std::uint64_t b = 0; b < 8; ++b) {
                if (a == b) continue;
                CHECK(verify_rsc(g, RestrictedSCWitness{a, {b}}) ==
                      (g.eval(0, a) == g.eval(0, b)));
            }
    }
    SUBCASE("every accepted RSC is an accepted SC") {
        for (std::uint64_t x0 = 0; x0 < 16; ++x0)
            for (std::uint64_t p0 = 0; p0 < 16; ++p0)
                for (std::uint64_t p1 = 0; p1 < 16; ++p1) {
                    RestrictedSCWitness w{x0, {p0, p1}};
                    if (!verify_rsc(f, w)) continue;
                    std::vector<std::uint64_t> coverers{p0};
                    if (p1 != p0) coverers.push_back(p1);
                    CHECK(verify_sc(f, SubsetCoverWitness{x0, coverers}));
                }
    }
    SUBCASE("wrong partner count is an argument error") {
        CHECK_THROWS_AS(verify_rsc(f, RestrictedSCWitness{0, {1}}), argument_error);
    }
}

TEST_CASE("verify_repetition") {
    FunctionFamily f(31, 3, 4, 64);

    SUBCASE("hand cases") {
        for (std::uint64_t x = 0; x < 64; ++x) {
            const bool all_equal = f.eval(0, x) == f.eval(1, x) && f.eval(1, x) == f.eval(2, x);
            CHECK(verify_repetition(f, RepetitionWitness{x, {0, 1, 2}}) == all_equal);
            if (f.eval(0, x) != f.eval(1, x))
                CHECK_FALSE(verify_repetition(f, RepetitionWitness{x, {0, 1}}));
        }
    }
    SUBCASE("accepted set equals enumerate_repetitions") {
        auto witnesses = enumerate_repetitions(f, 2);
        std::set<std::uint64_t> enumerated;
        for (const auto& w : witnesses) {
            CHECK(verify_repetition(f, w));
            enumerated.insert(w.x);
        }
        for (std::uint64_t x = 0; x < 64; ++x) {
            bool any = false;
            for (std::uint32_t a = 0; a < 3 && !any; ++a)
                for (std::uint32_t b = a + 1; b < 3 && !any; ++b)
                    any = verify_repetition(f, RepetitionWitness{x, {a, b}});
            CHECK(any == enumerated.count(x));
        }
    }
    SUBCASE("duplicate indices are an argument error") {
        CHECK_THROWS_AS(verify_repetition(f, RepetitionWitness{0, {1, 1}}), argument_error);
        CHECK_THROWS_AS(verify_repetition(f, RepetitionWitness{0, {0}}), argument_error);
    }
}

TEST_CASE("brute_force_sc") {
    SUBCASE("abundant covers at tiny N") {
        FunctionFamily f(2, 2, 2, 16);
        auto w = brute_force_sc(f, 1);
        REQUIRE(w.has_value());
        CHECK(verify_sc(f, *w));
    }
    SUBCASE("single-element domain has no cover") {
        FunctionFamily f(2, 2, 2, 1);
        CHECK_FALSE(brute_force_sc(f, 1).has_value());
    }
    SUBCASE("budget is enforced") {
        FunctionFamily f(2, 2, 16, 4096);
        CHECK_THROWS_AS(brute_force_sc(f, 2), resource_error);
    }
}

TEST_CASE("brute_force_rsc") {
    SUBCASE("k = 1 equals collision existence") {
        FunctionFamily f(6, 1, 2, 8);
        bool collision = false;
        for (std::uint64_t a = 0; a < 8 && !collision; ++a)
            for (std::uint64_t b = a + 1; b < 8 && !collision; ++b)
                collision = f.eval(0, a) == f.eval(0, b);
        CHECK(brute_force_rsc(f).has_value() == collision);
    }
    SUBCASE("agreement with a double-loop matcher over 100 seeds") {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            FunctionFamily f(seed, 2, 4, 64);
            // Independent oracle: direct partner scan per coordinate.
            bool exists = false;
            for (std::uint64_t x0 = 0; x0 < 64 && !exists; ++x0) {
                bool ok = true;
                for (std::uint32_t i = 0; i < 2 && ok; ++i) {
                    bool partner = false;
                    for (std::uint64_t x = 0; x < 64 && !partner; ++x)
                        partner = x != x0 && f.eval(i, x) == f.eval(i, x0);
                    ok = partner;
                }
                exists = ok;
            }
            auto w = brute_force_rsc(f);
            CHECK(w.has_value() == exists);
            if (w) CHECK(verify_rsc(f, *w));
        }
    }
}

TEST_CASE("a valid witness stays valid when coverers are appended") {
    FunctionFamily f(41, 2, 2, 32);
    Rng rng(5);
    int checked = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        SubsetCoverWitness w{rng.below(32), {rng.below(32)}};
        if (!verify_sc(f, w)) continue;
        std::uint64_t extra = rng.below(32);
        if (extra == w.x0) extra = (extra + 1) % 32;
        if (extra == w.x0) continue;
        w.coverers.push_back(extra);
        CHECK(verify_sc(f, w));
        ++checked;
    }
    CHECK(checked > 0);
}

TEST_CASE("enumerate_repetitions") {
    SUBCASE("fixed-pair proportion is binomial around 1/N") {
        FunctionFamily f(77, 2, 16, 65536);
        auto witnesses = enumerate_repetitions(f, 2, std::vector<std::uint32_t>{0, 1});
        const double p = 1.0 / 16.0;
        const double sigma = std::sqrt(p * (1.0 - p) / 65536.0);
        const double proportion = static_cast<double>(witnesses.size()) / 65536.0;
        CHECK(std::abs(proportion - p) < 5.0 * sigma);
    }
    SUBCASE("j out of range") {
        FunctionFamily f(1, 2, 4, 16);
        CHECK_THROWS_AS(enumerate_repetitions(f, 3), argument_error);
        CHECK_THROWS_AS(enumerate_repetitions(f, 1), argument_error);
    }
    SUBCASE("enumeration budget") {
        FunctionFamily f(1, 2, 4, 16);
        CHECK_THROWS_AS(enumerate_repetitions(f, 2, std::nullopt, 8), resource_error);
    }
    SUBCASE("any-indices is a superset of every fixed choice") {
        FunctionFamily f(13, 3, 4, 256);
        std::set<std::uint64_t> any;
        for (const auto& w : enumerate_repetitions(f, 2)) any.insert(w.x);
        const std::vector<std::vector<std::uint32_t>> pairs{{0, 1}, {0, 2}, {1, 2}};
        for (const auto& pair : pairs)
            for (const auto& w : enumerate_repetitions(f, 2, pair)) CHECK(any.count(w.x) == 1);
    }
}
