#pragma once

#include <cstdint>

#include "qsc/errors.hpp"

namespace qsc {

/// An evaluated amplitude bound. raw may exceed 1 (the underlying quantity is
/// an amplitude norm); clamped caps it at 1 and as_probability squares the
/// clamp. log_raw carries the natural log for magnitudes past double range.
struct BoundValue {
    double raw = 0.0;
    double clamped = 0.0;
    double as_probability = 0.0;
    double log_raw = 0.0; // -inf when raw == 0

    static BoundValue from_log(double log_raw);
};

/// (e * i^{3/2} / (j * sqrt(N)))^j : amplitude of at least j distinct
/// 2-collisions after i queries.
BoundValue collision_bound(double i, double j, double n);

/// (e * i / (l * N^{(j-1)/2}))^l : amplitude of at least l distinct
/// j-repetitions after i queries.
BoundValue repetition_bound(double i, double l, double j, double n);

/// max(2e * l^{3/2} / sqrt(N), 10 * N^{1/8}).
double mu3(double l, double n);

/// A_i = sum_{l=0}^{i-1} sqrt(2) * (sqrt(mu3(l-1)/N) + (l-1)/N), with the
/// argument l-1 clamped at 0 (the l=0 term would otherwise reference -1).
double a_i(std::uint64_t i, double n);

/// Pi_1 = Pi_2 = 1; Pi_{s+1} = 2 * sqrt(s) * sqrt(Pi_s).
double pi_s(std::uint32_t s);

/// max(Pi_{s-1} * (2e)^{(2^{s-2}-1)/2^{s-3}} * l^{(2^{s-1}-1)/2^{s-2}}
///       / N^{(2^{s-2}-1)/2^{s-2}},
///     10 * s^2 * Pi_{s-1} * N^{1/2^s}), for s >= 3.
double mu_s(std::uint32_t s, double l, double n);

/// A_{i,s} = sum_{l=0}^{i-1} ( sqrt((s-1) * mu_s(l)/N) + (l/N)^{s/2}
///             + (sum_{r=2}^{s} C(s,r) * l / N^r)^{1/2} ), for s >= 3.
double a_is(std::uint64_t i, std::uint32_t s, double n);

/// C_k = sum_{j=2}^{k} k!/(j-1)!, exact (k in [2, 20]).
std::uint64_t c_k(std::uint32_t k);

/// k^{k/2} * i^{3/2} / N^{k/2} + sqrt(C_k) * e * i^{5/2} / N^{k/2}.
BoundValue one_ksc_amplitude_bound(double i, std::uint32_t k, double n);

/// Exact rational, normalized with positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

Rational make_rational(std::int64_t num, std::int64_t den);

enum class LowerBoundProblem {
    k_rsc,             // (2^k - 1) / (2^{k+1} - 1), matching the upper bound
    one_k_sc,          // k/5
    k_distinct_2_rsc,  // 3/7 (N-exponent; the k-factor is k^{4/7})
};

/// N-exponent of the corresponding query lower bound.
Rational lower_bound_exponent(LowerBoundProblem problem, std::uint32_t k);

/// The same exponent family indexed one recursion level lower:
/// (2^{s-1}-1)/(2^s-1). At s=2 this disagrees with the dedicated
/// two-function value of 3/7; both forms are exposed so the discrepancy
/// stays visible.
Rational k_rsc_exponent_shifted(std::uint32_t s);

} // namespace qsc
