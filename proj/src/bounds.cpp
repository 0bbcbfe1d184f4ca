#include "qsc/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace qsc {

namespace {

constexpr double kE = std::numbers::e;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double binomial(std::uint32_t n, std::uint32_t r) {
    double value = 1.0;
    for (std::uint32_t t = 0; t < r; ++t)
        value = value * static_cast<double>(n - t) / static_cast<double>(t + 1);
    return value;
}

} // namespace

BoundValue BoundValue::from_log(double log_raw) {
    BoundValue b;
    b.log_raw = log_raw;
    b.raw = std::exp(log_raw); // 0 for -inf, inf past double range
    b.clamped = log_raw <= 0.0 ? b.raw : 1.0;
    b.as_probability = b.clamped * b.clamped;
    return b;
}

// Log-space evaluation runs in extended precision so products of large
// exponents (N up to 2^256, i up to 2^128) keep well past 1e-9 relative
// accuracy.
BoundValue collision_bound(double i, double j, double n) {
    if (j < 1.0) throw argument_error("collision_bound: j must be >= 1");
    if (i < 0.0 || n < 1.0) throw argument_error("collision_bound: bad i or N");
    if (i == 0.0) return BoundValue::from_log(kNegInf);
    const long double log_base = 1.0L + 1.5L * std::log(static_cast<long double>(i)) -
                                 std::log(static_cast<long double>(j)) -
                                 0.5L * std::log(static_cast<long double>(n));
    return BoundValue::from_log(static_cast<double>(static_cast<long double>(j) * log_base));
}

BoundValue repetition_bound(double i, double l, double j, double n) {
    if (l < 1.0) throw argument_error("repetition_bound: l must be >= 1");
    if (j < 2.0) throw argument_error("repetition_bound: j must be >= 2");
    if (i < 0.0 || n < 1.0) throw argument_error("repetition_bound: bad i or N");
    if (i == 0.0) return BoundValue::from_log(kNegInf);
    const long double log_base = 1.0L + std::log(static_cast<long double>(i)) -
                                 std::log(static_cast<long double>(l)) -
                                 0.5L * (static_cast<long double>(j) - 1.0L) *
                                     std::log(static_cast<long double>(n));
    return BoundValue::from_log(static_cast<double>(static_cast<long double>(l) * log_base));
}

double mu3(double l, double n) {
    if (l < 0.0 || n < 1.0) throw argument_error("mu3: bad arguments");
    const double left = 2.0 * kE * std::pow(l, 1.5) / std::sqrt(n);
    const double right = 10.0 * std::pow(n, 0.125);
    return std::max(left, right);
}

double a_i(std::uint64_t i, double n) {
    if (n < 1.0) throw argument_error("a_i: N must be >= 1");
    double sum = 0.0;
    for (std::uint64_t l = 0; l < i; ++l) {
        const double shifted = l == 0 ? 0.0 : static_cast<double>(l - 1);
        sum += std::numbers::sqrt2 * (std::sqrt(mu3(shifted, n) / n) + shifted / n);
    }
    return sum;
}

double pi_s(std::uint32_t s) {
    if (s == 0) throw argument_error("pi_s: s must be >= 1");
    if (s <= 2) return 1.0;
    double pi = 1.0; // Pi_2
    for (std::uint32_t v = 2; v < s; ++v) pi = 2.0 * std::sqrt(static_cast<double>(v)) * std::sqrt(pi);
    return pi;
}

double mu_s(std::uint32_t s, double l, double n) {
    if (s < 3) throw argument_error("mu_s: s must be >= 3");
    if (l < 0.0 || n < 1.0) throw argument_error("mu_s: bad arguments");
    const double pi_prev = pi_s(s - 1);
    const double p2 = std::ldexp(1.0, static_cast<int>(s) - 2);  // 2^{s-2}
    const double p3 = std::ldexp(1.0, static_cast<int>(s) - 3);  // 2^{s-3}
    const double right =
        10.0 * static_cast<double>(s) * static_cast<double>(s) * pi_prev *
        std::pow(n, std::ldexp(1.0, -static_cast<int>(s)));
    if (l == 0.0) return right;
    const double log_left = std::log(pi_prev) + ((p2 - 1.0) / p3) * std::log(2.0 * kE) +
                            ((2.0 * p2 - 1.0) / p2) * std::log(l) -
                            ((p2 - 1.0) / p2) * std::log(n);
    return std::max(std::exp(log_left), right);
}

double a_is(std::uint64_t i, std::uint32_t s, double n) {
    if (s < 3) throw argument_error("a_is: s must be >= 3");
    if (n < 1.0) throw argument_error("a_is: N must be >= 1");
    double sum = 0.0;
    for (std::uint64_t li = 0; li < i; ++li) {
        const double l = static_cast<double>(li);
        const double first = std::sqrt((static_cast<double>(s) - 1.0) * mu_s(s, l, n) / n);
        const double second = std::pow(l / n, static_cast<double>(s) / 2.0);
        double inner = 0.0;
        for (std::uint32_t r = 2; r <= s; ++r)
            inner += binomial(s, r) * l / std::pow(n, static_cast<double>(r));
        sum += first + second + std::sqrt(inner);
    }
    return sum;
}

std::uint64_t c_k(std::uint32_t k) {
    if (k < 2 || k > 20) throw argument_error("c_k: k must be in [2, 20]");
    std::uint64_t sum = 0;
    for (std::uint32_t j = 2; j <= k; ++j) {
        std::uint64_t term = 1; // k!/(j-1)! = j * (j+1) * ... * k
        for (std::uint32_t f = j; f <= k; ++f) term *= f;
        sum += term;
    }
    return sum;
}

BoundValue one_ksc_amplitude_bound(double i, std::uint32_t k, double n) {
    if (n < 1.0) throw argument_error("one_ksc_amplitude_bound: N must be >= 1");
    if (i < 0.0) throw argument_error("one_ksc_amplitude_bound: i must be >= 0");
    const std::uint64_t ck = c_k(k); // also validates k
    if (i == 0.0) return BoundValue::from_log(kNegInf);
    const long double kk = static_cast<long double>(k);
    const long double li = std::log(static_cast<long double>(i));
    const long double log_shared = -0.5L * kk * std::log(static_cast<long double>(n));
    const long double log_first = 0.5L * kk * std::log(kk) + 1.5L * li + log_shared;
    const long double log_second =
        0.5L * std::log(static_cast<long double>(ck)) + 1.0L + 2.5L * li + log_shared;
    const long double log_sum = std::max(log_first, log_second) +
                                std::log1p(std::exp(-std::abs(log_first - log_second)));
    return BoundValue::from_log(static_cast<double>(log_sum));
}

Rational make_rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw argument_error("make_rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    return Rational{g == 0 ? 0 : num / g, g == 0 ? 1 : den / g};
}

Rational lower_bound_exponent(LowerBoundProblem problem, std::uint32_t k) {
    switch (problem) {
    case LowerBoundProblem::k_rsc: {
        if (k < 1 || k > 61) throw argument_error("lower_bound_exponent: k out of range");
        const std::int64_t p = std::int64_t{1} << k;
        return make_rational(p - 1, 2 * p - 1);
    }
    case LowerBoundProblem::one_k_sc:
        if (k < 2) throw argument_error("lower_bound_exponent: one_k_sc needs k >= 2");
        return make_rational(k, 5);
    case LowerBoundProblem::k_distinct_2_rsc:
        if (k < 1) throw argument_error("lower_bound_exponent: need k >= 1");
        return make_rational(3, 7);
    }
    throw argument_error("lower_bound_exponent: unsupported problem");
}

Rational k_rsc_exponent_shifted(std::uint32_t s) {
    if (s < 1 || s > 61) throw argument_error("k_rsc_exponent_shifted: s out of range");
    const std::int64_t p = std::int64_t{1} << (s - 1);
    return make_rational(p - 1, 2 * p - 1);
}

} // namespace qsc
