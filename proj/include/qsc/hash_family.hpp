#pragma once

#include <cstdint>
#include <vector>

#include "qsc/errors.hpp"
#include "qsc/rng.hpp"

namespace qsc {

/// Hard ceiling on enumerable domain sizes; marked-set construction is O(M*k).
inline constexpr std::uint64_t kDomainCap = std::uint64_t{1} << 24;

/// A seeded family of k deterministic functions h_0..h_{k-1} : [0,M) -> [0,N),
/// standing in for independent uniformly random functions. Immutable after
/// construction; safe to evaluate concurrently.
class FunctionFamily {
public:
    FunctionFamily(std::uint64_t seed, std::uint32_t k, std::uint64_t codomain_size,
                   std::uint64_t domain_size)
        : seed_(seed), n_(codomain_size), m_(domain_size) {
        if (k == 0) throw argument_error("FunctionFamily: k must be >= 1");
        if (codomain_size == 0) throw argument_error("FunctionFamily: N must be >= 1");
        if (domain_size == 0) throw argument_error("FunctionFamily: M must be >= 1");
        keys_.reserve(k);
        for (std::uint32_t i = 0; i < k; ++i) keys_.push_back(function_key(seed, i));
    }

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint32_t k() const noexcept { return static_cast<std::uint32_t>(keys_.size()); }
    std::uint64_t codomain_size() const noexcept { return n_; }
    std::uint64_t domain_size() const noexcept { return m_; }

    /// h_i(x). Deterministic in (seed, i, x); value in [0, N).
    std::uint64_t eval(std::uint32_t i, std::uint64_t x) const {
        if (i >= keys_.size()) throw argument_error("eval: function index out of range");
        if (x >= m_) throw argument_error("eval: domain element out of range");
        return reduce64(keyed_mix(keys_[i], x), n_);
    }

    /// All k values at x, in function order.
    std::vector<std::uint64_t> image_tuple(std::uint64_t x) const {
        if (x >= m_) throw argument_error("image_tuple: domain element out of range");
        std::vector<std::uint64_t> values;
        values.reserve(keys_.size());
        for (std::uint32_t i = 0; i < k(); ++i) values.push_back(eval(i, x));
        return values;
    }

    /// H(x) = {h_0(x), ..., h_{k-1}(x)}: sorted, duplicates removed.
    std::vector<std::uint64_t> image_set(std::uint64_t x) const;

    /// Family with `extra` fresh functions appended; the first k are unchanged.
    FunctionFamily extend(std::uint32_t extra) const;

    /// Family restricted to the first new_k functions (1 <= new_k <= k).
    FunctionFamily prefix(std::uint32_t new_k) const;

private:
    static std::uint64_t function_key(std::uint64_t seed, std::uint32_t i) noexcept {
        return mix64(seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(i) + 1));
    }

    std::uint64_t seed_;
    std::uint64_t n_;
    std::uint64_t m_;
    std::vector<std::uint64_t> keys_;
};

/// N^k for (1,k) experiments, checked against the enumeration cap.
std::uint64_t recommended_domain_1k(std::uint32_t k, std::uint64_t codomain_size);

/// min((r*N)^k, cap) for (r,k) experiments; errors only when N^k itself
/// exceeds the cap.
std::uint64_t recommended_domain_rk(std::uint32_t r, std::uint32_t k, std::uint64_t codomain_size);

} // namespace qsc
