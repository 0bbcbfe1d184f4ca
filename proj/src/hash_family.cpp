#include "qsc/hash_family.hpp"

#include <algorithm>

namespace qsc {

std::vector<std::uint64_t> FunctionFamily::image_set(std::uint64_t x) const {
    std::vector<std::uint64_t> values = image_tuple(x);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

FunctionFamily FunctionFamily::extend(std::uint32_t extra) const {
    return FunctionFamily(seed_, k() + extra, n_, m_);
}

FunctionFamily FunctionFamily::prefix(std::uint32_t new_k) const {
    if (new_k == 0 || new_k > k()) throw argument_error("prefix: new_k out of range");
    return FunctionFamily(seed_, new_k, n_, m_);
}

namespace {

// N^k with overflow detection against the cap.
std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp, std::uint64_t limit) {
    std::uint64_t value = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (base != 0 && value > limit / base) return limit + 1;
        value *= base;
        if (value > limit) return limit + 1;
    }
    return value;
}

} // namespace

std::uint64_t recommended_domain_1k(std::uint32_t k, std::uint64_t codomain_size) {
    const std::uint64_t m = checked_pow(codomain_size, k, kDomainCap);
    if (m > kDomainCap)
        throw resource_error("recommended_domain_1k: N^k exceeds the 2^24 enumeration cap");
    return m;
}

std::uint64_t recommended_domain_rk(std::uint32_t r, std::uint32_t k,
                                    std::uint64_t codomain_size) {
    const std::uint64_t nk = checked_pow(codomain_size, k, kDomainCap);
    if (nk > kDomainCap)
        throw resource_error("recommended_domain_rk: N^k exceeds the 2^24 enumeration cap");
    const std::uint64_t rnk = checked_pow(codomain_size * r, k, kDomainCap);
    return rnk > kDomainCap ? kDomainCap : rnk;
}

} // namespace qsc
