#pragma once

#include <cstdint>

namespace qsc {

/// Finalizer of the splitmix64 generator; full-avalanche 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Keyed mapping shared by the hash family and per-trial seed derivation:
/// a deterministic pseudorandom word from (key, x).
constexpr std::uint64_t keyed_mix(std::uint64_t key, std::uint64_t x) noexcept {
    return mix64(key ^ (x * 0x9e3779b97f4a7c15ULL));
}

/// Unbiased-enough reduction of a 64-bit word to [0, bound) (Lemire).
constexpr std::uint64_t reduce64(std::uint64_t word, std::uint64_t bound) noexcept {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(word) * static_cast<unsigned __int128>(bound)) >> 64);
}

/// xoshiro256++ stream, seeded through splitmix64. Single-owner, cheap to copy.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) noexcept {
        std::uint64_t z = seed;
        for (auto& word : s_) {
            z = mix64(z + 0x9e3779b97f4a7c15ULL);
            word = z;
        }
    }

    std::uint64_t next() noexcept {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    std::uint64_t operator()() noexcept { return next(); }
    static constexpr std::uint64_t min() noexcept { return 0; }
    static constexpr std::uint64_t max() noexcept { return ~0ULL; }

    /// Uniform integer in [0, bound); bound must be nonzero.
    std::uint64_t below(std::uint64_t bound) noexcept { return reduce64(next(), bound); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t s_[4];
};

} // namespace qsc
