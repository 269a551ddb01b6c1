#pragma once

#include <cstdint>

namespace hyperlambert {

/// Counter-based generator: draw i of stream s is a pure function of
/// (seed, s, i), so sample partitions evaluate in any order.
class CounterRng {
public:
    constexpr explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0) noexcept
        : key_(mix(seed ^ mix(stream + 0x632be59bd9b4e019ULL))) {}

    constexpr CounterRng split(std::uint64_t stream) const noexcept {
        CounterRng child(0);
        child.key_ = mix(key_ ^ mix(stream + 0x9e3779b97f4a7c15ULL));
        return child;
    }

    constexpr std::uint64_t bits(std::uint64_t index) const noexcept {
        return mix(key_ + (index + 1) * 0x9e3779b97f4a7c15ULL);
    }

    /// Uniform in [0, 1) with 53 random bits.
    constexpr double uniform(std::uint64_t index) const noexcept {
        return static_cast<double>(bits(index) >> 11) * 0x1.0p-53;
    }

    constexpr double uniform(std::uint64_t index, double lo, double hi) const noexcept {
        return lo + (hi - lo) * uniform(index);
    }

private:
    // SplitMix64 finaliser.
    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
};

}  // namespace hyperlambert
