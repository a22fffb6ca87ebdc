#ifndef TRACEGEN_RNG_HPP
#define TRACEGEN_RNG_HPP

#include <cstdint>

namespace tracegen {

/// Seedable 64-bit counter-based generator (splitmix64 over a Weyl
/// sequence). Every sampler and stream owns its own instance; there is
/// no global randomness.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53 significant bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

inline constexpr std::uint64_t kDefaultSeed = 42;

} // namespace tracegen

#endif
