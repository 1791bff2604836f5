#pragma once

#include <cstdint>

namespace replisim {

/// SplitMix64 finalizer (Steele, Lea & Flood). A bijective 64-bit mixer.
constexpr std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Purpose tag for a substream, so draws for different uses never collide.
enum class StreamDomain : std::uint64_t { Brownian = 1, InitialPlacement = 2 };

/// Counter-based random stream: the k-th draw of substream (seed, domain,
/// step, index) is a pure function of those five integers, so results do not
/// depend on evaluation order and a replay from any step is exact.
class RandomStream {
public:
    constexpr RandomStream(std::uint64_t seed, StreamDomain domain, std::uint64_t step,
                           std::uint64_t index)
        : m_key(splitmix64(splitmix64(splitmix64(seed ^ static_cast<std::uint64_t>(domain)) ^
                                      step) ^
                           index)) {}

    constexpr std::uint64_t next_u64() { return splitmix64(m_key + 0x632BE59BD9B4E019ull * ++m_counter); }

    /// Uniform on [0, 1) with 53 random bits.
    constexpr double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform on [-1, 1).
    constexpr double next_symmetric() { return 2.0 * next_unit() - 1.0; }

private:
    std::uint64_t m_key;
    std::uint64_t m_counter = 0;
};

}  // namespace replisim
