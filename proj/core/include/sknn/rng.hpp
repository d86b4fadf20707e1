#ifndef SKNN_RNG_HPP
#define SKNN_RNG_HPP

#include <cstdint>

namespace sknn {

/**
 * Counter-based randomness. All random draws in the library are pure
 * functions of (seed, counter), so results never depend on call order,
 * thread count, or platform. The scheme:
 *
 *   mix64        - the splitmix64 finalizer (bijective 64-bit mixer)
 *   hash2        - mix64(a ^ (mix64(b) + 0x9E3779B97F4A7C15))
 *   sub_seed     - hash2, used to derive independent seed streams
 *   uniform01    - top 53 bits of hash2(seed, counter) scaled to [0,1)
 *   normal_ih    - Irwin-Hall: sum of 12 uniforms minus 6; avoids libm so
 *                  synthetic data is bit-identical across platforms
 */
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

constexpr std::uint64_t hash2(std::uint64_t a, std::uint64_t b) {
    return mix64(a ^ (mix64(b) + 0x9E3779B97F4A7C15ull));
}

/// Derives the `index`-th independent seed from a base seed.
constexpr std::uint64_t sub_seed(std::uint64_t base, std::uint64_t index) { return hash2(base, index); }

/// Uniform double in [0, 1), a pure function of (seed, counter).
inline double uniform01(std::uint64_t seed, std::uint64_t counter) {
    return static_cast<double>(hash2(seed, counter) >> 11) * 0x1.0p-53;
}

/// Uniform in [-1, 1).
inline double uniform_pm1(std::uint64_t seed, std::uint64_t counter) {
    return 2.0 * uniform01(seed, counter) - 1.0;
}

/// Uniform integer in [0, n); n must be >= 1.
inline std::uint64_t uniform_below(std::uint64_t seed, std::uint64_t counter, std::uint64_t n) {
    // 64x64 -> high 64 multiply; bias is negligible for the n used here.
    const std::uint64_t r = hash2(seed, counter);
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * n) >> 64);
}

/**
 * Approximately standard normal draw via a 12-term Irwin-Hall sum.
 * Draws from a seed stream distinct from uniform01's, so mixing uniform
 * and normal draws on one (seed, counter) stream never reuses raw bits.
 */
inline double normal_ih(std::uint64_t seed, std::uint64_t counter) {
    const std::uint64_t s2 = mix64(seed ^ 0xA0761D6478BD642Full);
    double s = 0.0;
    for (std::uint64_t i = 0; i < 12; ++i) s += uniform01(s2, 12 * counter + i);
    return s - 6.0;
}

/// Sequential convenience wrapper over one counter stream.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed) {}
    double uniform01() { return sknn::uniform01(seed_, counter_++); }
    double uniform_pm1() { return sknn::uniform_pm1(seed_, counter_++); }
    double normal() { return sknn::normal_ih(seed_, counter_++); }
    std::uint64_t below(std::uint64_t n) { return sknn::uniform_below(seed_, counter_++, n); }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

}  // namespace sknn

#endif  // SKNN_RNG_HPP
