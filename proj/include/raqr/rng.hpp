#pragma once

#include <cmath>
#include <cstdint>

namespace raqr::rng {

/// splitmix64: tiny, seedable, portable. Used both as the noise stream
/// generator and as the mixing function that derives per-trace and per-trial
/// substreams, so parallel and serial runs agree bit for bit.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// uniform in (0, 1]
    double next_unit() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }
};

/// Derive a substream seed from a parent seed and up to two indices.
inline std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t a,
                                 std::uint64_t b = 0) {
    SplitMix64 mix(parent ^ (a * 0xd6e8feb86659fd93ULL) ^
                   (b * 0xa5a5a5a5a5a5a5a5ULL));
    mix.next_u64();
    return mix.next_u64();
}

/// Standard normal deviates via Box-Muller on the splitmix64 stream.
struct GaussianRng {
    SplitMix64 gen;
    double spare = 0.0;
    bool has_spare = false;

    explicit GaussianRng(std::uint64_t seed) : gen(seed) {}

    double next() {
        if (has_spare) {
            has_spare = false;
            return spare;
        }
        const double u1 = gen.next_unit();
        const double u2 = gen.next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare = r * std::sin(a);
        has_spare = true;
        return r * std::cos(a);
    }
};

}  // namespace raqr::rng
