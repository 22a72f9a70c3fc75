#pragma once

#include <cstdint>
#include <cmath>

namespace metacloud {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// xoshiro256++ generator. All sampling in the library reduces to uniform
// doubles from this stream, so results are reproducible across platforms.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
    }

    // Independent stream for a (seed, stream) pair. Used to give every
    // sampling chunk its own generator so thread count cannot change output.
    static RngStream substream(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t sm = seed ^ (0x6a09e667f3bcc909ull + stream * 0x9e3779b97f4a7c15ull);
        std::uint64_t mixed = splitmix64(sm);
        sm ^= mixed;
        return RngStream(splitmix64(sm));
    }

    std::uint64_t next_u64() {
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

    // Uniform on the open interval (0,1); never returns an exact endpoint,
    // so logs and quantile transforms are always safe.
    double uniform01() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    double exponential() { return -std::log(uniform01()); }

    // Random sign, +1 or -1.
    double sign() { return (next_u64() & 1u) ? 1.0 : -1.0; }

    std::uint64_t uniform_index(std::uint64_t n) { return next_u64() % n; }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t s_[4];
};

}  // namespace metacloud
