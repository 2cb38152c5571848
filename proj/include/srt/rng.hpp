#pragma once

#include <cstdint>

namespace srt {

// SplitMix64. Deterministic across platforms and standard library
// implementations, unlike std::uniform_int_distribution; every randomized
// check in the suite must reproduce byte-identically from its seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi], inclusive. Range is tiny relative to 2^64, so
    // modulo bias is negligible for test data; determinism matters more.
    long long range(long long lo, long long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(next() % span);
    }

    // Independent child stream; decorrelates subsystems sharing one seed.
    Rng fork() { return Rng(next() ^ 0x5851f42d4c957f2dULL); }

private:
    std::uint64_t state_;
};

} // namespace srt
