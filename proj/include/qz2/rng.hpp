#pragma once

#include <cstdint>

namespace qz2 {

// Counter-based random stream: output i is mix(seed-derived state + i*gamma),
// the SplitMix64 construction.  Streams derived from (master, grid, trial)
// never collide and are reproducible independent of thread scheduling.
class RngStream {
public:
    explicit RngStream(uint64_t seed) : ctr_(mix_(seed + 0x9e3779b97f4a7c15ull)) {}

    static RngStream derive(uint64_t master, uint64_t a, uint64_t b = 0) {
        uint64_t s = mix_(master ^ 0x243f6a8885a308d3ull);
        s = mix_(s + a * 0x9e3779b97f4a7c15ull);
        s = mix_(s + b * 0xbf58476d1ce4e5b9ull);
        return RngStream(s);
    }

    uint64_t next_u64() {
        ctr_ += 0x9e3779b97f4a7c15ull;
        return mix_(ctr_);
    }

    // exactly one uniform bit per call
    int bit() {
        if (nbits_ == 0) {
            buf_ = next_u64();
            nbits_ = 64;
        }
        int b = static_cast<int>(buf_ & 1u);
        buf_ >>= 1;
        --nbits_;
        return b;
    }

    // uniform in [0,1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    // uniform integer in [0, n)
    uint64_t below(uint64_t n) {
        // rejection-free would bias for huge n; n here is always small
        uint64_t r = next_u64();
        return r % n;
    }

private:
    static uint64_t mix_(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    uint64_t ctr_;
    uint64_t buf_ = 0;
    int nbits_ = 0;
};

} // namespace qz2
