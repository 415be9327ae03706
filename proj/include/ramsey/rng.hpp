#pragma once

#include <cmath>
#include <cstdint>

namespace ramsey {

// Counter-based generator: a splitmix64 finalizer over a keyed counter.
// Every read/trial owns its own stream selected by (seed, stream), so
// parallel runs reproduce the serial output regardless of scheduling.
class CounterRng {
public:
    explicit CounterRng(uint64_t seed, uint64_t stream = 0)
        : key_(mix(seed + 0x9E3779B97F4A7C15ull * mix(stream + 1))) {}

    uint64_t next_u64() {
        return mix(key_ + 0x9E3779B97F4A7C15ull * ++counter_);
    }

    // uniform in [0, 1)
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // unbiased uniform integer in [0, n), n >= 1
    uint64_t uniform_int(uint64_t n) {
        __uint128_t m = static_cast<__uint128_t>(next_u64()) * n;
        auto lo = static_cast<uint64_t>(m);
        if (lo < n) {
            const uint64_t t = (0 - n) % n;
            while (lo < t) {
                m = static_cast<__uint128_t>(next_u64()) * n;
                lo = static_cast<uint64_t>(m);
            }
        }
        return static_cast<uint64_t>(m >> 64);
    }

    int spin() { return (next_u64() >> 63) ? 1 : -1; }

    bool coin() { return (next_u64() >> 63) != 0; }

    // standard normal via Box-Muller; one variate per call keeps streams
    // reproducible across call sites
    double normal() {
        const double u1 = 1.0 - uniform01();  // (0, 1]
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

private:
    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    uint64_t key_;
    uint64_t counter_ = 0;
};

}  // namespace ramsey
