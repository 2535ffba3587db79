#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace ktg {

/// Deterministic, platform-independent random stream (splitmix64-seeded
/// xoshiro256**).  Identical seeds reproduce identical sequences bit for
/// bit across runs and platforms.
class RngStream {
public:
    explicit RngStream(uint64_t seed);

    uint64_t next_u64();
    /// Uniform integer in [0, bound), bound > 0, by rejection.
    uint64_t below_u64(uint64_t bound);
    mpz_class below(const mpz_class& bound);
    /// Uniform double in [0,1) with 53 random bits.
    double next_double();

private:
    uint64_t s_[4];
};

/// Independent per-item stream derivation; any worker split over items
/// yields results independent of the thread count.
uint64_t derive_stream_seed(uint64_t seed, uint64_t index);

}  // namespace ktg
