#include "ktreegen/rng.hpp"

#include <stdexcept>
#include <vector>

namespace ktg {

namespace {

uint64_t splitmix64(uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline uint64_t rotl(uint64_t x, int s) { return (x << s) | (x >> (64 - s)); }

}  // namespace

RngStream::RngStream(uint64_t seed) {
    uint64_t x = seed;
    for (auto& s : s_) s = splitmix64(x);
}

uint64_t RngStream::next_u64() {
    uint64_t result = rotl(s_[1] * 5, 7) * 9;
    uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

uint64_t RngStream::below_u64(uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("below_u64: zero bound");
    if ((bound & (bound - 1)) == 0) return next_u64() & (bound - 1);
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return x % bound;
}

mpz_class RngStream::below(const mpz_class& bound) {
    if (bound <= 0) throw std::invalid_argument("below: bound must be positive");
    if (mpz_fits_ulong_p(bound.get_mpz_t()))
        return mpz_class((unsigned long)below_u64(bound.get_ui()));
    size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    size_t words = (bits + 63) / 64;
    std::vector<uint64_t> buf(words);
    mpz_class x;
    while (true) {
        for (auto& w : buf) w = next_u64();
        // mask surplus high bits
        int extra = (int)(words * 64 - bits);
        if (extra > 0) buf.back() &= (~0ULL) >> extra;
        mpz_import(x.get_mpz_t(), words, -1, sizeof(uint64_t), 0, 0, buf.data());
        if (x < bound) return x;
    }
}

double RngStream::next_double() {
    return (double)(next_u64() >> 11) * 0x1.0p-53;
}

uint64_t derive_stream_seed(uint64_t seed, uint64_t index) {
    uint64_t x = seed ^ (0x6a09e667f3bcc909ULL + index * 0x9e3779b97f4a7c15ULL);
    return splitmix64(x);
}

}  // namespace ktg
