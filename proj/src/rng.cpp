#include "condlab/rng.hpp"

#include <cmath>

namespace condlab {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

namespace {

constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;

inline void round_once(std::array<std::uint32_t, 4>& ctr, std::uint32_t k0, std::uint32_t k1) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
    const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
    const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
    ctr = {hi1 ^ ctr[1] ^ k0, lo1, hi0 ^ ctr[3] ^ k1, lo0};
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, StreamPurpose purpose, std::uint64_t index) {
    // Mix the three key parts so distinct (seed, purpose, index) triples give
    // uncorrelated streams.
    std::uint64_t h = splitmix64(seed);
    h = splitmix64(h ^ static_cast<std::uint64_t>(purpose));
    key_hi_ = h;
    key_lo_ = splitmix64(h ^ index);
}

std::array<std::uint32_t, 4> CounterRng::block() {
    std::array<std::uint32_t, 4> ctr = {
        static_cast<std::uint32_t>(counter_),
        static_cast<std::uint32_t>(counter_ >> 32),
        static_cast<std::uint32_t>(key_lo_),
        static_cast<std::uint32_t>(key_lo_ >> 32),
    };
    ++counter_;
    std::uint32_t k0 = static_cast<std::uint32_t>(key_hi_);
    std::uint32_t k1 = static_cast<std::uint32_t>(key_hi_ >> 32);
    for (int r = 0; r < 10; ++r) {
        round_once(ctr, k0, k1);
        k0 += kWeyl0;
        k1 += kWeyl1;
    }
    return ctr;
}

std::uint64_t CounterRng::next_u64() {
    if (buf_pos_ >= 3) {
        buf_ = block();
        buf_pos_ = 0;
    }
    const std::uint64_t lo = buf_[buf_pos_];
    const std::uint64_t hi = buf_[buf_pos_ + 1];
    buf_pos_ += 2;
    return (hi << 32) | lo;
}

double CounterRng::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t CounterRng::next_below(std::uint64_t n) {
    const std::uint64_t limit = ~0ULL - (~0ULL % n + 1) % n;
    std::uint64_t v = next_u64();
    while (v > limit) v = next_u64();
    return v % n;
}

double CounterRng::next_exponential(double rate) {
    return -std::log1p(-next_double()) / rate;
}

double CounterRng::next_normal() {
    if (has_cached_normal_) {
        has_cached_normal_ = false;
        return cached_normal_;
    }
    double u1 = next_double();
    while (u1 == 0.0) u1 = next_double();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 6.283185307179586476925286766559 * u2;
    cached_normal_ = r * std::sin(theta);
    has_cached_normal_ = true;
    return r * std::cos(theta);
}

}  // namespace condlab
