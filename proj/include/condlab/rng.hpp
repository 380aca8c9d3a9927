#pragma once

#include <array>
#include <cstdint>

namespace condlab {

// Counter-based generator (Philox-4x32-10 style). A stream is keyed by
// (seed, purpose, index); draws with the same key are identical regardless
// of which thread consumes them.
enum class StreamPurpose : std::uint32_t {
    offsets = 1,
    holding = 2,
    jumps = 3,
    brownian = 4,
    shuffle = 5,
    generic = 6,
};

std::uint64_t splitmix64(std::uint64_t x);

class CounterRng {
  public:
    CounterRng(std::uint64_t seed, StreamPurpose purpose, std::uint64_t index);

    std::uint64_t next_u64();
    // Uniform on [0,1) with 53 random bits.
    double next_double();
    // Uniform integer on [0, n), n >= 1, via rejection (no modulo bias).
    std::uint64_t next_below(std::uint64_t n);
    // Exponential with the given rate.
    double next_exponential(double rate);
    // Standard normal (Box-Muller, cached pair).
    double next_normal();

  private:
    std::array<std::uint32_t, 4> block();

    std::uint64_t key_hi_, key_lo_;
    std::uint64_t counter_ = 0;
    std::array<std::uint32_t, 4> buf_{};
    int buf_pos_ = 4;
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

}  // namespace condlab
