#ifndef SOW_RNG_HPP
#define SOW_RNG_HPP

#include <cstdint>

namespace sow {

// Counter-based generator: output i of stream (seed, stream) is a pure
// function of (seed, stream, i), so parallel consumers can draw from disjoint
// streams and reproduce results independent of scheduling.
class CounterRng {
  public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : key_(mix(mix(seed + 0x9E3779B97F4A7C15ULL) ^ mix(stream + 0xD1B54A32D192ED03ULL))), counter_(0) {}

    std::uint64_t next_u64() { return mix(key_ + counter_++ * 0x9E3779B97F4A7C15ULL); }

    // Uniform on [0, bound) via rejection; bound must be positive.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % bound;
    }

  private:
    // splitmix64 finalizer
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_;
};

}  // namespace sow

#endif
