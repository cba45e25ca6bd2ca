#pragma once

#include <cstdint>
#include <stdexcept>

namespace resbench::rng {

// 64-bit finalizer (Stafford variant 13 of the splitmix64 mixer).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// Combine words into a well-mixed key.
constexpr std::uint64_t mix_key(std::uint64_t a, std::uint64_t b) noexcept {
    return mix64(a + kGolden * (b + 1));
}

// Counter-based stream: the state is a per-stream key plus a draw counter.
// Each output is a pure function of (key, counter), so streams can be
// created, copied, and interleaved in any order without affecting each
// other's sequences.
class Stream {
public:
    Stream() : Stream(0, 0) {}
    Stream(std::uint64_t seed, std::uint64_t stream_id)
        : seed_(seed),
          stream_id_(stream_id),
          key_(mix64(mix64(seed + kGolden) ^ (stream_id * 0xda942042e4dd58b5ULL))),
          counter_(0) {}

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream_id() const noexcept { return stream_id_; }

    std::uint64_t next_u64() noexcept {
        return mix64(key_ + counter_++ * kGolden);
    }

    // Uniform in [0, 1) with 53 bits of precision.
    double next_unit() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double next_uniform(double lo, double hi) {
        if (!(lo < hi))
            throw std::invalid_argument("next_uniform: requires lo < hi");
        return lo + (hi - lo) * next_unit();
    }

private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::uint64_t key_;
    std::uint64_t counter_;
};

// Stream id layout: topology index in the high 32 bits, run index in the
// low 32 bits. The mapping is bijective for indices below 2^32.
inline Stream derive_stream(std::uint64_t seed, std::uint64_t topology_index,
                            std::uint64_t run_index) {
    const std::uint64_t stream_id = (topology_index << 32) | (run_index & 0xffffffffULL);
    return Stream(seed, stream_id);
}

}  // namespace resbench::rng
