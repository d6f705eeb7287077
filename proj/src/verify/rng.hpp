#pragma once

#include <cstdint>

namespace rbt {

// splitmix64 (Steele & Vigna). Chosen because the whole algorithm fits in
// four lines, so runs reproduce bit-for-bit on any platform; reports name it
// so a reader can regenerate streams elsewhere.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Bounded draw by modulo: the slight bias is irrelevant here and keeps
    // the reduction portable.
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

    static constexpr const char* name() { return "splitmix64"; }

private:
    std::uint64_t state_;
};

}  // namespace rbt
