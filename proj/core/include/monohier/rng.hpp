#ifndef MONOHIER_RNG_HPP
#define MONOHIER_RNG_HPP

#include <cstdint>

namespace monohier {

/// Counter-based 64-bit generator (splitmix64): the k-th draw is a pure
/// function of the seed, so corpora are identical across platforms and
/// implementations. Intended for reproducible test corpora, not statistics.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [0, bound); modulo bias is irrelevant here.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

} // namespace monohier

#endif
