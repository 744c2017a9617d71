#ifndef TORICCHAR_RNG_HPP
#define TORICCHAR_RNG_HPP

#include <cstdint>
#include <random>

namespace toricchar {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Deterministic seeded generator. All randomness in the library flows
/// through explicit SeededRng values; the engine (mt19937_64) is fully
/// specified by the standard, so runs are reproducible across platforms.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t next() { return gen_(); }

    /// value in [0, n)
    std::uint64_t below(std::uint64_t n) { return gen_() % n; }

    /// an independent stream, deterministically derived from this one's seed
    SeededRng derive(std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0) const {
        std::uint64_t s = seed_;
        s = splitmix64(s ^ splitmix64(a));
        s = splitmix64(s ^ splitmix64(b + 0x1234abcdULL));
        s = splitmix64(s ^ splitmix64(c + 0x9876ef01ULL));
        return SeededRng(s);
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

} // namespace toricchar

#endif
