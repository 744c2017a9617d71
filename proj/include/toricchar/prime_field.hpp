#ifndef TORICCHAR_PRIME_FIELD_HPP
#define TORICCHAR_PRIME_FIELD_HPP

#include <cstdint>
#include <string>

#include "toricchar/errors.hpp"
#include "toricchar/rng.hpp"

namespace toricchar {

/// GF(p) for an odd prime p < 2^31. Elements are canonical residues in
/// [0, p). The default modulus 32749 keeps scalar draws "general" with
/// overwhelming probability while avoiding coefficient growth.
class PrimeField {
public:
    static constexpr std::uint32_t kDefaultPrime = 32749;

    explicit PrimeField(std::uint32_t p = kDefaultPrime) : p_(p) {
        if (p < 3 || !is_prime(p))
            throw Error("PrimeField: modulus " + std::to_string(p) + " is not an odd prime");
    }

    std::uint32_t p() const { return p_; }

    std::uint32_t reduce_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<std::uint32_t>(r);
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        if (s >= p_) s -= p_;
        return s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw Error("PrimeField: inverse of zero");
        // extended Euclid
        long long t = 0, nt = 1, r = p_, nr = a;
        while (nr != 0) {
            long long q = r / nr;
            long long tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += p_;
        return static_cast<std::uint32_t>(t);
    }

    std::uint32_t random_nonzero(SeededRng& rng) const {
        return 1 + static_cast<std::uint32_t>(rng.below(p_ - 1));
    }
    std::uint32_t random(SeededRng& rng) const {
        return static_cast<std::uint32_t>(rng.below(p_));
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    static bool is_prime(std::uint32_t n) {
        if (n % 2 == 0) return n == 2;
        for (std::uint64_t d = 3; d * d <= n; d += 2)
            if (n % d == 0) return false;
        return true;
    }

    std::uint32_t p_;
};

} // namespace toricchar

#endif
