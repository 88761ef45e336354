#ifndef SYZKIT_PRIME_FIELD_HPP
#define SYZKIT_PRIME_FIELD_HPP

#include <cstdint>
#include <limits>
#include <string>

#include "syzkit/errors.hpp"

namespace syzkit {

// Canonical residue in [0, p). All arithmetic goes through PrimeField.
using FieldElem = std::uint32_t;

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) acc = mulmod_u64(acc, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return acc;
}

// Deterministic Miller-Rabin; the witness set {2,3,5,7} decides primality
// for every n < 3'215'031'751, which covers the whole permitted range.
inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint32_t a : {2u, 3u, 5u, 7u}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

} // namespace detail

// Arithmetic context modulo a prime p with 2 < p < 2^31. Elements are plain
// uint32 residues; products are accumulated in 64 bits by the callers, with
// mac_block() bounding how many a*b terms fit before a reduction is due.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (p <= 2 || p >= (1u << 31))
            throw validation_error("field modulus out of range (need 2 < p < 2^31): " + std::to_string(p));
        if (!detail::is_prime_u32(p))
            throw validation_error("field modulus is not prime: " + std::to_string(p));
        // a 64-bit accumulator may start at p-1 and then absorb block_
        // products of size (p-1)^2 without overflowing
        const std::uint64_t sq = static_cast<std::uint64_t>(p - 1) * (p - 1);
        block_ = static_cast<std::size_t>((std::numeric_limits<std::uint64_t>::max() - (p - 1)) / sq);
    }

    std::uint32_t modulus() const { return p_; }

    // number of (p-1)^2 products a 64-bit accumulator can absorb
    std::size_t mac_block() const { return block_; }

    FieldElem reduce(std::uint64_t v) const { return static_cast<FieldElem>(v % p_); }

    FieldElem from_int64(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<FieldElem>(r);
    }

    FieldElem add(FieldElem a, FieldElem b) const {
        std::uint64_t s = static_cast<std::uint64_t>(a) + b;
        if (s >= p_) s -= p_;
        return static_cast<FieldElem>(s);
    }

    FieldElem sub(FieldElem a, FieldElem b) const {
        return a >= b ? a - b : static_cast<FieldElem>(a + p_ - b);
    }

    FieldElem neg(FieldElem a) const { return a == 0 ? 0 : p_ - a; }

    FieldElem mul(FieldElem a, FieldElem b) const {
        return static_cast<FieldElem>(static_cast<std::uint64_t>(a) * b % p_);
    }

    FieldElem pow(FieldElem a, std::uint64_t e) const {
        return static_cast<FieldElem>(detail::powmod_u64(a, e, p_));
    }

    FieldElem inv(FieldElem a) const {
        if (a == 0) throw validation_error("division by zero in GF(" + std::to_string(p_) + ")");
        // extended Euclid
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = p_, new_r = a;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t; new_t = tmp;
            tmp = r - q * new_r;
            r = new_r; new_r = tmp;
        }
        if (t < 0) t += p_;
        return static_cast<FieldElem>(t);
    }

    FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

private:
    std::uint32_t p_;
    std::size_t block_;
};

} // namespace syzkit

#endif
