#pragma once

#include <cstdint>
#include <limits>

#include "rrnht/errors.hpp"

namespace rrnht {

/// The ring Z_q: a modulus plus the arithmetic rules everything else builds on.
///
/// Values are immutable after construction. The modulus is capped at 2^32-1 so
/// that any product of two canonical residues fits in a 64-bit intermediate.
class RingContext {
public:
    static constexpr std::uint64_t kMaxModulus =
        std::numeric_limits<std::uint32_t>::max();

    explicit RingContext(std::uint64_t modulus);

    std::uint64_t modulus() const noexcept { return modulus_; }
    bool is_prime_modulus() const noexcept { return is_prime_; }

    friend bool operator==(const RingContext& a, const RingContext& b) noexcept {
        return a.modulus_ == b.modulus_;
    }
    friend bool operator!=(const RingContext& a, const RingContext& b) noexcept {
        return !(a == b);
    }

private:
    std::uint64_t modulus_;
    bool is_prime_;
};

/// One canonical residue: value in [0, q) together with its ring.
class Residue {
public:
    Residue(std::uint64_t value, const RingContext& ring)
        : value_(value % ring.modulus()), ring_(ring) {}

    std::uint64_t value() const noexcept { return value_; }
    const RingContext& ring() const noexcept { return ring_; }

    friend bool operator==(const Residue& a, const Residue& b) noexcept {
        return a.ring_ == b.ring_ && a.value_ == b.value_;
    }
    friend bool operator!=(const Residue& a, const Residue& b) noexcept {
        return !(a == b);
    }

private:
    std::uint64_t value_;
    RingContext ring_;
};

/// Least nonnegative representative of x mod q; negative inputs land in [0, q).
Residue reduce(std::int64_t x, const RingContext& ring);

Residue mod_add(const Residue& a, const Residue& b);
Residue mod_sub(const Residue& a, const Residue& b);
Residue mod_mul(const Residue& a, const Residue& b);

/// Multiplicative inverse via extended Euclid.
/// Throws NotInvertibleError when gcd(a, q) != 1.
Residue mod_inv(const Residue& a);

// Raw-value variants used by the hot loops; q must be a valid modulus and the
// operands canonical residues of that ring.
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) noexcept {
    return (a * b) % q;
}
inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) noexcept {
    return (a + b) % q;
}

std::uint64_t reduce_signed(std::int64_t x, std::uint64_t q) noexcept;
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t q);  // NotInvertibleError
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept;

}  // namespace rrnht
