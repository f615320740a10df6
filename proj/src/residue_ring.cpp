#include "rrnht/residue_ring.hpp"

#include <string>

namespace rrnht {

namespace {

// Trial division is plenty at this word size (sqrt(q) <= 65536).
bool is_prime(std::uint64_t q) noexcept {
    if (q < 2) return false;
    if (q % 2 == 0) return q == 2;
    for (std::uint64_t d = 3; d * d <= q; d += 2) {
        if (q % d == 0) return false;
    }
    return true;
}

void require_same_ring(const Residue& a, const Residue& b) {
    if (a.ring() != b.ring()) {
        throw RingMismatchError("operands live in different rings: mod " +
                                std::to_string(a.ring().modulus()) + " vs mod " +
                                std::to_string(b.ring().modulus()));
    }
}

}  // namespace

RingContext::RingContext(std::uint64_t modulus) : modulus_(modulus) {
    if (modulus < 2) {
        throw Error("modulus must be at least 2, got " + std::to_string(modulus));
    }
    if (modulus > kMaxModulus) {
        throw Error("modulus " + std::to_string(modulus) + " exceeds the supported maximum " +
                    std::to_string(kMaxModulus));
    }
    is_prime_ = is_prime(modulus);
}

std::uint64_t reduce_signed(std::int64_t x, std::uint64_t q) noexcept {
    const std::int64_t m = static_cast<std::int64_t>(q);
    std::int64_t r = x % m;
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
}

Residue reduce(std::int64_t x, const RingContext& ring) {
    return Residue(reduce_signed(x, ring.modulus()), ring);
}

Residue mod_add(const Residue& a, const Residue& b) {
    require_same_ring(a, b);
    return Residue(add_mod(a.value(), b.value(), a.ring().modulus()), a.ring());
}

Residue mod_sub(const Residue& a, const Residue& b) {
    require_same_ring(a, b);
    const std::uint64_t q = a.ring().modulus();
    return Residue((a.value() + q - b.value()) % q, a.ring());
}

Residue mod_mul(const Residue& a, const Residue& b) {
    require_same_ring(a, b);
    return Residue(mul_mod(a.value(), b.value(), a.ring().modulus()), a.ring());
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept {
    while (b != 0) {
        const std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t q) {
    // Extended Euclid; track only the coefficient of a.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(q), new_r = static_cast<std::int64_t>(a % q);
    while (new_r != 0) {
        const std::int64_t quot = r / new_r;
        std::int64_t tmp = t - quot * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quot * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) {
        throw NotInvertibleError(std::to_string(a) + " is not invertible mod " +
                                 std::to_string(q) + " (gcd " + std::to_string(r) + ")");
    }
    if (t < 0) t += static_cast<std::int64_t>(q);
    return static_cast<std::uint64_t>(t);
}

Residue mod_inv(const Residue& a) {
    return Residue(inverse_mod(a.value(), a.ring().modulus()), a.ring());
}

}  // namespace rrnht
