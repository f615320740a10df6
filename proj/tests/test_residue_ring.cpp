#include <doctest.h>

#include <random>

#include "rrnht/residue_ring.hpp"

using namespace rrnht;

TEST_CASE("ring construction validates the modulus") {
    CHECK_THROWS_AS(RingContext(0), Error);
    CHECK_THROWS_AS(RingContext(1), Error);
    CHECK_NOTHROW(RingContext(2));
    CHECK_NOTHROW(RingContext(RingContext::kMaxModulus));
    CHECK_THROWS_AS(RingContext(RingContext::kMaxModulus + 1), Error);
}

TEST_CASE("primality flag") {
    CHECK(RingContext(2).is_prime_modulus());
    CHECK(RingContext(3).is_prime_modulus());
    CHECK(RingContext(47).is_prime_modulus());
    CHECK_FALSE(RingContext(4).is_prime_modulus());
    CHECK_FALSE(RingContext(46).is_prime_modulus());
    CHECK_FALSE(RingContext(1000000).is_prime_modulus());
    CHECK(RingContext(2147483647).is_prime_modulus());  // 2^31 - 1
}

TEST_CASE("reduce maps onto the canonical representative") {
    const RingContext ring(47);
    CHECK(reduce(55, ring).value() == 8);
    CHECK(reduce(0, ring).value() == 0);
    CHECK(reduce(-11, ring).value() == 36);
    CHECK(reduce(47, ring).value() == 0);
    CHECK(reduce(-47, ring).value() == 0);
    CHECK(reduce(-48, ring).value() == 46);
}

TEST_CASE("mod_mul matches the worked values") {
    const RingContext ring(47);
    CHECK(mod_mul(Residue(5, ring), Residue(32, ring)).value() == 19);  // 160 mod 47
    CHECK(mod_mul(Residue(1, ring), Residue(33, ring)).value() == 33);
    CHECK(mod_mul(Residue(0, ring), Residue(33, ring)).value() == 0);
}

TEST_CASE("mod_mul rejects mixed rings") {
    const RingContext a(47), b(46);
    CHECK_THROWS_AS(mod_mul(Residue(3, a), Residue(3, b)), RingMismatchError);
    CHECK_THROWS_AS(mod_add(Residue(3, a), Residue(3, b)), RingMismatchError);
    CHECK_THROWS_AS(mod_sub(Residue(3, a), Residue(3, b)), RingMismatchError);
}

TEST_CASE("mod_inv via extended Euclid") {
    const RingContext ring(47);
    CHECK(mod_inv(Residue(24, ring)).value() == 2);  // 24 * 2 = 48 = 1 mod 47
    CHECK(mod_inv(Residue(1, ring)).value() == 1);
    CHECK_THROWS_AS(mod_inv(Residue(2, RingContext(4))), NotInvertibleError);
    CHECK_THROWS_AS(mod_inv(Residue(0, ring)), NotInvertibleError);
}

TEST_CASE("products commute and reduce round-trips against wide arithmetic") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t q = 2 + rng() % 100000;
        const RingContext ring(q);
        const std::uint64_t a = rng() % q;
        const std::uint64_t b = rng() % q;
        CHECK(mod_mul(Residue(a, ring), Residue(b, ring)).value() ==
              mod_mul(Residue(b, ring), Residue(a, ring)).value());

        const std::int64_t x = static_cast<std::int64_t>(rng());
        const std::uint64_t r = reduce(x, ring).value();
        CHECK(r < q);
        // r == x mod q, checked in 128-bit signed arithmetic
        const __int128 diff = static_cast<__int128>(x) - static_cast<__int128>(r);
        CHECK(diff % static_cast<__int128>(q) == 0);
        CHECK(reduce(x, ring).value() ==
              reduce(x + static_cast<std::int64_t>(q), ring).value());
    }
}

TEST_CASE("inverses multiply back to one whenever gcd is 1") {
    std::mt19937_64 rng(11);
    int checked = 0;
    while (checked < 500) {
        const std::uint64_t q = 2 + rng() % 100000;
        const std::uint64_t a = rng() % q;
        if (gcd_u64(a, q) != 1) continue;
        const RingContext ring(q);
        const Residue inv = mod_inv(Residue(a, ring));
        CHECK(mod_mul(Residue(a, ring), inv).value() == 1);
        ++checked;
    }
}
