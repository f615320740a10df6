#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rrnht/nht.hpp"

using namespace rrnht;

namespace {

RRSequence toy_seq() { return RRSequence(RingContext(7), {1, 1, 6, 1}); }

RRSequence worked_seq() {
    return RRSequence(RingContext(oracle::kWorkedModulus), oracle::worked_sequence());
}

BlockVector random_block(std::mt19937_64& rng, const RingContext& ring,
                         std::size_t k) {
    std::vector<std::uint64_t> v(k);
    for (auto& x : v) x = rng() % ring.modulus();
    return BlockVector(ring, std::move(v));
}

}  // namespace

TEST_CASE("construction interleaves the sequence with zeros") {
    const NHTMatrix toy = build_nht(toy_seq());
    CHECK(toy.size() == 8);
    CHECK(toy.first_row() ==
          std::vector<std::uint64_t>{1, 0, 1, 0, 6, 0, 1, 0});
    CHECK(toy.source() == toy_seq());

    const NHTMatrix big = build_nht(worked_seq());
    CHECK(big.size() == 32);
}

TEST_CASE("non-ideal sequences are refused") {
    CHECK_THROWS_AS(build_nht(RRSequence(RingContext(7), {1, 1})), NotIdealError);
}

TEST_CASE("first-row shape is validated") {
    const RingContext q7(7);
    CHECK_THROWS_AS(NHTMatrix(q7, {1, 0}), DimensionError);          // too short
    CHECK_THROWS_AS(NHTMatrix(q7, {1, 0, 1, 0, 6, 0, 1}), DimensionError);  // odd
    CHECK_THROWS_AS(NHTMatrix(q7, {1, 0, 0, 0, 6, 0, 1, 0}), Error);  // zero at even
    CHECK_THROWS_AS(NHTMatrix(q7, {1, 0, 1, 2, 6, 0, 1, 0}), Error);  // nonzero at odd
    CHECK_NOTHROW(NHTMatrix(q7, {1, 0, 1, 0, 6, 0, 1, 0}));
}

TEST_CASE("rows follow the circulant right-shift rule") {
    const NHTMatrix m = build_nht(toy_seq());
    const auto rows = oracle::circulant_rows(m.first_row());
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            CHECK(m.entry(i, j) == rows[i][j]);
        }
    }
}

TEST_CASE("orthogonality scale equals the source peak") {
    CHECK(verify_orthogonality(build_nht(worked_seq())).value() == 24);
    CHECK(verify_orthogonality(build_nht(toy_seq())).value() == 4);
}

TEST_CASE("a corrupted entry is detected") {
    // Valid shape, but the source [1,1,5,1] mod 7 is not ideal: tampering one
    // first-row value must break some off-diagonal product.
    const NHTMatrix tampered(RingContext(7), {1, 0, 1, 0, 5, 0, 1, 0});
    CHECK_THROWS_AS(verify_orthogonality(tampered), OrthogonalityError);
    try {
        verify_orthogonality(tampered);
    } catch (const OrthogonalityError& e) {
        CHECK(e.row() != e.col());  // first failure is an off-diagonal entry
    }
}

TEST_CASE("forward transform basics") {
    const NHTMatrix m = build_nht(toy_seq());
    const RingContext& ring = m.ring();

    SUBCASE("zero maps to zero") {
        const BlockVector zero(ring, std::vector<std::uint64_t>(8, 0));
        CHECK(forward(m, zero) == zero);
    }
    SUBCASE("unit vector reads off the first column") {
        std::vector<std::uint64_t> e0(8, 0);
        e0[0] = 1;
        const BlockVector g = forward(m, BlockVector(ring, e0));
        for (std::size_t i = 0; i < 8; ++i) {
            CHECK(g.at(i) == m.entry(i, 0));
        }
    }
    SUBCASE("all-ones sums the sequence in every row") {
        const BlockVector ones(ring, std::vector<std::uint64_t>(8, 1));
        const BlockVector g = forward(m, ones);
        for (std::size_t i = 0; i < 8; ++i) {
            CHECK(g.at(i) == 2);  // (1 + 1 + 6 + 1) mod 7
        }
    }
    SUBCASE("dimension and ring mismatches are rejected") {
        CHECK_THROWS_AS(forward(m, BlockVector(ring, {1, 2, 3, 4})), DimensionError);
        CHECK_THROWS_AS(
            forward(m, BlockVector(RingContext(11), std::vector<std::uint64_t>(8, 1))),
            RingMismatchError);
    }
}

TEST_CASE("inverse undoes forward") {
    const NHTMatrix m = build_nht(worked_seq());
    std::mt19937_64 rng(42);
    for (int i = 0; i < 25; ++i) {
        const BlockVector f = random_block(rng, m.ring(), m.size());
        CHECK(inverse(m, forward(m, f)) == f);
    }

    const NHTMatrix toy = build_nht(toy_seq());
    std::vector<std::uint64_t> e0(8, 0);
    e0[0] = 1;
    const BlockVector basis(toy.ring(), e0);
    CHECK(inverse(toy, forward(toy, basis)) == basis);

    const BlockVector zero(toy.ring(), std::vector<std::uint64_t>(8, 0));
    CHECK(inverse(toy, zero) == zero);
}

TEST_CASE("forward is linear") {
    const NHTMatrix m = build_nht(toy_seq());
    const std::uint64_t q = m.ring().modulus();
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        const BlockVector f1 = random_block(rng, m.ring(), m.size());
        const BlockVector f2 = random_block(rng, m.ring(), m.size());
        const std::uint64_t a = rng() % q;

        std::vector<std::uint64_t> combo(m.size());
        for (std::size_t j = 0; j < m.size(); ++j) {
            combo[j] = (a * f1.at(j) + f2.at(j)) % q;
        }
        const BlockVector lhs = forward(m, BlockVector(m.ring(), combo));

        const BlockVector g1 = forward(m, f1);
        const BlockVector g2 = forward(m, f2);
        for (std::size_t j = 0; j < m.size(); ++j) {
            CHECK(lhs.at(j) == (a * g1.at(j) + g2.at(j)) % q);
        }
    }
}

TEST_CASE("forward commutes with cyclic rotation") {
    const NHTMatrix m = build_nht(toy_seq());
    const std::size_t k = m.size();
    std::mt19937_64 rng(8);
    for (int i = 0; i < 50; ++i) {
        const BlockVector f = random_block(rng, m.ring(), k);
        const std::size_t s = rng() % k;

        // Right-rotate input by s.
        std::vector<std::uint64_t> rotated(k);
        for (std::size_t j = 0; j < k; ++j) {
            rotated[j] = f.at((j + k - s) % k);
        }
        const BlockVector lhs = forward(m, BlockVector(m.ring(), rotated));
        const BlockVector g = forward(m, f);
        for (std::size_t j = 0; j < k; ++j) {
            CHECK(lhs.at(j) == g.at((j + k - s) % k));
        }
    }
}

TEST_CASE("dense gram check against the oracle for sizes up to 64") {
    std::mt19937_64 rng(17);
    // Ideal sources at hand: every length-4 find mod 7 plus the worked example.
    const auto ideals = oracle::enumerate_ideal(4, 7);
    for (std::size_t i = 0; i < ideals.size(); i += 9) {
        const NHTMatrix m = build_nht(RRSequence(RingContext(7), ideals[i]));
        const auto gram = oracle::gram_matrix(oracle::circulant_rows(m.first_row()), 7);
        const std::uint64_t scale = verify_orthogonality(m).value();
        for (std::size_t r = 0; r < m.size(); ++r) {
            for (std::size_t c = 0; c < m.size(); ++c) {
                CHECK(gram[r][c] == (r == c ? scale : 0));
            }
        }
    }
}
