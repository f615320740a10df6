#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rrnht/rr_sequence.hpp"

namespace rrnht {

/// A length-K block of residues, the thing the transform acts on.
/// Entries may be zero; inputs are reduced into the ring on construction.
class BlockVector {
public:
    BlockVector(const RingContext& ring, std::vector<std::uint64_t> entries);

    const RingContext& ring() const noexcept { return ring_; }
    std::size_t size() const noexcept { return entries_.size(); }
    const std::vector<std::uint64_t>& values() const noexcept { return entries_; }
    std::uint64_t at(std::size_t i) const { return entries_.at(i); }

    friend bool operator==(const BlockVector& a, const BlockVector& b) noexcept {
        return a.ring_ == b.ring_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const BlockVector& a, const BlockVector& b) noexcept {
        return !(a == b);
    }

private:
    RingContext ring_;
    std::vector<std::uint64_t> entries_;
};

/// The 2n x 2n circulant transform built from an ideal sequence: the first row
/// interleaves the sequence with zeros, [a0, 0, a1, 0, ..., a_{n-1}, 0], and
/// row i is the right cyclic shift of row 0 by i. Rows are never materialized;
/// entry(i, j) reads the circulant directly.
///
/// For an ideal source, N * N^T = C(0) * I mod q: odd row offsets vanish
/// because zeros interleave, and even offset 2m reduces to the source's C(m).
class NHTMatrix {
public:
    /// Shape-checked construction from an explicit first row (even size,
    /// alternating nonzero/zero starting nonzero). Ideality of the implied
    /// source sequence is NOT checked here; see build_nht for the checked path.
    NHTMatrix(const RingContext& ring, std::vector<std::uint64_t> first_row);

    const RingContext& ring() const noexcept { return ring_; }
    std::size_t size() const noexcept { return first_row_.size(); }  // K = 2n
    const std::vector<std::uint64_t>& first_row() const noexcept { return first_row_; }

    /// The generating sequence (the nonzero entries of the first row).
    const RRSequence& source() const noexcept { return source_; }

    std::uint64_t entry(std::size_t row, std::size_t col) const {
        const std::size_t k = size();
        return first_row_[(col % k + k - row % k) % k];
    }

private:
    RingContext ring_;
    std::vector<std::uint64_t> first_row_;
    RRSequence source_;
};

/// Build the transform from a sequence, requiring ideal autocorrelation
/// (otherwise the transpose would not invert it). Throws NotIdealError.
NHTMatrix build_nht(const RRSequence& seq);

/// Densely verify N * N^T = k * I mod q and return k (= source C(0)).
/// Throws OrthogonalityError with the first offending (row, col) otherwise.
Residue verify_orthogonality(const NHTMatrix& m);

/// G = N * F mod q.
BlockVector forward(const NHTMatrix& m, const BlockVector& f);

/// F = k^{-1} * N^T * G mod q with k the orthogonality scale; the k^{-1}
/// factor makes inverse(forward(f)) == f exactly.
BlockVector inverse(const NHTMatrix& m, const BlockVector& g);

}  // namespace rrnht
