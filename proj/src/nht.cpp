#include "rrnht/nht.hpp"

#include <string>
#include <utility>

namespace rrnht {

namespace {

std::vector<std::uint64_t> validated_first_row(const RingContext& ring,
                                               std::vector<std::uint64_t> first_row) {
    const std::size_t k = first_row.size();
    if (k < 4 || k % 2 != 0) {
        throw DimensionError("first row must have even length >= 4, got " +
                             std::to_string(k));
    }
    const std::uint64_t q = ring.modulus();
    for (std::size_t i = 0; i < k; ++i) {
        if (first_row[i] >= q) {
            throw Error("first-row entry " + std::to_string(i) +
                        " is not a canonical residue mod " + std::to_string(q));
        }
        const bool should_be_zero = (i % 2 == 1);
        if (should_be_zero != (first_row[i] == 0)) {
            throw Error("first row must alternate nonzero, zero, ... starting nonzero; "
                        "entry " + std::to_string(i) + " breaks the pattern");
        }
    }
    return first_row;
}

RRSequence source_from_first_row(const RingContext& ring,
                                 const std::vector<std::uint64_t>& first_row) {
    std::vector<std::uint64_t> values;
    values.reserve(first_row.size() / 2);
    for (std::size_t i = 0; i < first_row.size(); i += 2) {
        values.push_back(first_row[i]);
    }
    return RRSequence(ring, std::move(values));
}

}  // namespace

BlockVector::BlockVector(const RingContext& ring, std::vector<std::uint64_t> entries)
    : ring_(ring), entries_(std::move(entries)) {
    const std::uint64_t q = ring_.modulus();
    for (auto& e : entries_) {
        e %= q;
    }
}

NHTMatrix::NHTMatrix(const RingContext& ring, std::vector<std::uint64_t> first_row)
    : ring_(ring),
      first_row_(validated_first_row(ring, std::move(first_row))),
      source_(source_from_first_row(ring, first_row_)) {}

NHTMatrix build_nht(const RRSequence& seq) {
    const IdealityReport report = is_ideal(seq);
    if (!report.is_ideal) {
        std::string why = report.peak_invertible
                              ? std::to_string(report.offenders.size()) +
                                    " off-peak lag(s) nonzero"
                              : "peak " + std::to_string(report.peak) +
                                    " not invertible mod " +
                                    std::to_string(seq.ring().modulus());
        throw NotIdealError("sequence is not ideal (" + why +
                            "); transpose would not invert the transform");
    }
    std::vector<std::uint64_t> first_row(2 * seq.size(), 0);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        first_row[2 * i] = seq.values()[i];
    }
    return NHTMatrix(seq.ring(), std::move(first_row));
}

Residue verify_orthogonality(const NHTMatrix& m) {
    const std::size_t k = m.size();
    const std::uint64_t q = m.ring().modulus();

    // Dense check of every entry of N * N^T; rows read off the circulant.
    std::uint64_t scale = 0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            std::uint64_t dot = 0;
            for (std::size_t t = 0; t < k; ++t) {
                dot = (dot + m.entry(i, t) * m.entry(j, t)) % q;
            }
            if (i == j) {
                if (i == 0) {
                    scale = dot;
                } else if (dot != scale) {
                    throw OrthogonalityError(
                        "diagonal entry (" + std::to_string(i) + ", " + std::to_string(i) +
                            ") = " + std::to_string(dot) + " differs from " +
                            std::to_string(scale),
                        i, i);
                }
            } else if (dot != 0) {
                throw OrthogonalityError(
                    "off-diagonal entry (" + std::to_string(i) + ", " + std::to_string(j) +
                        ") = " + std::to_string(dot) + " is nonzero",
                    i, j);
            }
        }
    }
    return Residue(scale, m.ring());
}

namespace {

void require_compatible(const NHTMatrix& m, const BlockVector& v, const char* what) {
    if (m.ring() != v.ring()) {
        throw RingMismatchError(std::string(what) + ": vector ring does not match matrix ring");
    }
    if (m.size() != v.size()) {
        throw DimensionError(std::string(what) + ": vector length " +
                             std::to_string(v.size()) + " vs matrix size " +
                             std::to_string(m.size()));
    }
}

}  // namespace

BlockVector forward(const NHTMatrix& m, const BlockVector& f) {
    require_compatible(m, f, "forward");
    const std::size_t k = m.size();
    const std::uint64_t q = m.ring().modulus();
    const auto& row0 = m.first_row();
    const auto& in = f.values();

    std::vector<std::uint64_t> out(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t t = 0; t < k; ++t) {
            acc = (acc + row0[(t + k - i) % k] * in[t]) % q;
        }
        out[i] = acc;
    }
    return BlockVector(m.ring(), std::move(out));
}

BlockVector inverse(const NHTMatrix& m, const BlockVector& g) {
    require_compatible(m, g, "inverse");
    const std::size_t k = m.size();
    const std::uint64_t q = m.ring().modulus();
    const auto& row0 = m.first_row();
    const auto& in = g.values();

    const std::uint64_t scale = circular_autocorrelation(m.source(), 0).value();
    const std::uint64_t scale_inv = inverse_mod(scale, q);

    std::vector<std::uint64_t> out(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t t = 0; t < k; ++t) {
            // N^T(i, t) = N(t, i)
            acc = (acc + row0[(i + k - t) % k] * in[t]) % q;
        }
        out[i] = acc * scale_inv % q;
    }
    return BlockVector(m.ring(), std::move(out));
}

}  // namespace rrnht
