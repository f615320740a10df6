#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "rrnht/residue_ring.hpp"

namespace rrnht {

/// A sequence of nonzero residues mod q, the candidate spreading code.
///
/// Construction enforces the representation invariants (length >= 2, every
/// value canonical and nonzero); whether the sequence actually has ideal
/// circular autocorrelation is a separate check, see is_ideal().
class RRSequence {
public:
    RRSequence(const RingContext& ring, std::vector<std::uint64_t> values);

    /// Same as the constructor but reduces arbitrary nonnegative integers into
    /// the ring first. Still rejects entries that reduce to zero.
    static RRSequence from_integers(const RingContext& ring,
                                    std::span<const std::uint64_t> raw);

    const RingContext& ring() const noexcept { return ring_; }
    std::size_t size() const noexcept { return values_.size(); }
    const std::vector<std::uint64_t>& values() const noexcept { return values_; }
    std::uint64_t at(std::size_t i) const { return values_.at(i); }
    Residue residue_at(std::size_t i) const { return Residue(values_.at(i), ring_); }

    friend bool operator==(const RRSequence& a, const RRSequence& b) noexcept {
        return a.ring_ == b.ring_ && a.values_ == b.values_;
    }
    friend bool operator!=(const RRSequence& a, const RRSequence& b) noexcept {
        return !(a == b);
    }

private:
    RingContext ring_;
    std::vector<std::uint64_t> values_;
};

/// Outcome of the ideality check: the lag-0 peak plus every off-peak lag whose
/// correlation failed to vanish. is_ideal holds iff offenders is empty and the
/// peak is invertible mod q.
struct IdealityReport {
    bool is_ideal = false;
    bool peak_invertible = false;
    std::uint64_t peak = 0;  // C(0) mod q
    std::vector<std::pair<std::size_t, std::uint64_t>> offenders;  // (lag, C(lag) mod q)
};

/// Cyclic autocorrelation C(k) = sum_j a(j) * a((j+k) mod n), reduced mod q.
/// Unnormalized: the usual 1/N factor is not generally defined in the ring and
/// cannot change which lags are zero. Throws Error when lag >= n.
Residue circular_autocorrelation(const RRSequence& seq, std::size_t lag);

/// The same sum over the plain integers, no reduction. Oracle for
/// discover_moduli. Throws on lag out of range or uint64 overflow.
std::uint64_t integer_autocorrelation(std::span<const std::uint64_t> values,
                                      std::size_t lag);

/// Scans C(k) for k in [1, n) using the C(k) = C(n-k) symmetry to halve the
/// work, and checks that C(0) is invertible. A failing sequence yields a
/// report listing all offending lags, not an exception.
IdealityReport is_ideal(const RRSequence& seq);

enum class ShiftDirection { kLeft, kRight };

/// Cyclic rotation; amount is reduced mod n, right by s equals left by n-s.
RRSequence circular_shift(const RRSequence& seq, std::uint64_t amount,
                          ShiftDirection direction);

/// Normalize a (direction, amount) pair to the canonical left-shift in [0, n).
std::size_t normalize_shift(std::uint64_t amount, ShiftDirection direction,
                            std::size_t n) noexcept;

/// sum_j a(j) * b((j+lag) mod n) mod q. Lag is reduced mod n.
/// Throws on length or ring mismatch.
Residue cross_correlation_at_lag(const RRSequence& a, const RRSequence& b,
                                 std::uint64_t lag);

/// Propose moduli under which an integer sequence becomes ideal: divisors
/// d >= 2 of g = gcd_{k=1..ceil(n/2)} C_int(k) with gcd(C_int(0), d) = 1 and
/// every value nonzero mod d, ascending, at most max_divisors of them.
/// g <= 1 yields an empty list.
std::vector<std::uint64_t> discover_moduli(std::span<const std::uint64_t> values,
                                           std::size_t max_divisors = 64);

enum class SearchStrategy { kExhaustive, kRandomized };

struct SearchOptions {
    SearchStrategy strategy = SearchStrategy::kExhaustive;
    std::uint64_t seed = 0;            // randomized only
    std::size_t max_results = 16;
    std::uint64_t max_trials = 100000; // randomized only
    std::uint64_t budget = 100000000;  // exhaustive candidate cap
};

struct SearchOutcome {
    std::vector<RRSequence> sequences;
    std::uint64_t trials = 0;  // candidates evaluated
};

/// Find ideal sequences of the given length over the ring.
///
/// Exhaustive enumerates [1, q)^n in lexicographic order (BudgetError if that
/// exceeds opts.budget) and returns every ideal tuple up to max_results.
/// Randomized draws seeded uniform tuples and returns the distinct ideal
/// finds; deterministic given (strategy, seed, budgets).
SearchOutcome search_sequences(std::size_t length, const RingContext& ring,
                               const SearchOptions& opts);

}  // namespace rrnht
