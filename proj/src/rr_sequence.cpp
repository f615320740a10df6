#include "rrnht/rr_sequence.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "rrnht/rng.hpp"

namespace rrnht {

RRSequence::RRSequence(const RingContext& ring, std::vector<std::uint64_t> values)
    : ring_(ring), values_(std::move(values)) {
    if (values_.size() < 2) {
        throw Error("sequence needs at least 2 entries, got " +
                    std::to_string(values_.size()));
    }
    const std::uint64_t q = ring_.modulus();
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] == 0) {
            throw Error("sequence entry " + std::to_string(i) + " is zero mod " +
                        std::to_string(q));
        }
        if (values_[i] >= q) {
            throw Error("sequence entry " + std::to_string(i) + " = " +
                        std::to_string(values_[i]) + " is not a canonical residue mod " +
                        std::to_string(q));
        }
    }
}

RRSequence RRSequence::from_integers(const RingContext& ring,
                                     std::span<const std::uint64_t> raw) {
    std::vector<std::uint64_t> reduced(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        reduced[i] = raw[i] % ring.modulus();
    }
    return RRSequence(ring, std::move(reduced));
}

Residue circular_autocorrelation(const RRSequence& seq, std::size_t lag) {
    const std::size_t n = seq.size();
    if (lag >= n) {
        throw Error("lag " + std::to_string(lag) + " out of range for length " +
                    std::to_string(n));
    }
    const std::uint64_t q = seq.ring().modulus();
    const auto& a = seq.values();
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        acc = (acc + a[j] * a[(j + lag) % n]) % q;
    }
    return Residue(acc, seq.ring());
}

std::uint64_t integer_autocorrelation(std::span<const std::uint64_t> values,
                                      std::size_t lag) {
    const std::size_t n = values.size();
    if (lag >= n) {
        throw Error("lag " + std::to_string(lag) + " out of range for length " +
                    std::to_string(n));
    }
    unsigned __int128 acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        acc += static_cast<unsigned __int128>(values[j]) * values[(j + lag) % n];
    }
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
        throw Error("integer autocorrelation overflows 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

IdealityReport is_ideal(const RRSequence& seq) {
    const std::size_t n = seq.size();
    const std::uint64_t q = seq.ring().modulus();

    IdealityReport report;
    report.peak = circular_autocorrelation(seq, 0).value();
    report.peak_invertible = gcd_u64(report.peak, q) == 1;

    // C(k) = C(n-k): scanning k <= n/2 covers every lag.
    for (std::size_t k = 1; 2 * k <= n; ++k) {
        const std::uint64_t c = circular_autocorrelation(seq, k).value();
        if (c != 0) {
            report.offenders.emplace_back(k, c);
            const std::size_t mirror = n - k;
            if (mirror != k) {
                report.offenders.emplace_back(mirror, c);
            }
        }
    }
    std::sort(report.offenders.begin(), report.offenders.end());
    report.is_ideal = report.offenders.empty() && report.peak_invertible;
    return report;
}

std::size_t normalize_shift(std::uint64_t amount, ShiftDirection direction,
                            std::size_t n) noexcept {
    const std::uint64_t s = amount % n;
    if (direction == ShiftDirection::kLeft || s == 0) {
        return static_cast<std::size_t>(s);
    }
    return static_cast<std::size_t>(n - s);
}

RRSequence circular_shift(const RRSequence& seq, std::uint64_t amount,
                          ShiftDirection direction) {
    const std::size_t n = seq.size();
    const std::size_t s = normalize_shift(amount, direction, n);
    const auto& a = seq.values();
    std::vector<std::uint64_t> rotated(n);
    for (std::size_t j = 0; j < n; ++j) {
        rotated[j] = a[(j + s) % n];
    }
    return RRSequence(seq.ring(), std::move(rotated));
}

Residue cross_correlation_at_lag(const RRSequence& a, const RRSequence& b,
                                 std::uint64_t lag) {
    if (a.ring() != b.ring()) {
        throw RingMismatchError("cross-correlation of sequences from different rings");
    }
    if (a.size() != b.size()) {
        throw DimensionError("cross-correlation needs equal lengths, got " +
                             std::to_string(a.size()) + " and " +
                             std::to_string(b.size()));
    }
    const std::size_t n = a.size();
    const std::uint64_t q = a.ring().modulus();
    const std::size_t k = static_cast<std::size_t>(lag % n);
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        acc = (acc + a.values()[j] * b.values()[(j + k) % n]) % q;
    }
    return Residue(acc, a.ring());
}

std::vector<std::uint64_t> discover_moduli(std::span<const std::uint64_t> values,
                                           std::size_t max_divisors) {
    const std::size_t n = values.size();
    if (n < 2) {
        throw Error("modulus discovery needs at least 2 values");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (values[i] == 0) {
            throw Error("modulus discovery requires positive values, entry " +
                        std::to_string(i) + " is zero");
        }
    }

    std::uint64_t g = 0;
    for (std::size_t k = 1; k <= (n + 1) / 2; ++k) {
        g = gcd_u64(g, integer_autocorrelation(values, k));
        if (g == 1) break;
    }
    if (g <= 1) return {};

    const std::uint64_t peak = integer_autocorrelation(values, 0);

    auto admissible = [&](std::uint64_t d) {
        if (d < 2 || d > RingContext::kMaxModulus) return false;
        if (gcd_u64(peak % d, d) != 1) return false;
        for (const std::uint64_t v : values) {
            if (v % d == 0) return false;
        }
        return true;
    };

    // Divisors of g in ascending order, paired small/large via sqrt sweep.
    std::set<std::uint64_t> divisors;
    for (std::uint64_t d = 1; d <= g / d; ++d) {
        if (g % d != 0) continue;
        divisors.insert(d);
        divisors.insert(g / d);
    }

    std::vector<std::uint64_t> out;
    for (const std::uint64_t d : divisors) {
        if (out.size() >= max_divisors) break;
        if (admissible(d)) out.push_back(d);
    }
    return out;
}

namespace {

// Off-peak scan with early exit; the search loops stay on raw values.
bool candidate_is_ideal(const std::vector<std::uint64_t>& a, std::uint64_t q) {
    const std::size_t n = a.size();
    for (std::size_t k = 1; 2 * k <= n; ++k) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < n; ++j) {
            acc = (acc + a[j] * a[(j + k) % n]) % q;
        }
        if (acc != 0) return false;
    }
    std::uint64_t peak = 0;
    for (std::size_t j = 0; j < n; ++j) {
        peak = (peak + a[j] * a[j]) % q;
    }
    return gcd_u64(peak, q) == 1;
}

SearchOutcome search_exhaustive(std::size_t n, const RingContext& ring,
                                const SearchOptions& opts) {
    const std::uint64_t q = ring.modulus();

    // Candidate space (q-1)^n must fit the budget before we start.
    unsigned __int128 space = 1;
    for (std::size_t i = 0; i < n; ++i) {
        space *= (q - 1);
        if (space > opts.budget) {
            throw BudgetError("exhaustive search space exceeds budget of " +
                              std::to_string(opts.budget) + " candidates");
        }
    }

    SearchOutcome out;
    std::vector<std::uint64_t> candidate(n, 1);  // lexicographically first tuple
    while (true) {
        ++out.trials;
        if (candidate_is_ideal(candidate, q)) {
            out.sequences.emplace_back(ring, candidate);
            if (out.sequences.size() >= opts.max_results) break;
        }
        // Odometer over [1, q)^n.
        std::size_t pos = n;
        while (pos > 0) {
            --pos;
            if (++candidate[pos] < q) break;
            candidate[pos] = 1;
            if (pos == 0) return out;  // wrapped past the last tuple
        }
    }
    return out;
}

SearchOutcome search_randomized(std::size_t n, const RingContext& ring,
                                const SearchOptions& opts) {
    if (opts.max_trials < 1) {
        throw Error("randomized search needs max_trials >= 1");
    }
    const std::uint64_t q = ring.modulus();
    std::mt19937_64 rng(opts.seed);

    SearchOutcome out;
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<std::uint64_t> candidate(n);
    for (std::uint64_t t = 0; t < opts.max_trials; ++t) {
        ++out.trials;
        for (std::size_t i = 0; i < n; ++i) {
            candidate[i] = 1 + uniform_below(rng, q - 1);
        }
        if (!candidate_is_ideal(candidate, q)) continue;
        if (!seen.insert(candidate).second) continue;
        out.sequences.emplace_back(ring, candidate);
        if (out.sequences.size() >= opts.max_results) break;
    }
    return out;
}

}  // namespace

SearchOutcome search_sequences(std::size_t length, const RingContext& ring,
                               const SearchOptions& opts) {
    if (length < 2) {
        throw Error("search needs length >= 2");
    }
    if (opts.max_results == 0) {
        return {};
    }
    if (opts.strategy == SearchStrategy::kExhaustive) {
        return search_exhaustive(length, ring, opts);
    }
    return search_randomized(length, ring, opts);
}

}  // namespace rrnht
