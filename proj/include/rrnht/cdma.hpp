#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rrnht/rr_sequence.hpp"

namespace rrnht {

/// One user's key: a distinct circular shift of the shared base sequence.
struct UserCode {
    std::uint32_t user_id = 0;
    std::size_t shift = 0;  // canonical left-shift amount in [0, n)
    RRSequence code;        // == circular_shift(base, shift, left)
};

/// The per-user shift assignment. At most n users fit: only n distinct
/// shifts of one base sequence exist.
class CodeBook {
public:
    /// Explicit left-shift list; shifts must be pairwise distinct and < n.
    CodeBook(RRSequence base, const std::vector<std::size_t>& left_shifts);

    const RRSequence& base() const noexcept { return base_; }
    const std::vector<UserCode>& users() const noexcept { return users_; }
    std::size_t user_count() const noexcept { return users_.size(); }
    const UserCode& user(std::size_t i) const { return users_.at(i); }

private:
    RRSequence base_;
    std::vector<UserCode> users_;
};

enum class CodeAssignment { kSequential, kSeededRandom };

/// Sequential assigns shifts 0..user_count-1; seeded_random draws distinct
/// shifts uniformly without replacement. Throws TooManyUsersError when
/// user_count > n, Error when user_count == 0.
CodeBook assign_codes(const RRSequence& base, std::size_t user_count,
                      CodeAssignment strategy, std::uint64_t seed = 0);

/// Injective map from message symbols to nonzero residues. The binary map
/// sends bit 0 to residue 1 and bit 1 to residue q-1 (needs q >= 3 so the
/// two images differ).
class SymbolMap {
public:
    enum class Kind { kBinary, kGeneral };

    static SymbolMap binary(const RingContext& ring);
    static SymbolMap general(
        const RingContext& ring,
        const std::vector<std::pair<std::uint64_t, std::uint64_t>>& table);

    Kind kind() const noexcept { return kind_; }
    const RingContext& ring() const noexcept { return ring_; }

    /// Symbol -> residue; throws UnknownSymbolError outside the domain.
    std::uint64_t map(std::uint64_t symbol) const;

    /// Residue -> symbol, or nullopt when the residue is not in the image
    /// (the wrong-key / interference signature).
    std::optional<std::uint64_t> unmap(std::uint64_t residue) const noexcept;

    /// Domain symbols in insertion order; used to draw random messages.
    const std::vector<std::uint64_t>& domain() const noexcept { return domain_; }

private:
    SymbolMap(Kind kind, const RingContext& ring);

    Kind kind_;
    RingContext ring_;
    std::vector<std::uint64_t> domain_;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> forward_;  // symbol -> residue
};

std::vector<std::uint64_t> map_symbols(std::span<const std::uint64_t> message,
                                       const SymbolMap& map);

/// A spread transmission: L symbols, each occupying n chips.
struct Frame {
    RingContext ring;
    std::vector<std::uint64_t> chips;  // length n * L, canonical residues
    std::size_t chips_per_symbol = 0;  // n
    std::size_t symbol_count = 0;      // L
};

/// Mix = per-symbol scalar multiplication of the code chips mod q; the unique
/// reading under which correlation recovers exactly m * C(0).
/// Throws ZeroSymbolError for a zero symbol (it would transmit silence).
Frame spread(std::span<const std::uint64_t> symbols, const UserCode& code);

struct ChannelModel {
    enum class Kind { kNoiseless, kAdditiveIntegerNoise };
    Kind kind = Kind::kNoiseless;
    std::uint64_t noise_amplitude = 0;  // A; uniform integer noise in [-A, A]
    std::uint64_t seed = 0;

    friend bool operator==(const ChannelModel&, const ChannelModel&) = default;
};

/// Synchronous superposition. Noiseless sums elementwise mod q; the noise kind
/// sums over the integers, perturbs each chip by a seeded uniform draw from
/// [-A, A], then reduces. A = 0 reproduces the noiseless channel exactly.
Frame channel_combine(std::span<const Frame> frames, const ChannelModel& channel);

struct DespreadResult {
    std::vector<std::uint64_t> estimates;    // m-hat per symbol block
    std::vector<std::uint64_t> correlators;  // raw r = <chips, code> per block
};

/// Correlate each n-chip block against the code and rescale by C(0)^{-1}.
/// In the noiseless synchronous case every cross term vanishes, so the
/// estimate is exactly the sender's symbol (or 0 under a wrong key).
DespreadResult despread_detail(const Frame& received, const UserCode& code);
std::vector<std::uint64_t> despread(const Frame& received, const UserCode& code);

struct DecodedSymbol {
    std::uint64_t symbol = 0;
    bool valid = false;  // false: estimate outside the map image (interference,
                         // noise, or wrong key), never silently coerced

    friend bool operator==(const DecodedSymbol&, const DecodedSymbol&) = default;
};

std::vector<DecodedSymbol> decode(std::span<const std::uint64_t> estimates,
                                  const SymbolMap& map);

/// Everything needed to reproduce a run; echoed into the report.
struct SimulationSettings {
    std::uint64_t modulus = 0;
    std::size_t sequence_length = 0;
    std::size_t user_count = 0;
    std::vector<std::size_t> shifts;
    std::size_t message_length = 0;
    SymbolMap::Kind map_kind = SymbolMap::Kind::kBinary;
    ChannelModel channel;
    std::uint64_t seed = 0;

    friend bool operator==(const SimulationSettings&,
                           const SimulationSettings&) = default;
};

struct UserReport {
    std::uint32_t user_id = 0;
    std::size_t shift = 0;
    std::vector<std::uint64_t> correlators;
    std::vector<DecodedSymbol> decoded;
    std::size_t errors = 0;

    friend bool operator==(const UserReport&, const UserReport&) = default;
};

struct SimulationReport {
    SimulationSettings settings;
    std::vector<UserReport> users;
    std::size_t total_errors = 0;

    friend bool operator==(const SimulationReport&,
                           const SimulationReport&) = default;
};

/// Full pipeline: map -> spread -> combine -> despread per user -> decode,
/// with error counts against the ground-truth messages. Noiseless contract:
/// zero errors for every user. All messages must share one length.
SimulationReport run_simulation(const CodeBook& book,
                                const std::vector<std::vector<std::uint64_t>>& messages,
                                const SymbolMap& map, const ChannelModel& channel,
                                std::uint64_t seed = 0);

/// Convenience overload that assigns codes first (user count = messages size).
SimulationReport run_simulation(const RRSequence& base,
                                const std::vector<std::vector<std::uint64_t>>& messages,
                                const SymbolMap& map, const ChannelModel& channel,
                                CodeAssignment strategy, std::uint64_t seed);

/// Uniform draws from the map's domain, one list of `length` symbols per user.
std::vector<std::vector<std::uint64_t>> random_messages(const SymbolMap& map,
                                                        std::size_t users,
                                                        std::size_t length,
                                                        std::uint64_t seed);

struct NoiseSweepRow {
    std::uint64_t amplitude = 0;
    std::uint64_t trials = 0;
    double symbol_error_rate = 0.0;

    friend bool operator==(const NoiseSweepRow&, const NoiseSweepRow&) = default;
};

/// Empirical symbol error rate (wrong or invalid, over all users and trials)
/// as a function of the noise amplitude. The A = 0 row is exactly 0.
std::vector<NoiseSweepRow> noise_experiment(const RRSequence& base,
                                            std::size_t user_count,
                                            std::size_t message_length,
                                            const SymbolMap& map,
                                            std::span<const std::uint64_t> amplitudes,
                                            std::uint64_t trials, std::uint64_t seed);

/// Enumerable keyspace at desk scale: distinct shifts times distinct base
/// sequences. A count, not a cryptographic strength claim.
std::uint64_t keyspace(std::size_t sequence_length, std::size_t base_count) noexcept;

}  // namespace rrnht
