#include "rrnht/cdma.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "rrnht/rng.hpp"

namespace rrnht {

namespace {

// Seed-stream tags; every component mixes the root seed with one of these.
constexpr std::uint64_t kStreamCodes = 0x636f6465;     // shift assignment
constexpr std::uint64_t kStreamMessages = 0x6d657367;  // random message draws
constexpr std::uint64_t kStreamChannel = 0x6368616e;   // per-trial channel noise

}  // namespace

CodeBook::CodeBook(RRSequence base, const std::vector<std::size_t>& left_shifts)
    : base_(std::move(base)) {
    const std::size_t n = base_.size();
    if (left_shifts.empty()) {
        throw Error("codebook needs at least one user");
    }
    if (left_shifts.size() > n) {
        throw TooManyUsersError("requested " + std::to_string(left_shifts.size()) +
                                " users but only " + std::to_string(n) +
                                " distinct shifts exist");
    }
    std::set<std::size_t> seen;
    users_.reserve(left_shifts.size());
    for (std::size_t i = 0; i < left_shifts.size(); ++i) {
        const std::size_t s = left_shifts[i];
        if (s >= n) {
            throw Error("shift " + std::to_string(s) + " out of range for length " +
                        std::to_string(n));
        }
        if (!seen.insert(s).second) {
            throw Error("shift " + std::to_string(s) + " assigned twice");
        }
        users_.push_back(UserCode{static_cast<std::uint32_t>(i), s,
                                  circular_shift(base_, s, ShiftDirection::kLeft)});
    }
}

CodeBook assign_codes(const RRSequence& base, std::size_t user_count,
                      CodeAssignment strategy, std::uint64_t seed) {
    const std::size_t n = base.size();
    if (user_count == 0) {
        throw Error("user_count must be at least 1");
    }
    if (user_count > n) {
        throw TooManyUsersError("requested " + std::to_string(user_count) +
                                " users but only " + std::to_string(n) +
                                " distinct shifts exist");
    }

    std::vector<std::size_t> shifts(n);
    std::iota(shifts.begin(), shifts.end(), std::size_t{0});
    if (strategy == CodeAssignment::kSeededRandom) {
        // Partial Fisher-Yates: the first user_count entries end up a uniform
        // draw without replacement.
        std::mt19937_64 rng(derive_seed(seed, kStreamCodes));
        for (std::size_t i = 0; i < user_count; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(
                                          uniform_below(rng, n - i));
            std::swap(shifts[i], shifts[j]);
        }
    }
    shifts.resize(user_count);
    return CodeBook(base, shifts);
}

SymbolMap::SymbolMap(Kind kind, const RingContext& ring) : kind_(kind), ring_(ring) {}

SymbolMap SymbolMap::binary(const RingContext& ring) {
    if (ring.modulus() < 3) {
        throw Error("binary symbol map needs q >= 3 so residues 1 and q-1 differ");
    }
    SymbolMap m(Kind::kBinary, ring);
    m.domain_ = {0, 1};
    m.forward_ = {{0, 1}, {1, ring.modulus() - 1}};
    return m;
}

SymbolMap SymbolMap::general(
    const RingContext& ring,
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& table) {
    if (table.empty()) {
        throw Error("general symbol map needs a nonempty table");
    }
    SymbolMap m(Kind::kGeneral, ring);
    std::set<std::uint64_t> symbols, residues;
    for (const auto& [symbol, residue] : table) {
        if (residue == 0 || residue >= ring.modulus()) {
            throw Error("symbol " + std::to_string(symbol) +
                        " maps to " + std::to_string(residue) +
                        ", which is not a nonzero canonical residue");
        }
        if (!symbols.insert(symbol).second) {
            throw Error("symbol " + std::to_string(symbol) + " mapped twice");
        }
        if (!residues.insert(residue).second) {
            throw Error("residue " + std::to_string(residue) +
                        " is the image of two symbols; map must be injective");
        }
        m.domain_.push_back(symbol);
        m.forward_.emplace_back(symbol, residue);
    }
    return m;
}

std::uint64_t SymbolMap::map(std::uint64_t symbol) const {
    for (const auto& [s, r] : forward_) {
        if (s == symbol) return r;
    }
    throw UnknownSymbolError("symbol " + std::to_string(symbol) +
                             " is outside the map domain");
}

std::optional<std::uint64_t> SymbolMap::unmap(std::uint64_t residue) const noexcept {
    for (const auto& [s, r] : forward_) {
        if (r == residue) return s;
    }
    return std::nullopt;
}

std::vector<std::uint64_t> map_symbols(std::span<const std::uint64_t> message,
                                       const SymbolMap& map) {
    std::vector<std::uint64_t> out;
    out.reserve(message.size());
    for (const std::uint64_t symbol : message) {
        out.push_back(map.map(symbol));
    }
    return out;
}

Frame spread(std::span<const std::uint64_t> symbols, const UserCode& code) {
    const RingContext& ring = code.code.ring();
    const std::uint64_t q = ring.modulus();
    const std::size_t n = code.code.size();
    const auto& chips_of_code = code.code.values();

    Frame frame{ring, {}, n, symbols.size()};
    frame.chips.reserve(n * symbols.size());
    for (const std::uint64_t m : symbols) {
        if (m % q == 0) {
            throw ZeroSymbolError("zero symbol would transmit silence and be undecodable");
        }
        const std::uint64_t mc = m % q;
        for (std::size_t j = 0; j < n; ++j) {
            frame.chips.push_back(mc * chips_of_code[j] % q);
        }
    }
    return frame;
}

Frame channel_combine(std::span<const Frame> frames, const ChannelModel& channel) {
    if (frames.empty()) {
        throw Error("channel needs at least one frame");
    }
    const Frame& first = frames.front();
    for (const Frame& f : frames) {
        if (f.ring != first.ring) {
            throw RingMismatchError("frames from different rings on one channel");
        }
        if (f.chips.size() != first.chips.size() ||
            f.chips_per_symbol != first.chips_per_symbol) {
            throw DimensionError("frames must be block-aligned and equal length");
        }
    }

    const std::uint64_t q = first.ring.modulus();
    Frame out{first.ring, std::vector<std::uint64_t>(first.chips.size(), 0),
              first.chips_per_symbol, first.symbol_count};

    if (channel.kind == ChannelModel::Kind::kNoiseless ||
        channel.noise_amplitude == 0) {
        for (const Frame& f : frames) {
            for (std::size_t i = 0; i < f.chips.size(); ++i) {
                out.chips[i] = (out.chips[i] + f.chips[i]) % q;
            }
        }
        return out;
    }

    // Integer superposition plus seeded uniform noise in [-A, A], then reduce.
    const std::uint64_t a = channel.noise_amplitude;
    if (a > RingContext::kMaxModulus) {
        throw Error("noise amplitude " + std::to_string(a) +
                    " exceeds the supported maximum " +
                    std::to_string(RingContext::kMaxModulus));
    }
    std::mt19937_64 rng(derive_seed(channel.seed, kStreamChannel));
    for (std::size_t i = 0; i < out.chips.size(); ++i) {
        std::int64_t sum = 0;
        for (const Frame& f : frames) {
            sum += static_cast<std::int64_t>(f.chips[i]);
        }
        sum += static_cast<std::int64_t>(uniform_below(rng, 2 * a + 1)) -
               static_cast<std::int64_t>(a);
        out.chips[i] = reduce_signed(sum, q);
    }
    return out;
}

DespreadResult despread_detail(const Frame& received, const UserCode& code) {
    const std::size_t n = code.code.size();
    if (received.chips.size() % n != 0) {
        throw DimensionError("frame of " + std::to_string(received.chips.size()) +
                             " chips is not a multiple of the code length " +
                             std::to_string(n));
    }
    if (received.ring != code.code.ring()) {
        throw RingMismatchError("frame and code live in different rings");
    }
    const std::uint64_t q = received.ring.modulus();
    const auto& c = code.code.values();

    // C(0) is shift-invariant, so the code's own peak equals the base's.
    const std::uint64_t peak = circular_autocorrelation(code.code, 0).value();
    const std::uint64_t peak_inv = inverse_mod(peak, q);

    const std::size_t blocks = received.chips.size() / n;
    DespreadResult result;
    result.estimates.reserve(blocks);
    result.correlators.reserve(blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
        std::uint64_t r = 0;
        const std::uint64_t* chips = received.chips.data() + b * n;
        for (std::size_t j = 0; j < n; ++j) {
            r = (r + chips[j] * c[j]) % q;
        }
        result.correlators.push_back(r);
        result.estimates.push_back(r * peak_inv % q);
    }
    return result;
}

std::vector<std::uint64_t> despread(const Frame& received, const UserCode& code) {
    return despread_detail(received, code).estimates;
}

std::vector<DecodedSymbol> decode(std::span<const std::uint64_t> estimates,
                                  const SymbolMap& map) {
    std::vector<DecodedSymbol> out;
    out.reserve(estimates.size());
    for (const std::uint64_t e : estimates) {
        if (const auto symbol = map.unmap(e)) {
            out.push_back(DecodedSymbol{*symbol, true});
        } else {
            out.push_back(DecodedSymbol{0, false});
        }
    }
    return out;
}

SimulationReport run_simulation(const CodeBook& book,
                                const std::vector<std::vector<std::uint64_t>>& messages,
                                const SymbolMap& map, const ChannelModel& channel,
                                std::uint64_t seed) {
    if (messages.size() != book.user_count()) {
        throw Error("got " + std::to_string(messages.size()) + " messages for " +
                    std::to_string(book.user_count()) + " users");
    }
    const std::size_t length = messages.empty() ? 0 : messages.front().size();
    for (const auto& m : messages) {
        if (m.size() != length) {
            throw DimensionError("all user messages must have the same length");
        }
    }
    if (map.ring() != book.base().ring()) {
        throw RingMismatchError("symbol map ring does not match codebook ring");
    }

    SimulationReport report;
    report.settings.modulus = book.base().ring().modulus();
    report.settings.sequence_length = book.base().size();
    report.settings.user_count = book.user_count();
    for (const UserCode& u : book.users()) {
        report.settings.shifts.push_back(u.shift);
    }
    report.settings.message_length = length;
    report.settings.map_kind = map.kind();
    report.settings.channel = channel;
    report.settings.seed = seed;

    std::vector<Frame> frames;
    frames.reserve(book.user_count());
    for (std::size_t u = 0; u < book.user_count(); ++u) {
        const auto symbols = map_symbols(messages[u], map);
        frames.push_back(spread(symbols, book.user(u)));
    }

    // Empty messages: nothing on air, nothing to decode.
    if (length == 0) {
        for (const UserCode& u : book.users()) {
            report.users.push_back(UserReport{u.user_id, u.shift, {}, {}, 0});
        }
        return report;
    }

    const Frame received = channel_combine(frames, channel);

    for (std::size_t u = 0; u < book.user_count(); ++u) {
        const UserCode& user = book.user(u);
        DespreadResult despread_out = despread_detail(received, user);
        std::vector<DecodedSymbol> decoded = decode(despread_out.estimates, map);

        std::size_t errors = 0;
        for (std::size_t i = 0; i < decoded.size(); ++i) {
            if (!decoded[i].valid || decoded[i].symbol != messages[u][i]) {
                ++errors;
            }
        }
        report.users.push_back(UserReport{user.user_id, user.shift,
                                          std::move(despread_out.correlators),
                                          std::move(decoded), errors});
        report.total_errors += errors;
    }
    return report;
}

SimulationReport run_simulation(const RRSequence& base,
                                const std::vector<std::vector<std::uint64_t>>& messages,
                                const SymbolMap& map, const ChannelModel& channel,
                                CodeAssignment strategy, std::uint64_t seed) {
    const CodeBook book = assign_codes(base, messages.size(), strategy, seed);
    return run_simulation(book, messages, map, channel, seed);
}

std::vector<std::vector<std::uint64_t>> random_messages(const SymbolMap& map,
                                                        std::size_t users,
                                                        std::size_t length,
                                                        std::uint64_t seed) {
    const auto& domain = map.domain();
    std::vector<std::vector<std::uint64_t>> out(users);
    for (std::size_t u = 0; u < users; ++u) {
        std::mt19937_64 rng(derive_seed(seed, kStreamMessages, u));
        out[u].reserve(length);
        for (std::size_t i = 0; i < length; ++i) {
            out[u].push_back(domain[uniform_below(rng, domain.size())]);
        }
    }
    return out;
}

std::vector<NoiseSweepRow> noise_experiment(const RRSequence& base,
                                            std::size_t user_count,
                                            std::size_t message_length,
                                            const SymbolMap& map,
                                            std::span<const std::uint64_t> amplitudes,
                                            std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1) {
        throw Error("noise experiment needs trials >= 1");
    }
    const CodeBook book = assign_codes(base, user_count, CodeAssignment::kSequential);

    std::vector<NoiseSweepRow> rows;
    rows.reserve(amplitudes.size());
    for (std::size_t ai = 0; ai < amplitudes.size(); ++ai) {
        const std::uint64_t a = amplitudes[ai];
        std::uint64_t wrong = 0;
        for (std::uint64_t t = 0; t < trials; ++t) {
            const std::uint64_t trial_seed = derive_seed(seed, ai, t);
            const auto messages =
                random_messages(map, user_count, message_length, trial_seed);
            const ChannelModel channel{ChannelModel::Kind::kAdditiveIntegerNoise, a,
                                       trial_seed};
            const SimulationReport report =
                run_simulation(book, messages, map, channel, trial_seed);
            wrong += report.total_errors;
        }
        const double denom =
            static_cast<double>(trials) * static_cast<double>(user_count) *
            static_cast<double>(message_length);
        rows.push_back(NoiseSweepRow{
            a, trials, denom == 0.0 ? 0.0 : static_cast<double>(wrong) / denom});
    }
    return rows;
}

std::uint64_t keyspace(std::size_t sequence_length, std::size_t base_count) noexcept {
    return static_cast<std::uint64_t>(sequence_length) *
           static_cast<std::uint64_t>(base_count);
}

}  // namespace rrnht
