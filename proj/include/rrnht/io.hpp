#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rrnht/cdma.hpp"
#include "rrnht/nht.hpp"
#include "rrnht/rr_sequence.hpp"

namespace rrnht {

// Sequence file: {"modulus": 47, "length": 16, "values": [11, 2, ...]}.
// Values must already be canonical nonzero residues; loaders reject anything
// out of range or zero. Block files use the same schema but allow zeros.

nlohmann::json sequence_to_json(const RRSequence& seq);
RRSequence sequence_from_json(const nlohmann::json& j);
RRSequence load_sequence(const std::filesystem::path& path);
void save_sequence(const RRSequence& seq, const std::filesystem::path& path);

nlohmann::json block_to_json(const BlockVector& block);
BlockVector block_from_json(const nlohmann::json& j);
BlockVector load_block(const std::filesystem::path& path);
void save_block(const BlockVector& block, const std::filesystem::path& path);

/// A shift request as a config file states it; canonical left-shift form needs
/// the sequence length, so normalization happens when the job runs.
struct ShiftSpec {
    ShiftDirection direction = ShiftDirection::kLeft;
    std::uint64_t amount = 0;
};

/// One simulation job as described by a config file.
struct SimulationJob {
    std::filesystem::path sequence_file;
    std::size_t user_count = 0;
    std::vector<ShiftSpec> shifts;  // empty: use the assignment strategy
    CodeAssignment strategy = CodeAssignment::kSequential;
    std::size_t message_length = 0;
    SymbolMap::Kind map_kind = SymbolMap::Kind::kBinary;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> map_table;  // general maps
    ChannelModel channel;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    std::vector<std::vector<std::uint64_t>> messages;  // empty: seeded random
    std::vector<std::uint64_t> amplitudes;  // nonempty: also run the noise sweep
};

SimulationJob simulation_job_from_json(const nlohmann::json& j);
SimulationJob load_simulation_job(const std::filesystem::path& path,
                                  std::uint64_t default_seed);

nlohmann::json report_to_json(const SimulationReport& report);
SimulationReport report_from_json(const nlohmann::json& j);

// CSV, one row per user: user_id,shift,symbols,errors.
std::string simulation_report_csv(const SimulationReport& report);
std::vector<std::vector<std::uint64_t>> parse_numeric_csv(const std::string& text);

// Noise sweep CSV: amplitude,trials,symbol_error_rate.
std::string noise_sweep_csv(const std::vector<NoiseSweepRow>& rows);
std::vector<NoiseSweepRow> parse_noise_sweep_csv(const std::string& text);

nlohmann::json noise_sweep_to_json(const std::vector<NoiseSweepRow>& rows);
std::vector<NoiseSweepRow> noise_sweep_from_json(const nlohmann::json& j);

nlohmann::json ideality_report_to_json(const IdealityReport& report);

}  // namespace rrnht
