#include "rrnht/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace rrnht {

namespace {

nlohmann::json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path.string());
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    return j;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot write " + path.string());
    }
    out << text;
    if (!out) {
        throw ParseError("write to " + path.string() + " failed");
    }
}

// The parser yields unsigned numbers, but JSON built in code may carry
// nonnegative values as signed integers; accept both.
bool is_u64(const nlohmann::json& v) {
    return v.is_number_unsigned() ||
           (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

std::uint64_t require_u64(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) {
        throw ParseError(std::string("missing field \"") + key + "\"");
    }
    const auto& v = j.at(key);
    if (!is_u64(v)) {
        throw ParseError(std::string("field \"") + key +
                         "\" must be a nonnegative integer");
    }
    return v.get<std::uint64_t>();
}

std::vector<std::uint64_t> require_u64_array(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array()) {
        throw ParseError(std::string("missing array field \"") + key + "\"");
    }
    std::vector<std::uint64_t> out;
    out.reserve(j.at(key).size());
    for (const auto& v : j.at(key)) {
        if (!is_u64(v)) {
            throw ParseError(std::string("array \"") + key +
                             "\" must hold nonnegative integers");
        }
        out.push_back(v.get<std::uint64_t>());
    }
    return out;
}

// Shortest decimal that round-trips a double (CSV cells must parse back equal).
std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    double back = 0.0;
    std::sscanf(buf, "%lf", &back);
    if (back == value) {
        for (int prec = 1; prec < 17; ++prec) {
            char shorter[64];
            std::snprintf(shorter, sizeof(shorter), "%.*g", prec, value);
            std::sscanf(shorter, "%lf", &back);
            if (back == value) return shorter;
        }
    }
    return buf;
}

std::vector<std::vector<std::string>> split_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::istringstream cols(line);
        std::string cell;
        while (std::getline(cols, cell, ',')) {
            cells.push_back(cell);
        }
        rows.push_back(std::move(cells));
    }
    return rows;
}

}  // namespace

nlohmann::json sequence_to_json(const RRSequence& seq) {
    return nlohmann::json{{"modulus", seq.ring().modulus()},
                          {"length", seq.size()},
                          {"values", seq.values()}};
}

RRSequence sequence_from_json(const nlohmann::json& j) {
    const std::uint64_t modulus = require_u64(j, "modulus");
    const std::uint64_t length = require_u64(j, "length");
    std::vector<std::uint64_t> values = require_u64_array(j, "values");
    if (values.size() != length) {
        throw ParseError("declared length " + std::to_string(length) +
                         " does not match " + std::to_string(values.size()) +
                         " values");
    }
    try {
        return RRSequence(RingContext(modulus), std::move(values));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

RRSequence load_sequence(const std::filesystem::path& path) {
    try {
        return sequence_from_json(read_json_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void save_sequence(const RRSequence& seq, const std::filesystem::path& path) {
    write_text_file(path, sequence_to_json(seq).dump(2) + "\n");
}

nlohmann::json block_to_json(const BlockVector& block) {
    return nlohmann::json{{"modulus", block.ring().modulus()},
                          {"length", block.size()},
                          {"values", block.values()}};
}

BlockVector block_from_json(const nlohmann::json& j) {
    const std::uint64_t modulus = require_u64(j, "modulus");
    const std::uint64_t length = require_u64(j, "length");
    std::vector<std::uint64_t> values = require_u64_array(j, "values");
    if (values.size() != length) {
        throw ParseError("declared length " + std::to_string(length) +
                         " does not match " + std::to_string(values.size()) +
                         " values");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] >= modulus) {
            throw ParseError("block entry " + std::to_string(i) +
                             " is not a canonical residue mod " +
                             std::to_string(modulus));
        }
    }
    try {
        return BlockVector(RingContext(modulus), std::move(values));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

BlockVector load_block(const std::filesystem::path& path) {
    try {
        return block_from_json(read_json_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void save_block(const BlockVector& block, const std::filesystem::path& path) {
    write_text_file(path, block_to_json(block).dump(2) + "\n");
}

namespace {

ChannelModel channel_from_json(const nlohmann::json& j) {
    ChannelModel channel;
    if (!j.contains("kind") || !j.at("kind").is_string()) {
        throw ParseError("channel needs a string field \"kind\"");
    }
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "noiseless") {
        channel.kind = ChannelModel::Kind::kNoiseless;
    } else if (kind == "additive_integer_noise") {
        channel.kind = ChannelModel::Kind::kAdditiveIntegerNoise;
    } else {
        throw ParseError("unknown channel kind \"" + kind + "\"");
    }
    channel.noise_amplitude = j.contains("amplitude") ? require_u64(j, "amplitude") : 0;
    channel.seed = j.contains("seed") ? require_u64(j, "seed") : 0;
    if (channel.kind == ChannelModel::Kind::kNoiseless && channel.noise_amplitude != 0) {
        throw ParseError("noiseless channel cannot carry a nonzero amplitude");
    }
    return channel;
}

nlohmann::json channel_to_json(const ChannelModel& channel) {
    return nlohmann::json{
        {"kind", channel.kind == ChannelModel::Kind::kNoiseless
                     ? "noiseless"
                     : "additive_integer_noise"},
        {"amplitude", channel.noise_amplitude},
        {"seed", channel.seed}};
}

}  // namespace

SimulationJob simulation_job_from_json(const nlohmann::json& j) {
    SimulationJob job;
    if (!j.contains("sequence_file") || !j.at("sequence_file").is_string()) {
        throw ParseError("config needs a string field \"sequence_file\"");
    }
    job.sequence_file = j.at("sequence_file").get<std::string>();
    job.user_count = static_cast<std::size_t>(require_u64(j, "user_count"));
    job.message_length =
        static_cast<std::size_t>(require_u64(j, "message_length"));

    if (j.contains("shifts")) {
        if (!j.at("shifts").is_array()) {
            throw ParseError("\"shifts\" must be an array");
        }
        for (const auto& entry : j.at("shifts")) {
            if (is_u64(entry)) {
                job.shifts.push_back(
                    ShiftSpec{ShiftDirection::kLeft, entry.get<std::uint64_t>()});
            } else if (entry.is_object()) {
                if (!entry.contains("direction") ||
                    !entry.at("direction").is_string()) {
                    throw ParseError("shift object needs a string \"direction\"");
                }
                const std::string dir = entry.at("direction").get<std::string>();
                if (dir != "left" && dir != "right") {
                    throw ParseError("shift direction must be \"left\" or \"right\"");
                }
                job.shifts.push_back(ShiftSpec{dir == "left" ? ShiftDirection::kLeft
                                                             : ShiftDirection::kRight,
                                               require_u64(entry, "amount")});
            } else {
                throw ParseError(
                    "\"shifts\" entries must be integers (left shifts) or "
                    "{direction, amount} objects");
            }
        }
    }

    if (j.contains("code_strategy")) {
        if (!j.at("code_strategy").is_string()) {
            throw ParseError("\"code_strategy\" must be a string");
        }
        const std::string strategy = j.at("code_strategy").get<std::string>();
        if (strategy == "sequential") {
            job.strategy = CodeAssignment::kSequential;
        } else if (strategy == "seeded_random") {
            job.strategy = CodeAssignment::kSeededRandom;
        } else {
            throw ParseError("unknown code_strategy \"" + strategy + "\"");
        }
    }

    if (j.contains("symbol_map")) {
        const auto& sm = j.at("symbol_map");
        if (sm.is_string()) {
            if (sm.get<std::string>() != "binary") {
                throw ParseError("unknown symbol_map \"" + sm.get<std::string>() + "\"");
            }
            job.map_kind = SymbolMap::Kind::kBinary;
        } else if (sm.is_object()) {
            if (!sm.contains("kind") || !sm.at("kind").is_string() ||
                sm.at("kind").get<std::string>() != "general") {
                throw ParseError("symbol_map object must have kind \"general\"");
            }
            if (!sm.contains("table") || !sm.at("table").is_array()) {
                throw ParseError("general symbol_map needs a \"table\" array");
            }
            job.map_kind = SymbolMap::Kind::kGeneral;
            for (const auto& pair : sm.at("table")) {
                if (!pair.is_array() || pair.size() != 2 ||
                    !is_u64(pair[0]) || !is_u64(pair[1])) {
                    throw ParseError("symbol_map table entries must be [symbol, residue]");
                }
                job.map_table.emplace_back(pair[0].get<std::uint64_t>(),
                                           pair[1].get<std::uint64_t>());
            }
        } else {
            throw ParseError("\"symbol_map\" must be \"binary\" or a general-map object");
        }
    }

    if (j.contains("channel")) {
        job.channel = channel_from_json(j.at("channel"));
    }
    if (j.contains("trials")) {
        job.trials = require_u64(j, "trials");
        if (job.trials < 1) {
            throw ParseError("\"trials\" must be at least 1");
        }
    }
    if (j.contains("seed")) {
        job.seed = require_u64(j, "seed");
    }
    if (j.contains("messages")) {
        if (!j.at("messages").is_array()) {
            throw ParseError("\"messages\" must be an array of per-user symbol lists");
        }
        for (const auto& list : j.at("messages")) {
            if (!list.is_array()) {
                throw ParseError("each message must be an array of symbols");
            }
            std::vector<std::uint64_t> symbols;
            for (const auto& s : list) {
                if (!is_u64(s)) {
                    throw ParseError("message symbols must be nonnegative integers");
                }
                symbols.push_back(s.get<std::uint64_t>());
            }
            job.messages.push_back(std::move(symbols));
        }
    }
    if (j.contains("amplitudes")) {
        job.amplitudes = require_u64_array(j, "amplitudes");
    }
    return job;
}

SimulationJob load_simulation_job(const std::filesystem::path& path,
                                  std::uint64_t default_seed) {
    nlohmann::json j = read_json_file(path);
    if (!j.contains("seed")) {
        j["seed"] = default_seed;
    }
    try {
        SimulationJob job = simulation_job_from_json(j);
        // Relative sequence paths resolve against the config's directory.
        if (job.sequence_file.is_relative()) {
            job.sequence_file = path.parent_path() / job.sequence_file;
        }
        return job;
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

nlohmann::json report_to_json(const SimulationReport& report) {
    nlohmann::json users = nlohmann::json::array();
    for (const UserReport& u : report.users) {
        nlohmann::json decoded = nlohmann::json::array();
        nlohmann::json valid = nlohmann::json::array();
        for (const DecodedSymbol& d : u.decoded) {
            decoded.push_back(d.symbol);
            valid.push_back(d.valid);
        }
        users.push_back(nlohmann::json{{"user_id", u.user_id},
                                       {"shift", u.shift},
                                       {"correlators", u.correlators},
                                       {"decoded", decoded},
                                       {"valid", valid},
                                       {"errors", u.errors}});
    }
    const SimulationSettings& s = report.settings;
    return nlohmann::json{
        {"settings",
         {{"modulus", s.modulus},
          {"sequence_length", s.sequence_length},
          {"user_count", s.user_count},
          {"shifts", s.shifts},
          {"message_length", s.message_length},
          {"symbol_map",
           s.map_kind == SymbolMap::Kind::kBinary ? "binary" : "general"},
          {"channel", channel_to_json(s.channel)},
          {"seed", s.seed}}},
        {"users", users},
        {"total_errors", report.total_errors}};
}

SimulationReport report_from_json(const nlohmann::json& j) {
    if (!j.contains("settings") || !j.at("settings").is_object() ||
        !j.contains("users") || !j.at("users").is_array()) {
        throw ParseError("report needs a settings object and a users array");
    }
    SimulationReport report;
    const auto& s = j.at("settings");
    report.settings.modulus = require_u64(s, "modulus");
    report.settings.sequence_length =
        static_cast<std::size_t>(require_u64(s, "sequence_length"));
    report.settings.user_count =
        static_cast<std::size_t>(require_u64(s, "user_count"));
    for (const auto& v : require_u64_array(s, "shifts")) {
        report.settings.shifts.push_back(static_cast<std::size_t>(v));
    }
    report.settings.message_length =
        static_cast<std::size_t>(require_u64(s, "message_length"));
    if (!s.contains("symbol_map") || !s.at("symbol_map").is_string()) {
        throw ParseError("report settings need a string \"symbol_map\"");
    }
    report.settings.map_kind = s.at("symbol_map").get<std::string>() == "binary"
                                   ? SymbolMap::Kind::kBinary
                                   : SymbolMap::Kind::kGeneral;
    report.settings.channel = channel_from_json(s.at("channel"));
    report.settings.seed = require_u64(s, "seed");

    for (const auto& uj : j.at("users")) {
        UserReport u;
        u.user_id = static_cast<std::uint32_t>(require_u64(uj, "user_id"));
        u.shift = static_cast<std::size_t>(require_u64(uj, "shift"));
        u.correlators = require_u64_array(uj, "correlators");
        const auto decoded = require_u64_array(uj, "decoded");
        if (!uj.contains("valid") || !uj.at("valid").is_array() ||
            uj.at("valid").size() != decoded.size()) {
            throw ParseError("\"valid\" must be a boolean array matching \"decoded\"");
        }
        const auto& valid = uj.at("valid");
        for (std::size_t i = 0; i < decoded.size(); ++i) {
            if (!valid[i].is_boolean()) {
                throw ParseError("\"valid\" entries must be booleans");
            }
            u.decoded.push_back(DecodedSymbol{decoded[i], valid[i].get<bool>()});
        }
        u.errors = static_cast<std::size_t>(require_u64(uj, "errors"));
        report.users.push_back(std::move(u));
    }
    report.total_errors = static_cast<std::size_t>(require_u64(j, "total_errors"));
    return report;
}

std::string simulation_report_csv(const SimulationReport& report) {
    std::ostringstream out;
    out << "user_id,shift,symbols,errors\n";
    for (const UserReport& u : report.users) {
        out << u.user_id << ',' << u.shift << ',' << u.decoded.size() << ','
            << u.errors << '\n';
    }
    return out.str();
}

std::vector<std::vector<std::uint64_t>> parse_numeric_csv(const std::string& text) {
    const auto rows = split_csv(text);
    std::vector<std::vector<std::uint64_t>> out;
    for (std::size_t r = 1; r < rows.size(); ++r) {  // skip header
        std::vector<std::uint64_t> cells;
        for (const std::string& cell : rows[r]) {
            try {
                cells.push_back(std::stoull(cell));
            } catch (const std::exception&) {
                throw ParseError("CSV cell \"" + cell + "\" is not an unsigned integer");
            }
        }
        out.push_back(std::move(cells));
    }
    return out;
}

std::string noise_sweep_csv(const std::vector<NoiseSweepRow>& rows) {
    std::ostringstream out;
    out << "amplitude,trials,symbol_error_rate\n";
    for (const NoiseSweepRow& row : rows) {
        out << row.amplitude << ',' << row.trials << ','
            << format_double(row.symbol_error_rate) << '\n';
    }
    return out.str();
}

std::vector<NoiseSweepRow> parse_noise_sweep_csv(const std::string& text) {
    const auto rows = split_csv(text);
    std::vector<NoiseSweepRow> out;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        if (rows[r].size() != 3) {
            throw ParseError("noise sweep rows need 3 cells");
        }
        try {
            out.push_back(NoiseSweepRow{std::stoull(rows[r][0]),
                                        std::stoull(rows[r][1]),
                                        std::stod(rows[r][2])});
        } catch (const std::exception&) {
            throw ParseError("malformed noise sweep row");
        }
    }
    return out;
}

nlohmann::json noise_sweep_to_json(const std::vector<NoiseSweepRow>& rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const NoiseSweepRow& row : rows) {
        out.push_back(nlohmann::json{{"amplitude", row.amplitude},
                                     {"trials", row.trials},
                                     {"symbol_error_rate", row.symbol_error_rate}});
    }
    return out;
}

std::vector<NoiseSweepRow> noise_sweep_from_json(const nlohmann::json& j) {
    if (!j.is_array()) {
        throw ParseError("noise sweep must be an array of rows");
    }
    std::vector<NoiseSweepRow> rows;
    for (const auto& row : j) {
        if (!row.contains("symbol_error_rate") ||
            !row.at("symbol_error_rate").is_number()) {
            throw ParseError("noise sweep rows need a numeric \"symbol_error_rate\"");
        }
        rows.push_back(NoiseSweepRow{require_u64(row, "amplitude"),
                                     require_u64(row, "trials"),
                                     row.at("symbol_error_rate").get<double>()});
    }
    return rows;
}

nlohmann::json ideality_report_to_json(const IdealityReport& report) {
    nlohmann::json offenders = nlohmann::json::array();
    for (const auto& [lag, value] : report.offenders) {
        offenders.push_back(nlohmann::json{{"lag", lag}, {"value", value}});
    }
    return nlohmann::json{{"is_ideal", report.is_ideal},
                          {"peak", report.peak},
                          {"peak_invertible", report.peak_invertible},
                          {"offenders", offenders}};
}

}  // namespace rrnht
