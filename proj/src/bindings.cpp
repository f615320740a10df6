#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "rrnht/cdma.hpp"
#include "rrnht/io.hpp"
#include "rrnht/nht.hpp"
#include "rrnht/rr_sequence.hpp"

namespace py = pybind11;
using namespace rrnht;

namespace {

ShiftDirection parse_direction(const std::string& direction) {
    if (direction == "left") return ShiftDirection::kLeft;
    if (direction == "right") return ShiftDirection::kRight;
    throw Error("direction must be \"left\" or \"right\", got \"" + direction + "\"");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Spreading sequences with ideal circular autocorrelation over a "
              "residue ring, the circulant block transform built from them, and a "
              "synchronous multi-user channel simulator.";

    py::register_exception<Error>(m, "Error", PyExc_ValueError);

    py::class_<RingContext>(m, "RingContext")
        .def(py::init<std::uint64_t>(), py::arg("modulus"))
        .def_property_readonly("modulus", &RingContext::modulus)
        .def_property_readonly("is_prime_modulus", &RingContext::is_prime_modulus)
        .def("__eq__", [](const RingContext& a, const RingContext& b) { return a == b; })
        .def("__repr__", [](const RingContext& r) {
            return "RingContext(modulus=" + std::to_string(r.modulus()) + ")";
        });

    m.def(
        "reduce",
        [](std::int64_t x, const RingContext& ring) { return reduce(x, ring).value(); },
        py::arg("x"), py::arg("ring"),
        "Least nonnegative representative of x mod q.");
    m.def(
        "mod_mul",
        [](std::uint64_t a, std::uint64_t b, const RingContext& ring) {
            return mod_mul(Residue(a, ring), Residue(b, ring)).value();
        },
        py::arg("a"), py::arg("b"), py::arg("ring"));
    m.def(
        "mod_inv",
        [](std::uint64_t a, const RingContext& ring) {
            return mod_inv(Residue(a, ring)).value();
        },
        py::arg("a"), py::arg("ring"));

    py::class_<RRSequence>(m, "RRSequence")
        .def(py::init<const RingContext&, std::vector<std::uint64_t>>(),
             py::arg("ring"), py::arg("values"))
        .def_static(
            "from_integers",
            [](const RingContext& ring, const std::vector<std::uint64_t>& raw) {
                return RRSequence::from_integers(ring, raw);
            },
            py::arg("ring"), py::arg("values"))
        .def_property_readonly("ring", &RRSequence::ring)
        .def_property_readonly("values", &RRSequence::values)
        .def("__len__", &RRSequence::size)
        .def("__eq__",
             [](const RRSequence& a, const RRSequence& b) { return a == b; })
        .def("__repr__", [](const RRSequence& s) {
            return "RRSequence(n=" + std::to_string(s.size()) +
                   ", q=" + std::to_string(s.ring().modulus()) + ")";
        });

    py::class_<IdealityReport>(m, "IdealityReport")
        .def_readonly("is_ideal", &IdealityReport::is_ideal)
        .def_readonly("peak_invertible", &IdealityReport::peak_invertible)
        .def_readonly("peak", &IdealityReport::peak)
        .def_readonly("offenders", &IdealityReport::offenders);

    m.def(
        "circular_autocorrelation",
        [](const RRSequence& seq, std::size_t lag) {
            return circular_autocorrelation(seq, lag).value();
        },
        py::arg("sequence"), py::arg("lag"),
        "Cyclic autocorrelation C(lag) reduced mod q (unnormalized).");
    m.def(
        "integer_autocorrelation",
        [](const std::vector<std::uint64_t>& values, std::size_t lag) {
            return integer_autocorrelation(values, lag);
        },
        py::arg("values"), py::arg("lag"));
    m.def("is_ideal", &is_ideal, py::arg("sequence"));
    m.def(
        "circular_shift",
        [](const RRSequence& seq, std::uint64_t amount, const std::string& direction) {
            return circular_shift(seq, amount, parse_direction(direction));
        },
        py::arg("sequence"), py::arg("amount"), py::arg("direction") = "left");
    m.def(
        "cross_correlation_at_lag",
        [](const RRSequence& a, const RRSequence& b, std::uint64_t lag) {
            return cross_correlation_at_lag(a, b, lag).value();
        },
        py::arg("a"), py::arg("b"), py::arg("lag"));
    m.def(
        "discover_moduli",
        [](const std::vector<std::uint64_t>& values, std::size_t max_divisors) {
            return discover_moduli(values, max_divisors);
        },
        py::arg("values"), py::arg("max_divisors") = 64);

    py::class_<SearchOutcome>(m, "SearchOutcome")
        .def_readonly("sequences", &SearchOutcome::sequences)
        .def_readonly("trials", &SearchOutcome::trials);

    m.def(
        "search_sequences",
        [](std::size_t length, const RingContext& ring, const std::string& strategy,
           std::uint64_t seed, std::size_t max_results, std::uint64_t max_trials,
           std::uint64_t budget) {
            SearchOptions opts;
            if (strategy == "exhaustive") {
                opts.strategy = SearchStrategy::kExhaustive;
            } else if (strategy == "randomized") {
                opts.strategy = SearchStrategy::kRandomized;
            } else {
                throw Error("strategy must be \"exhaustive\" or \"randomized\"");
            }
            opts.seed = seed;
            opts.max_results = max_results;
            opts.max_trials = max_trials;
            opts.budget = budget;
            return search_sequences(length, ring, opts);
        },
        py::arg("length"), py::arg("ring"), py::arg("strategy") = "exhaustive",
        py::arg("seed") = 0, py::arg("max_results") = 16,
        py::arg("max_trials") = 100000, py::arg("budget") = 100000000);

    py::class_<BlockVector>(m, "BlockVector")
        .def(py::init<const RingContext&, std::vector<std::uint64_t>>(),
             py::arg("ring"), py::arg("values"))
        .def_property_readonly("ring", &BlockVector::ring)
        .def_property_readonly("values", &BlockVector::values)
        .def("__len__", &BlockVector::size)
        .def("__eq__",
             [](const BlockVector& a, const BlockVector& b) { return a == b; });

    py::class_<NHTMatrix>(m, "NHTMatrix")
        .def(py::init<const RingContext&, std::vector<std::uint64_t>>(),
             py::arg("ring"), py::arg("first_row"))
        .def_property_readonly("ring", &NHTMatrix::ring)
        .def_property_readonly("first_row", &NHTMatrix::first_row)
        .def_property_readonly("source", &NHTMatrix::source)
        .def("entry", &NHTMatrix::entry, py::arg("row"), py::arg("col"))
        .def("__len__", &NHTMatrix::size);

    m.def("build_nht", &build_nht, py::arg("sequence"),
          "Interleave an ideal sequence with zeros into the 2n x 2n circulant.");
    m.def(
        "verify_orthogonality",
        [](const NHTMatrix& m_) { return verify_orthogonality(m_).value(); },
        py::arg("matrix"), "Densely confirm N*N^T = k*I mod q and return k.");
    m.def("forward", &forward, py::arg("matrix"), py::arg("block"));
    m.def("inverse", &inverse, py::arg("matrix"), py::arg("block"));

    py::class_<UserCode>(m, "UserCode")
        .def_readonly("user_id", &UserCode::user_id)
        .def_readonly("shift", &UserCode::shift)
        .def_readonly("code", &UserCode::code);

    py::class_<CodeBook>(m, "CodeBook")
        .def(py::init<RRSequence, const std::vector<std::size_t>&>(),
             py::arg("base"), py::arg("left_shifts"))
        .def_property_readonly("base", &CodeBook::base)
        .def_property_readonly("users", &CodeBook::users)
        .def("__len__", &CodeBook::user_count);

    m.def(
        "assign_codes",
        [](const RRSequence& base, std::size_t user_count, const std::string& strategy,
           std::uint64_t seed) {
            const CodeAssignment mode = strategy == "seeded_random"
                                            ? CodeAssignment::kSeededRandom
                                            : CodeAssignment::kSequential;
            if (strategy != "sequential" && strategy != "seeded_random") {
                throw Error("strategy must be \"sequential\" or \"seeded_random\"");
            }
            return assign_codes(base, user_count, mode, seed);
        },
        py::arg("base"), py::arg("user_count"), py::arg("strategy") = "sequential",
        py::arg("seed") = 0);

    py::class_<SymbolMap>(m, "SymbolMap")
        .def_static("binary", &SymbolMap::binary, py::arg("ring"))
        .def_static("general", &SymbolMap::general, py::arg("ring"), py::arg("table"))
        .def("map", &SymbolMap::map, py::arg("symbol"))
        .def("unmap", &SymbolMap::unmap, py::arg("residue"))
        .def_property_readonly("domain", &SymbolMap::domain);

    m.def(
        "map_symbols",
        [](const std::vector<std::uint64_t>& message, const SymbolMap& map) {
            return map_symbols(message, map);
        },
        py::arg("message"), py::arg("map"));

    py::class_<Frame>(m, "Frame")
        .def_readonly("chips", &Frame::chips)
        .def_readonly("chips_per_symbol", &Frame::chips_per_symbol)
        .def_readonly("symbol_count", &Frame::symbol_count);

    py::class_<ChannelModel>(m, "ChannelModel")
        .def(py::init([](const std::string& kind, std::uint64_t amplitude,
                         std::uint64_t seed) {
                 ChannelModel c;
                 if (kind == "noiseless") {
                     c.kind = ChannelModel::Kind::kNoiseless;
                 } else if (kind == "additive_integer_noise") {
                     c.kind = ChannelModel::Kind::kAdditiveIntegerNoise;
                 } else {
                     throw Error("channel kind must be \"noiseless\" or "
                                 "\"additive_integer_noise\"");
                 }
                 c.noise_amplitude = amplitude;
                 c.seed = seed;
                 return c;
             }),
             py::arg("kind") = "noiseless", py::arg("amplitude") = 0,
             py::arg("seed") = 0)
        .def_readonly("noise_amplitude", &ChannelModel::noise_amplitude)
        .def_readonly("seed", &ChannelModel::seed);

    m.def(
        "spread",
        [](const std::vector<std::uint64_t>& symbols, const UserCode& code) {
            return spread(symbols, code);
        },
        py::arg("symbols"), py::arg("code"));
    m.def(
        "channel_combine",
        [](const std::vector<Frame>& frames, const ChannelModel& channel) {
            return channel_combine(frames, channel);
        },
        py::arg("frames"), py::arg("channel"));
    m.def("despread", &despread, py::arg("received"), py::arg("code"));

    py::class_<DecodedSymbol>(m, "DecodedSymbol")
        .def_readonly("symbol", &DecodedSymbol::symbol)
        .def_readonly("valid", &DecodedSymbol::valid);

    m.def(
        "decode",
        [](const std::vector<std::uint64_t>& estimates, const SymbolMap& map) {
            return decode(estimates, map);
        },
        py::arg("estimates"), py::arg("map"));

    py::class_<UserReport>(m, "UserReport")
        .def_readonly("user_id", &UserReport::user_id)
        .def_readonly("shift", &UserReport::shift)
        .def_readonly("correlators", &UserReport::correlators)
        .def_readonly("decoded", &UserReport::decoded)
        .def_readonly("errors", &UserReport::errors);

    py::class_<SimulationReport>(m, "SimulationReport")
        .def_readonly("users", &SimulationReport::users)
        .def_readonly("total_errors", &SimulationReport::total_errors)
        .def("__eq__", [](const SimulationReport& a, const SimulationReport& b) {
            return a == b;
        })
        .def("to_json", [](const SimulationReport& r) {
            return report_to_json(r).dump(2);
        });

    m.def(
        "run_simulation",
        [](const CodeBook& book, const std::vector<std::vector<std::uint64_t>>& messages,
           const SymbolMap& map, const ChannelModel& channel, std::uint64_t seed) {
            return run_simulation(book, messages, map, channel, seed);
        },
        py::arg("codebook"), py::arg("messages"), py::arg("map"), py::arg("channel"),
        py::arg("seed") = 0);
    m.def("random_messages", &random_messages, py::arg("map"), py::arg("users"),
          py::arg("length"), py::arg("seed"));

    py::class_<NoiseSweepRow>(m, "NoiseSweepRow")
        .def_readonly("amplitude", &NoiseSweepRow::amplitude)
        .def_readonly("trials", &NoiseSweepRow::trials)
        .def_readonly("symbol_error_rate", &NoiseSweepRow::symbol_error_rate);

    m.def(
        "noise_experiment",
        [](const RRSequence& base, std::size_t user_count, std::size_t message_length,
           const SymbolMap& map, const std::vector<std::uint64_t>& amplitudes,
           std::uint64_t trials, std::uint64_t seed) {
            return noise_experiment(base, user_count, message_length, map, amplitudes,
                                    trials, seed);
        },
        py::arg("base"), py::arg("user_count"), py::arg("message_length"),
        py::arg("map"), py::arg("amplitudes"), py::arg("trials"), py::arg("seed"));

    m.def("keyspace", &keyspace, py::arg("sequence_length"), py::arg("base_count"));

    m.def("load_sequence", &load_sequence, py::arg("path"));
    m.def("save_sequence", &save_sequence, py::arg("sequence"), py::arg("path"));
    m.def("load_block", &load_block, py::arg("path"));
    m.def("save_block", &save_block, py::arg("block"), py::arg("path"));

#ifdef RRNHT_VERSION
    m.attr("__version__") = RRNHT_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
