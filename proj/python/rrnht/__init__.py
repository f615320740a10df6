"""Spreading sequences with ideal circular autocorrelation over a residue ring,
the circulant block transform built from them, and a synchronous multi-user
channel simulator.

Everything is exact modular arithmetic: an ideal sequence has C(k) = 0 mod q at
every nonzero lag, so users keyed by distinct circular shifts of one base
sequence separate with zero crosstalk on a synchronous channel.
"""

from ._core import (
    BlockVector,
    ChannelModel,
    CodeBook,
    DecodedSymbol,
    Error,
    Frame,
    IdealityReport,
    NHTMatrix,
    NoiseSweepRow,
    RingContext,
    RRSequence,
    SearchOutcome,
    SimulationReport,
    SymbolMap,
    UserCode,
    UserReport,
    __version__,
    assign_codes,
    build_nht,
    channel_combine,
    circular_autocorrelation,
    circular_shift,
    cross_correlation_at_lag,
    decode,
    despread,
    discover_moduli,
    forward,
    integer_autocorrelation,
    inverse,
    is_ideal,
    keyspace,
    load_block,
    load_sequence,
    map_symbols,
    mod_inv,
    mod_mul,
    noise_experiment,
    random_messages,
    reduce,
    run_simulation,
    save_block,
    save_sequence,
    search_sequences,
    spread,
    verify_orthogonality,
)

__all__ = [
    "BlockVector",
    "ChannelModel",
    "CodeBook",
    "DecodedSymbol",
    "Error",
    "Frame",
    "IdealityReport",
    "NHTMatrix",
    "NoiseSweepRow",
    "RingContext",
    "RRSequence",
    "SearchOutcome",
    "SimulationReport",
    "SymbolMap",
    "UserCode",
    "UserReport",
    "__version__",
    "assign_codes",
    "build_nht",
    "channel_combine",
    "circular_autocorrelation",
    "circular_shift",
    "cross_correlation_at_lag",
    "decode",
    "despread",
    "discover_moduli",
    "forward",
    "integer_autocorrelation",
    "inverse",
    "is_ideal",
    "keyspace",
    "load_block",
    "load_sequence",
    "map_symbols",
    "mod_inv",
    "mod_mul",
    "noise_experiment",
    "random_messages",
    "reduce",
    "run_simulation",
    "save_block",
    "save_sequence",
    "search_sequences",
    "spread",
    "verify_orthogonality",
]
