"""Quantum state transfer in a three-qubit XY chain with a tunable
three-spin interaction: analytic propagators, transfer analysis and the
pulse-sequence compiler, backed by the C++ core."""

try:
    from ._core import *  # noqa: F401,F403
except ImportError:  # in-tree test runs load the module off PYTHONPATH
    from _core import *  # noqa: F401,F403

__all__ = [
    "T0",
    "ChainParams",
    "NmrParams",
    "TransferTimes",
    "PulseSequence",
    "kron",
    "expm_hermitian_generator",
    "dist_up_to_global_phase",
    "pauli_at",
    "build_h_xy3",
    "build_c",
    "build_d",
    "build_h_nmr_weak",
    "build_h_nmr_strong",
    "propagate_analytic",
    "transfer_times",
    "transfer_propagator",
    "find_speedup_threshold",
    "swap_13",
    "evolve_pure",
    "evolve_deviation",
    "overlap_trace",
    "bell_transfer",
    "compile_uc",
    "compile_ud",
    "concatenate",
    "lower_sequence",
    "simulate_sequence",
    "estimate_duration",
    "run_verification",
]
