"""Quantum-correlation dynamics of three dephasing qubits under
Ornstein-Uhlenbeck noise.

The package evolves three independent qubits whose level spacings
fluctuate with exponentially correlated classical noise, and compares five
correlation measures (tripartite negativity, concurrence, quantum discord,
MABK and Svetlichny Bell expectations) between a generic channel-lift
pipeline, closed-form results for GHZ/W purity mixtures, and a stochastic
trajectory oracle.
"""

from .channel import ChannelParams, IDENTITY_PARAMS, dephasing_params, evolve_dephasing, lift_three_qubit
from .closedform import (
    CorrelationReport,
    closed_form,
    death_time,
    discord_kink_time,
    ghz_closed_form,
    w_closed_form,
)
from .errors import ChannelContractError, ContractError
from .linalg import (
    hermitian_eigenvalues,
    hermitian_eigensystem,
    kron,
    kron3,
    partial_trace,
    partial_transpose,
    von_neumann_entropy,
)
from .measures import (
    BellAngles,
    XStateParams,
    bell_expectation,
    bell_operator,
    concurrence,
    concurrence_x,
    discord,
    discord_x,
    discord_x_branches,
    measurement_projectors,
    negativity,
    optimize_bell_angles,
    svetlichny_operator,
    tripartite_negativity,
    x_matrix,
    x_params,
)
from .noise import NoiseParams, correlation, decoherence_exponent, memory_kernel
from .pipeline import numeric_death_time, numeric_report
from .states import PurityMix, ghz_state, make_state, w_state
from .trajectories import EnsembleStats, TrajectoryConfig, ensemble_density, ensemble_stats, sample_phase

__version__ = "0.1.0"

__all__ = [
    "BellAngles",
    "ChannelContractError",
    "ChannelParams",
    "ContractError",
    "CorrelationReport",
    "EnsembleStats",
    "IDENTITY_PARAMS",
    "NoiseParams",
    "PurityMix",
    "TrajectoryConfig",
    "XStateParams",
    "bell_expectation",
    "bell_operator",
    "closed_form",
    "concurrence",
    "concurrence_x",
    "correlation",
    "death_time",
    "decoherence_exponent",
    "dephasing_params",
    "discord",
    "discord_kink_time",
    "discord_x",
    "discord_x_branches",
    "ensemble_density",
    "ensemble_stats",
    "evolve_dephasing",
    "ghz_closed_form",
    "ghz_state",
    "hermitian_eigensystem",
    "hermitian_eigenvalues",
    "kron",
    "kron3",
    "lift_three_qubit",
    "make_state",
    "measurement_projectors",
    "memory_kernel",
    "negativity",
    "numeric_death_time",
    "numeric_report",
    "optimize_bell_angles",
    "partial_trace",
    "partial_transpose",
    "sample_phase",
    "svetlichny_operator",
    "tripartite_negativity",
    "von_neumann_entropy",
    "w_closed_form",
    "w_state",
    "x_matrix",
    "x_params",
]
