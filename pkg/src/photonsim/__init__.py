"""Multi-photon interference and coupled-waveguide lattice toolkit."""

from .engine import (
    ConsistencyError,
    decompose_terms,
    event_probability,
    event_probability_ensemble,
    event_probability_mixed,
    event_probability_photons,
    has_n_photon_interference,
    overlap_graph,
)
from .interferometers import (
    Interferometer,
    ReconstructionError,
    beamsplitter,
    characterize_from_fringes,
    gauge_fidelity,
    ghz_probability,
    measured_tritter,
    phases_from_amplitudes,
    quitter,
    tritter,
)
from .linalg import cycle_decomposition, permanent, permute_rows
from .oracle import brute_force_probability
from .states import (
    GaussianWavepacket,
    InternalState,
    PolarizationState,
    UndefinedTriadPhase,
    distinguishability_matrix,
    gaussian_overlap,
    gram_schmidt_states,
    impure_state,
    independent_parameter_rank,
    overlap,
    triad_phase,
    unequal_width_overlap,
)

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError",
    "GaussianWavepacket",
    "Interferometer",
    "InternalState",
    "PolarizationState",
    "ReconstructionError",
    "UndefinedTriadPhase",
    "beamsplitter",
    "brute_force_probability",
    "characterize_from_fringes",
    "cycle_decomposition",
    "decompose_terms",
    "distinguishability_matrix",
    "event_probability",
    "event_probability_ensemble",
    "event_probability_mixed",
    "event_probability_photons",
    "gauge_fidelity",
    "gaussian_overlap",
    "ghz_probability",
    "gram_schmidt_states",
    "has_n_photon_interference",
    "impure_state",
    "independent_parameter_rank",
    "measured_tritter",
    "overlap",
    "overlap_graph",
    "permanent",
    "permute_rows",
    "phases_from_amplitudes",
    "quitter",
    "triad_phase",
    "tritter",
    "unequal_width_overlap",
    "__version__",
]
