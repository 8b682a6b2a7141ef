"""Photonic lattice geometries, Hamiltonians and topological diagnostics."""

from .excitation import (
    ExcitationResult,
    OptimizationFailed,
    excitation_optimize,
    field_objective,
)
from .geometry import (
    SUBLATTICE_A,
    SUBLATTICE_B,
    CouplingModel,
    GeometryError,
    LatticeGeometry,
    TwoVortexField,
    VortexField,
    apply_disorder,
    dirac_point,
    displacement_scale,
    fermi_velocity,
    geometry_from_json,
    geometry_to_json,
    graphene_lattice,
    graphene_rectangle,
    kekule_displace,
    kekule_displacement,
    mass_matched_scale,
    nearest_coupling,
    ssh_chain,
    thesis_lattice,
    vortex_delta,
)
from .hamiltonian import (
    AdiabaticError,
    AdiabaticResult,
    BraidError,
    BraidResult,
    TranslationResult,
    VortexLattice,
    ZeroModeNotFound,
    ZeroModeResult,
    adiabatic_evolution,
    analytic_zero_mode,
    braid,
    braid_preset,
    bright_site_position,
    contrast_delta0,
    coupling_hamiltonian,
    coupling_matrix_sparse,
    density_of_states,
    disorder_sweep,
    find_zero_mode,
    hexagon_contrast,
    propagate,
    spectrum,
    sublattice_ratio,
    translate_zero_mode,
    vortex_lattice,
)
from .topology import (
    BoundState,
    GapClosedError,
    NoModeError,
    berry_phase,
    chern_number,
    graphene_dispersion,
    jackiw_rebbi_mode,
    sphere_cover_hamiltonian,
    ssh_bloch,
    ssh_dispersion,
    ssh_loop,
    ssh_winding,
    winding_number,
)

__all__ = [name for name in dir() if not name.startswith("_")]
