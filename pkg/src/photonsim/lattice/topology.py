"""Band-structure invariants and closed-form bound states."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import cumulative_trapezoid

from .geometry import NEIGHBOR_VECTORS

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)


class GapClosedError(ValueError):
    """The sampled loop or band structure touches zero gap."""


class NoModeError(ValueError):
    """The mass profile does not support a bound state."""


def ssh_bloch(k: float, t_left: float, t_right: float) -> np.ndarray:
    """Two-band Bloch Hamiltonian of the dimerized chain at momentum k."""
    return (t_right + t_left * math.cos(k)) * SIGMA_X + t_left * math.sin(k) * SIGMA_Y


def ssh_dispersion(k, t_left: float, t_right: float):
    """The +-E bands; the gap at k = pi is |t_right - t_left|."""
    k = np.asarray(k, dtype=float)
    energy = np.sqrt(
        t_right**2 + t_left**2 + 2.0 * t_right * t_left * np.cos(k)
    )
    return -energy, energy


def ssh_loop(t_left: float, t_right: float, samples: int = 361) -> np.ndarray:
    """Off-diagonal Bloch component sampled over one Brillouin zone."""
    k = np.linspace(0.0, 2.0 * math.pi, samples, endpoint=False)
    return t_right + t_left * np.exp(-1j * k)


def winding_number(loop: np.ndarray, residue_limit: float = 0.01) -> int:
    """Signed number of times a sampled closed curve encircles the origin."""
    q = np.asarray(loop, dtype=complex)
    if q.size < 3:
        raise ValueError("need at least three samples to close a loop")
    if np.abs(q).min() <= 1e-8:
        raise GapClosedError("loop passes through the origin; gap closed")
    ratios = np.roll(q, -1) / q
    total = float(np.angle(ratios).sum() / (2.0 * math.pi))
    nearest = round(total)
    if abs(total - nearest) >= residue_limit:
        raise ValueError(
            f"winding residue {abs(total - nearest):.3f}; sample the loop finer"
        )
    return int(nearest)


def ssh_winding(t_left: float, t_right: float, samples: int = 361) -> int:
    return winding_number(ssh_loop(t_left, t_right, samples))


@dataclass(frozen=True)
class BoundState:
    """Normalized one-dimensional mode amplitudes on a grid."""

    grid: np.ndarray
    amplitude: np.ndarray
    component: int


def jackiw_rebbi_mode(mass, t_left: float, grid: np.ndarray) -> BoundState:
    """Domain-wall bound state of the continuum two-band model.

    The mass profile is sampled on the grid (a callable or an array); it
    must change sign exactly once. The normalizable solution decays as
    exp(-(1/t) integral of m) and lives on one spinor component; a mass of
    the opposite orientation moves it to the other component.
    """
    grid = np.asarray(grid, dtype=float)
    values = np.asarray(mass(grid) if callable(mass) else mass, dtype=float)
    if values.shape != grid.shape:
        raise ValueError("mass samples must match the grid")
    signs = np.sign(values[values != 0.0])
    flips = int(np.count_nonzero(np.diff(signs)))
    if flips != 1:
        raise NoModeError(f"mass changes sign {flips} times; need exactly one")
    rising = signs[0] < 0.0
    integral = cumulative_trapezoid(values, grid, initial=0.0)
    zero_idx = int(np.argmin(np.abs(grid)))
    integral -= integral[zero_idx]
    exponent = -integral / t_left if rising else integral / t_left
    amplitude = np.exp(exponent - exponent.max())
    amplitude /= np.linalg.norm(amplitude)
    return BoundState(grid, amplitude, component=0 if rising else 1)


def berry_phase(states) -> float:
    """Phase of the cyclic product of neighbouring-state overlaps."""
    states = [np.asarray(s, dtype=complex) for s in states]
    product = 1.0 + 0.0j
    for current, following in zip(states, states[1:] + states[:1]):
        overlap = np.vdot(current, following)
        if abs(overlap) < 1e-12:
            raise ValueError("consecutive states are orthogonal; phase undefined")
        product *= overlap
    return float(np.angle(product))


def chern_number(bloch, band: int = 0, grid: int = 40,
                 k1_range: tuple[float, float] = (0.0, 2.0 * math.pi),
                 k2_range: tuple[float, float] = (0.0, 2.0 * math.pi),
                 residue_limit: float = 0.01) -> int:
    """Plaquette Berry-flux sum of one band over a closed parameter patch.

    bloch(k1, k2) must return a Hermitian matrix; the ranges are sampled
    endpoint-inclusive, so a Brillouin zone is passed as a full period and
    a sphere parameterization as pole to pole.
    """
    k1 = np.linspace(k1_range[0], k1_range[1], grid + 1)
    k2 = np.linspace(k2_range[0], k2_range[1], grid + 1)
    states = np.empty((grid + 1, grid + 1), dtype=object)
    for i, a in enumerate(k1):
        for j, b in enumerate(k2):
            energies, vectors = np.linalg.eigh(np.asarray(bloch(a, b), dtype=complex))
            gaps = np.abs(np.delete(energies, band) - energies[band])
            if gaps.min() <= 1e-8:
                raise GapClosedError(f"band {band} touches another at k=({a}, {b})")
            states[i, j] = vectors[:, band]

    def link(u, v):
        overlap = np.vdot(u, v)
        if abs(overlap) < 1e-12:
            raise GapClosedError("orthogonal neighbouring states; refine the grid")
        return overlap / abs(overlap)

    flux = 0.0
    for i in range(grid):
        for j in range(grid):
            product = (
                link(states[i, j], states[i + 1, j])
                * link(states[i + 1, j], states[i + 1, j + 1])
                * link(states[i + 1, j + 1], states[i, j + 1])
                * link(states[i, j + 1], states[i, j])
            )
            flux += float(np.angle(product))
    total = flux / (2.0 * math.pi)
    nearest = round(total)
    if abs(total - nearest) >= residue_limit:
        raise ValueError(
            f"Chern residue {abs(total - nearest):.3f}; refine the grid"
        )
    return int(nearest)


def sphere_cover_hamiltonian(polar: float, azimuth: float) -> np.ndarray:
    """Two-band Hamiltonian whose lower band covers the Bloch sphere once."""
    d = np.array([
        math.sin(polar) * math.cos(azimuth),
        math.sin(polar) * math.sin(azimuth),
        math.cos(polar),
    ])
    return np.array([
        [d[2], d[0] - 1j * d[1]],
        [d[0] + 1j * d[1], -d[2]],
    ], dtype=complex)


def graphene_dispersion(k, hopping: float, lattice_constant: float):
    """The two honeycomb bands -+|Phi(k)| from the three-neighbour sum."""
    k = np.asarray(k, dtype=float)
    vectors = NEIGHBOR_VECTORS * lattice_constant
    phi = -hopping * np.exp(1j * (k @ vectors.T)).sum(axis=-1)
    magnitude = np.abs(phi)
    return -magnitude, magnitude
