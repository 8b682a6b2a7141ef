"""Waveguide lattice geometries and the distortion fields applied to them.

Positions are in micrometres throughout. A honeycomb lattice is stored as a
flat site list with a sublattice label per site, so distortions and disorder
act on plain coordinate arrays and the coupling Hamiltonian only ever sees
positions.
"""

from __future__ import annotations

import dataclasses
import json
import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree

SUBLATTICE_A = 0
SUBLATTICE_B = 1

# Honeycomb basis: nearest-neighbour vectors from an A site and the two
# primitive translations, in units of the lattice constant.
NEIGHBOR_VECTORS = np.array([
    [0.0, 1.0],
    [math.sqrt(3.0) / 2.0, -0.5],
    [-math.sqrt(3.0) / 2.0, -0.5],
])
PRIMITIVE_VECTORS = np.array([
    [math.sqrt(3.0), 0.0],
    [math.sqrt(3.0) / 2.0, 1.5],
])


class GeometryError(ValueError):
    """Raised when a site layout violates the minimum-spacing rule."""


@dataclass(frozen=True)
class LatticeGeometry:
    """Site positions (N, 2), per-site sublattice labels and the bounding box.

    box is (xmin, ymin, xmax, ymax). Instances are treated as immutable;
    all distortions return a new geometry.
    """

    positions: np.ndarray
    sublattice: np.ndarray
    lattice_constant: float
    box: tuple[float, float, float, float]

    def __post_init__(self):
        pos = np.asarray(self.positions, dtype=float)
        lab = np.asarray(self.sublattice, dtype=np.int8)
        if pos.ndim != 2 or pos.shape[1] != 2 or pos.shape[0] != lab.shape[0]:
            raise ValueError("positions must be (N, 2) with one label per site")
        object.__setattr__(self, "positions", pos)
        object.__setattr__(self, "sublattice", lab)

    @property
    def n_sites(self) -> int:
        return self.positions.shape[0]

    def validate_spacing(self) -> float:
        """Smallest pairwise distance; raises below 0.2 lattice constants."""
        tree = cKDTree(self.positions)
        dist, _ = tree.query(self.positions, k=2)
        smallest = float(dist[:, 1].min()) if self.n_sites > 1 else math.inf
        if smallest < 0.2 * self.lattice_constant:
            raise GeometryError(
                f"sites closer than 0.2 a0: min distance {smallest:.3f}"
            )
        return smallest

    def with_positions(self, positions: np.ndarray) -> "LatticeGeometry":
        return dataclasses.replace(self, positions=np.asarray(positions, float))


def graphene_lattice(rows: int, cols: int, lattice_constant: float = 10.0) -> LatticeGeometry:
    """Honeycomb patch of rows x cols unit cells, two sites per cell."""
    if rows <= 0 or cols <= 0 or lattice_constant <= 0:
        raise ValueError("rows, cols and lattice constant must be positive")
    a1, a2 = PRIMITIVE_VECTORS * lattice_constant
    offset = NEIGHBOR_VECTORS[0] * lattice_constant
    cells = np.array([m * a1 + n * a2 for n in range(rows) for m in range(cols)])
    positions = np.concatenate([cells, cells + offset])
    labels = np.concatenate([
        np.full(len(cells), SUBLATTICE_A, dtype=np.int8),
        np.full(len(cells), SUBLATTICE_B, dtype=np.int8),
    ])
    box = (
        float(positions[:, 0].min()), float(positions[:, 1].min()),
        float(positions[:, 0].max()), float(positions[:, 1].max()),
    )
    geometry = LatticeGeometry(positions, labels, lattice_constant, box)
    geometry.validate_spacing()
    return geometry


def graphene_rectangle(width: float, height: float,
                       lattice_constant: float = 10.0,
                       origin: tuple[float, float] = (0.0, 0.0)) -> LatticeGeometry:
    """Honeycomb sites cut to an axis-aligned box of the given size.

    origin shifts the cut window across the infinite lattice, which
    changes boundary membership; positions are reported relative to the
    window corner.
    """
    a0 = lattice_constant
    x0, y0 = origin
    cols = int(width / (math.sqrt(3.0) * a0)) + 3
    rows = int(height / (1.5 * a0)) + 3
    a1, a2 = PRIMITIVE_VECTORS * a0
    offset = NEIGHBOR_VECTORS[0] * a0
    sites = []
    labels = []
    for n in range(-2, rows + 2):
        for m in range(-2 - n // 2, cols + 2):
            base = m * a1 + n * a2
            for lab, pos in ((SUBLATTICE_A, base), (SUBLATTICE_B, base + offset)):
                x, y = pos[0] - x0, pos[1] - y0
                if -1e-9 <= x <= width + 1e-9 and -1e-9 <= y <= height + 1e-9:
                    sites.append((x, y))
                    labels.append(lab)
    geometry = LatticeGeometry(
        np.array(sites), np.array(labels, dtype=np.int8), a0,
        (0.0, 0.0, float(width), float(height)),
    )
    geometry.validate_spacing()
    return geometry


# Window calibrated so the rectangular cut contains exactly the fabricated
# 1192-waveguide count at the 10 um default spacing; frozen in tests.
THESIS_SITE_COUNT = 1192
THESIS_BOX = (390.0, 390.0)
THESIS_ORIGIN = (2.5, 0.0)


def thesis_lattice(lattice_constant: float = 10.0) -> LatticeGeometry:
    """Rectangle preset matching the fabricated lattice's site count."""
    scale = lattice_constant / 10.0
    return graphene_rectangle(
        THESIS_BOX[0] * scale, THESIS_BOX[1] * scale, lattice_constant,
        origin=(THESIS_ORIGIN[0] * scale, THESIS_ORIGIN[1] * scale),
    )


def ssh_chain(n_sites: int, spacing: float, dimerization: float = 0.0,
              wall_at: int | None = None) -> LatticeGeometry:
    """Dimerized chain along x with alternating A/B labels.

    Gaps alternate spacing*(1 -+ dimerization) so an exponential coupling
    law yields two hopping strengths. wall_at reverses the dimerization
    pattern from that bond onward, creating a domain wall.
    """
    if n_sites <= 1 or spacing <= 0:
        raise ValueError("need at least two sites and positive spacing")
    if not -1.0 < dimerization < 1.0:
        raise ValueError("dimerization must lie in (-1, 1)")
    gaps = np.empty(n_sites - 1)
    for i in range(n_sites - 1):
        sign = -1.0 if i % 2 == 0 else 1.0
        if wall_at is not None and i >= wall_at:
            sign = -sign
        gaps[i] = spacing * (1.0 + sign * dimerization)
    x = np.concatenate([[0.0], np.cumsum(gaps)])
    positions = np.column_stack([x, np.zeros(n_sites)])
    labels = (np.arange(n_sites) % 2).astype(np.int8)
    box = (0.0, 0.0, float(x[-1]), 0.0)
    return LatticeGeometry(positions, labels, spacing, box)


# --- mass/distortion fields ---------------------------------------------------

@dataclass(frozen=True)
class VortexField:
    """Complex order parameter with a single phase vortex.

    delta0 is the saturated magnitude in coupling units (1/um), width the
    tanh core radius in um, winding the integer phase winding and offset
    the constant phase.
    """

    delta0: float
    width: float
    winding: int = 1
    offset: float = math.pi / 2
    center: tuple[float, float] = (0.0, 0.0)

    def __post_init__(self):
        if self.width <= 0:
            raise ValueError("vortex width must be positive")

    def delta(self, positions: np.ndarray) -> np.ndarray:
        rel = np.asarray(positions, float) - np.asarray(self.center)
        radius = np.hypot(rel[..., 0], rel[..., 1])
        angle = np.arctan2(rel[..., 1], rel[..., 0])
        return (
            self.delta0
            * np.tanh(radius / self.width)
            * np.exp(1j * (self.offset + self.winding * angle))
        )


@dataclass(frozen=True)
class TwoVortexField:
    """Product of two tanh cores with summed winding phases."""

    delta0: float
    width: float
    centers: tuple[tuple[float, float], tuple[float, float]]
    winding: int = 1
    offset: float = math.pi / 2

    def delta(self, positions: np.ndarray) -> np.ndarray:
        pos = np.asarray(positions, float)
        magnitude = np.full(pos.shape[:-1], self.delta0, dtype=float)
        phase = np.full(pos.shape[:-1], self.offset, dtype=float)
        for center in self.centers:
            rel = pos - np.asarray(center)
            radius = np.hypot(rel[..., 0], rel[..., 1])
            magnitude = magnitude * np.tanh(radius / self.width)
            phase = phase + self.winding * np.arctan2(rel[..., 1], rel[..., 0])
        return magnitude * np.exp(1j * phase)


def vortex_delta(position, field) -> complex | np.ndarray:
    """Order-parameter value at one position or an array of positions."""
    value = field.delta(position)
    return complex(value) if np.ndim(value) == 0 else value


def dirac_point(lattice_constant: float) -> np.ndarray:
    """The K+ corner of the Brillouin zone."""
    return np.array([4.0 * math.pi / (3.0 * math.sqrt(3.0) * lattice_constant), 0.0])


def kekule_displacement(geometry: LatticeGeometry, field,
                        xi_eff: float) -> np.ndarray:
    """Per-site displacement vectors realizing the order parameter.

    Each site moves by (i xi_eff) Delta(r) e^{-i G r} (1, +-i) + c.c. with
    G twice the Dirac momentum and the spinor sign set by the sublattice.
    The sign of the exponent is fixed by requiring the induced bond-length
    pattern to land in the mass channel that opens the spectral gap; the
    opposite sign produces an inert valley-diagonal texture.
    """
    pos = geometry.positions
    g_vector = 2.0 * dirac_point(geometry.lattice_constant)
    w = 1j * xi_eff * field.delta(pos) * np.exp(-1j * (pos @ g_vector))
    sign = np.where(geometry.sublattice == SUBLATTICE_A, 1.0, -1.0)
    return np.column_stack([2.0 * w.real, -2.0 * sign * w.imag])


def kekule_displace(geometry: LatticeGeometry, field, xi_eff: float) -> LatticeGeometry:
    """Geometry with sites shifted by the order-parameter displacement field.

    Displacements beyond 0.3 lattice constants leave the linear-response
    regime the displacement rule is derived in, so that raises a warning
    rather than an error.
    """
    shift = kekule_displacement(geometry, field, xi_eff)
    largest = float(np.hypot(shift[:, 0], shift[:, 1]).max())
    if largest > 0.3 * geometry.lattice_constant:
        warnings.warn(
            f"max displacement {largest:.3f} um exceeds 0.3 a0; "
            "the displacement rule is only perturbatively valid",
            stacklevel=2,
        )
    return geometry.with_positions(geometry.positions + shift)


def displacement_scale(field, target: float = 0.8) -> float:
    """xi_eff such that the largest displacement magnitude equals target um."""
    return target / (2.0 * field.delta0)


def apply_disorder(geometry: LatticeGeometry, max_shift: float,
                   seed: int) -> LatticeGeometry:
    """Shift every site by an independent uniform-in-disk sample."""
    if max_shift < 0:
        raise ValueError("max shift must be non-negative")
    if max_shift == 0:
        return geometry
    rng = np.random.default_rng(seed)
    radius = max_shift * np.sqrt(rng.random(geometry.n_sites))
    angle = 2.0 * math.pi * rng.random(geometry.n_sites)
    shift = np.column_stack([radius * np.cos(angle), radius * np.sin(angle)])
    return geometry.with_positions(geometry.positions + shift)


# --- coupling law -------------------------------------------------------------

@dataclass(frozen=True)
class CouplingModel:
    """Evanescent coupling -amplitude*exp(-decay*d) within a cutoff radius.

    Defaults give a nearest-neighbour coupling of about 0.006/um on the
    10 um lattice, i.e. a beat length on the mm scale, with the
    next-nearest-neighbour coupling below 5% of it.
    """

    amplitude: float = 0.4
    decay: float = 0.42
    cutoff: float = 13.5

    def __post_init__(self):
        if self.decay <= 0 or self.amplitude <= 0 or self.cutoff <= 0:
            raise ValueError("coupling parameters must be positive")

    def coupling(self, distance) -> np.ndarray:
        return self.amplitude * np.exp(-self.decay * np.asarray(distance, float))

    def neighbor_ratio(self, lattice_constant: float) -> float:
        """Next-nearest over nearest coupling on an undistorted honeycomb."""
        return float(np.exp(-self.decay * lattice_constant * (math.sqrt(3.0) - 1.0)))


def nearest_coupling(model: CouplingModel, lattice_constant: float) -> float:
    return float(model.coupling(lattice_constant))


def fermi_velocity(model: CouplingModel, lattice_constant: float) -> float:
    """Slope of the linearized honeycomb dispersion, 3 t a0 / 2."""
    return 1.5 * nearest_coupling(model, lattice_constant) * lattice_constant


def mass_matched_scale(model: CouplingModel, lattice_constant: float) -> float:
    """xi_eff at which the realized bond-pattern mass equals the field value.

    Linearizing the coupling law, the displacement pattern modulates the
    three bond lengths of every cell with amplitudes in ratio 4:2:2 whose
    mass-channel projection is 6 decay t xi_eff |Delta|; this returns the
    scale making that projection exactly |Delta|, so the spectral gap of
    the distorted lattice matches the order-parameter amplitude.
    """
    return 1.0 / (6.0 * model.decay * nearest_coupling(model, lattice_constant))


# --- serialization ------------------------------------------------------------

def geometry_to_json(geometry: LatticeGeometry) -> str:
    payload = {
        "lattice_constant": geometry.lattice_constant,
        "box": list(geometry.box),
        "sites": [
            {"x": float(x), "y": float(y), "sublattice": "AB"[int(lab)]}
            for (x, y), lab in zip(geometry.positions, geometry.sublattice)
        ],
    }
    return json.dumps(payload, indent=2)


def geometry_from_json(text: str) -> LatticeGeometry:
    payload = json.loads(text)
    sites = payload["sites"]
    positions = np.array([[s["x"], s["y"]] for s in sites], dtype=float)
    labels = np.array(
        ["AB".index(s["sublattice"]) for s in sites], dtype=np.int8
    )
    return LatticeGeometry(
        positions, labels, float(payload["lattice_constant"]),
        tuple(payload["box"]),
    )
