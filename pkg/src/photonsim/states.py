"""Single-photon internal states and their overlaps.

A photon's internal state lives in a finite orthonormal basis (temporal
slots tensored with polarization, plus optional auxiliary slots used to
model impurity). Gaussian wavepackets never appear as sampled functions:
only their pairwise overlaps matter, and those have closed forms, so
scenarios embed the temporal Gram matrix into a finite basis exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

GRAM_COLLAPSE_TOL = 1e-12  # squared residual below this is numerical noise


class UndefinedTriadPhase(ValueError):
    """Raised when a triad phase is requested but an overlap vanishes."""


@dataclass(frozen=True)
class GaussianWavepacket:
    """Gaussian temporal mode: arrival delay, width and carrier frequency."""

    delay: float
    width: float
    frequency: float = 0.0

    def __post_init__(self):
        if self.width <= 0:
            raise ValueError(f"wavepacket width must be positive, got {self.width}")


def gaussian_overlap(a: GaussianWavepacket, b: GaussianWavepacket) -> complex:
    """Overlap of two equal-width Gaussian wavepackets.

    exp(-(t_a - t_b)^2 / (4 sigma^2) - i Omega (t_a - t_b)). Widths and
    carrier frequencies must match; use unequal_width_overlap otherwise.
    """
    if a.width != b.width:
        raise ValueError("equal widths required; see unequal_width_overlap")
    if a.frequency != b.frequency:
        raise ValueError("carrier frequencies must match")
    dt = a.delay - b.delay
    return complex(math.exp(-(dt * dt) / (4.0 * a.width**2))) * np.exp(
        -1j * a.frequency * dt
    )


def unequal_width_overlap(a: GaussianWavepacket, b: GaussianWavepacket) -> complex:
    """Overlap of two normalized Gaussians with possibly different widths.

    sqrt(2 s_a s_b / (s_a^2 + s_b^2)) * exp(-(t_a - t_b)^2 / (2 (s_a^2 + s_b^2))
    - i Omega (t_a - t_b)). Reduces to gaussian_overlap at equal widths.
    """
    if a.frequency != b.frequency:
        raise ValueError("carrier frequencies must match")
    sa, sb = a.width, b.width
    ssum = sa * sa + sb * sb
    dt = a.delay - b.delay
    mag = math.sqrt(2.0 * sa * sb / ssum) * math.exp(-(dt * dt) / (2.0 * ssum))
    return complex(mag) * np.exp(-1j * a.frequency * dt)


@dataclass(frozen=True)
class PolarizationState:
    """Two-component polarization amplitude (H, V)."""

    h: complex
    v: complex

    def __post_init__(self):
        norm = abs(self.h) ** 2 + abs(self.v) ** 2
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(f"polarization state not normalized: |.|^2 = {norm}")

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.h, self.v], dtype=complex)


def polarization_overlap(a: PolarizationState, b: PolarizationState) -> complex:
    return complex(np.conj(a.h) * b.h + np.conj(a.v) * b.v)


@dataclass(frozen=True)
class InternalState:
    """Unit vector over a finite orthonormal internal basis.

    basis is an opaque label; overlaps are only defined between states
    carrying the same label.
    """

    amplitudes: np.ndarray
    basis: str = "generic"

    def __post_init__(self):
        amp = np.asarray(self.amplitudes, dtype=complex)
        object.__setattr__(self, "amplitudes", amp)
        if amp.ndim != 1:
            raise ValueError("amplitudes must be a vector")
        norm = np.linalg.norm(amp)
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(f"internal state not normalized: norm = {norm}")

    @property
    def dim(self) -> int:
        return self.amplitudes.shape[0]


def overlap(a: InternalState, b: InternalState) -> complex:
    """Inner product <a|b> of two internal states in a shared basis."""
    if a.basis != b.basis:
        raise ValueError(f"basis mismatch: {a.basis!r} vs {b.basis!r}")
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def random_states(n: int, dim: int, rng=None,
                  basis: str = "random") -> list[InternalState]:
    """n Haar-like random internal states over a shared dim-level basis."""
    rng = np.random.default_rng(rng)
    out = []
    for _ in range(n):
        raw = rng.normal(size=dim) + 1j * rng.normal(size=dim)
        out.append(InternalState(raw / np.linalg.norm(raw), basis))
    return out


def distinguishability_matrix(states) -> np.ndarray:
    """Gram matrix S[i][j] = <phi_i|phi_j> of a list of internal states."""
    n = len(states)
    s = np.empty((n, n), dtype=complex)
    for i in range(n):
        s[i, i] = 1.0
        for j in range(i + 1, n):
            s[i, j] = overlap(states[i], states[j])
            s[j, i] = np.conj(s[i, j])
    return s


def check_distinguishability(s: np.ndarray, atol: float = 1e-10) -> np.ndarray:
    """Validate Gram-matrix structure: hermitian, unit diagonal, PSD, |S| <= 1.

    Returns the matrix as a complex ndarray for convenience.
    """
    s = np.asarray(s, dtype=complex)
    if s.ndim != 2 or s.shape[0] != s.shape[1]:
        raise ValueError(f"distinguishability matrix must be square, got {s.shape}")
    if np.abs(s - s.conj().T).max() > atol:
        raise ValueError("distinguishability matrix is not hermitian")
    if np.abs(np.diag(s) - 1.0).max() > atol:
        raise ValueError("distinguishability matrix diagonal must be 1")
    if np.abs(s).max() > 1.0 + atol:
        raise ValueError("overlap moduli must not exceed 1")
    if s.shape[0] > 1:
        w = np.linalg.eigvalsh(0.5 * (s + s.conj().T))
        if w.min() < -1e-10 * max(1.0, w.max()):
            raise ValueError(f"matrix not positive semidefinite: min eig {w.min()}")
    return s


def states_from_gram(gram: np.ndarray, basis: str = "embedded") -> list[InternalState]:
    """Concrete unit vectors realizing a given Gram matrix.

    Sequential Gram-Schmidt in coordinates: state i gets at most one new
    basis dimension, with a real nonnegative amplitude on it. A squared
    residual below GRAM_COLLAPSE_TOL collapses the dimension instead of
    amplifying numerical noise.
    """
    gram = check_distinguishability(gram)
    n = gram.shape[0]
    vecs = np.zeros((n, n), dtype=complex)
    used = 0
    for i in range(n):
        if used > 0:
            prev = vecs[:i, :used]
            coeff, *_ = np.linalg.lstsq(prev.conj(), gram[:i, i], rcond=None)
            vecs[i, :used] = coeff
        residual_sq = 1.0 - float(np.sum(np.abs(vecs[i, :used]) ** 2))
        if residual_sq > GRAM_COLLAPSE_TOL:
            vecs[i, used] = math.sqrt(residual_sq)
            used += 1
        else:
            # renormalize the collapsed vector so downstream norms stay exact
            vecs[i, :used] /= np.linalg.norm(vecs[i, :used])
    return [InternalState(vecs[i, :used].copy(), basis=basis) for i in range(n)]


def product_states(
    wavepackets, polarizations, basis: str = "time*pol"
) -> list[InternalState]:
    """Internal states for photons with Gaussian temporal modes and polarizations.

    The temporal Gram matrix is embedded exactly into a finite slot basis;
    each state is the tensor product (time slot vector) x (polarization).
    """
    if len(wavepackets) != len(polarizations):
        raise ValueError("one polarization per wavepacket required")
    n = len(wavepackets)
    tgram = np.empty((n, n), dtype=complex)
    for i in range(n):
        tgram[i, i] = 1.0
        for j in range(i + 1, n):
            tgram[i, j] = unequal_width_overlap(wavepackets[i], wavepackets[j])
            tgram[j, i] = np.conj(tgram[i, j])
    tvecs = states_from_gram(tgram, basis="time")
    dim = max(v.dim for v in tvecs)
    out = []
    for tv, pol in zip(tvecs, polarizations):
        padded = np.zeros(dim, dtype=complex)
        padded[: tv.dim] = tv.amplitudes
        out.append(InternalState(np.kron(padded, pol.vector), basis=basis))
    return out


def gram_schmidt_states(moduli, phases, basis: str = "gs") -> list[InternalState]:
    """States from the triangular overlap parameterization.

    State 0 is the first basis vector. State i >= 1 takes moduli[i] (length i)
    and phases[i]: sqrt(1 - sum s^2) on basis vector 0 plus s_k e^{i gamma_k}
    on basis vectors 1..i. Requires sum of squared moduli <= 1 per state.
    """
    n = len(moduli)
    if len(phases) != n:
        raise ValueError("moduli and phases must have equal length")
    vecs = np.zeros((n, n), dtype=complex)
    for i in range(n):
        s_row = list(moduli[i] or [])
        g_row = list(phases[i] or [])
        if len(s_row) != i or len(g_row) != i:
            raise ValueError(f"state {i} needs exactly {i} moduli and phases")
        ssq = sum(s * s for s in s_row)
        if ssq > 1.0 + 1e-12:
            raise ValueError(f"state {i} moduli leave the unit disk: sum s^2 = {ssq}")
        vecs[i, 0] = math.sqrt(max(0.0, 1.0 - ssq))
        for k, (s, g) in enumerate(zip(s_row, g_row), start=1):
            vecs[i, k] = s * np.exp(1j * g)
    return [InternalState(vecs[i], basis=basis) for i in range(n)]


def independent_parameter_rank(
    param_fn, x0, step: float = 1e-6, sv_tol: float = 1e-8
) -> int:
    """Numeric rank of the map from parameters to pairwise overlaps.

    param_fn maps a real parameter vector to a list of internal states; the
    Jacobian of the stacked off-diagonal overlap vector (real and imaginary
    parts) is estimated by central differences and its rank counted as the
    number of singular values above sv_tol.
    """
    x0 = np.asarray(x0, dtype=float)

    def overlap_vector(x):
        s = distinguishability_matrix(param_fn(x))
        n = s.shape[0]
        parts = []
        for i in range(n):
            for j in range(i + 1, n):
                parts.extend((s[i, j].real, s[i, j].imag))
        return np.array(parts)

    cols = []
    for p in range(x0.size):
        dx = np.zeros_like(x0)
        dx[p] = step
        cols.append((overlap_vector(x0 + dx) - overlap_vector(x0 - dx)) / (2 * step))
    jac = np.column_stack(cols)
    sv = np.linalg.svd(jac, compute_uv=False)
    return int(np.sum(sv > sv_tol))


def triad_phase_from_overlaps(o_ab: complex, o_bc: complex, o_ca: complex) -> float:
    """arg(<a|b><b|c><c|a>) folded into [0, 2pi)."""
    for o in (o_ab, o_bc, o_ca):
        if abs(o) < 1e-15:
            raise UndefinedTriadPhase("triad phase undefined: an overlap vanishes")
    phi = float(np.angle(o_ab * o_bc * o_ca))
    return phi % (2.0 * math.pi)


def triad_phase(a: InternalState, b: InternalState, c: InternalState) -> float:
    return triad_phase_from_overlaps(overlap(a, b), overlap(b, c), overlap(c, a))


def cyclic_trace(rhos) -> complex:
    """Trace of the ordered product of density matrices.

    For pure projectors this reduces to the overlap product around the cycle.
    """
    rhos = [np.asarray(r, dtype=complex) for r in rhos]
    if not rhos:
        raise ValueError("at least one density matrix required")
    d = rhos[0].shape[0]
    for r in rhos:
        if r.shape != (d, d):
            raise ValueError("density matrices must share one square dimension")
    prod = rhos[0]
    for r in rhos[1:]:
        prod = prod @ r
    return complex(np.trace(prod))


def pure_density(state: InternalState) -> np.ndarray:
    v = state.amplitudes
    return np.outer(v, v.conj())


def impure_state(
    state: InternalState, purity: float, aux_slots: int = 1, aux_index: int = 0
) -> np.ndarray:
    """Density matrix mixing a pure state with one auxiliary slot.

    The physical amplitudes are padded with aux_slots extra orthogonal
    dimensions and a weight (1 - purity) sits on slot aux_index. Distinct
    photons should use distinct slots so their mixed parts never overlap.
    """
    if not 0.0 < purity <= 1.0:
        raise ValueError(f"purity must lie in (0, 1], got {purity}")
    if not 0 <= aux_index < aux_slots:
        raise ValueError("aux_index outside the allocated slots")
    d = state.dim
    psi = np.zeros(d + aux_slots, dtype=complex)
    psi[:d] = state.amplitudes
    rho = purity * np.outer(psi, psi.conj())
    rho[d + aux_index, d + aux_index] += 1.0 - purity
    return rho
