"""Canonical linear interferometers and unitary reconstruction.

Builders return exact matrices (balanced two-, three- and four-mode
splitters); reconstruction routines recover a unitary from measured
moduli or from two-beam interference fringes, always in the unit-bordered
gauge (first row and column real nonnegative).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize


class ReconstructionError(RuntimeError):
    """No acceptable unitary completion / fit for the given data."""


@dataclass(frozen=True)
class Interferometer:
    """An m-mode linear optical network, row = input mode, column = output.

    relaxed marks matrices taken from measured data that are not exactly
    unitary; builders always produce relaxed=False.
    """

    matrix: np.ndarray
    label: str = ""
    relaxed: bool = False

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"interferometer matrix must be square, got {m.shape}")
        object.__setattr__(self, "matrix", m)
        if not self.relaxed and unitarity_residual(m) > 1e-8:
            raise ValueError(f"matrix {self.label!r} is not unitary")

    def __array__(self, dtype=None):
        return self.matrix if dtype is None else self.matrix.astype(dtype)

    @property
    def modes(self) -> int:
        return self.matrix.shape[0]


def unitarity_residual(u) -> float:
    u = np.asarray(u, dtype=complex)
    return float(np.abs(u.conj().T @ u - np.eye(u.shape[0])).max())


def beamsplitter() -> Interferometer:
    """Balanced two-mode splitter, real convention."""
    m = np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2)
    return Interferometer(m, label="beamsplitter")


def tritter() -> Interferometer:
    """Balanced three-mode splitter built from the cubic roots of unity."""
    z = np.exp(2j * math.pi / 3)
    m = np.array([[1, 1, 1], [1, z**2, z], [1, z, z**2]], dtype=complex) / math.sqrt(3)
    return Interferometer(m, label="tritter")


def quitter(chi: float) -> Interferometer:
    """Balanced four-mode splitter with one free internal phase chi."""
    e = np.exp(1j * chi)
    m = (
        np.array(
            [
                [1, 1, 1, 1],
                [1, 1, -1, -1],
                [1, -1, e, -e],
                [1, -1, -e, e],
            ],
            dtype=complex,
        )
        / 2.0
    )
    return Interferometer(m, label=f"quitter(chi={chi})")


def measured_tritter() -> Interferometer:
    """The reconstructed laboratory tritter, kept verbatim (not unitary)."""
    m = np.array(
        [
            [0.6, 0.6, 0.53],
            [0.6, -0.28 + 0.48j, -0.27 - 0.48j],
            [0.6, -0.28 - 0.5j, -0.27 + 0.48j],
        ],
        dtype=complex,
    )
    return Interferometer(m, label="measured tritter", relaxed=True)


def _best_diagonal_trace(m: np.ndarray) -> float:
    # max over diagonal phase matrices D of |Tr(D m)| = sum of |diagonal|
    return float(np.abs(np.diag(m)).sum())


def gauge_fidelity(a, b, allow_conjugate: bool = True, iterations: int = 60) -> float:
    """|Tr(A^dag D_L B D_R)| / m maximized over diagonal phase gauges.

    Alternating updates: each half-step sets one diagonal to cancel the
    phases of the current partial traces, which is the exact optimum for
    that half. Optionally also tries the complex conjugate of b (a balanced
    splitter and its conjugate are physically inequivalent but share moduli).
    """
    a = np.asarray(a, dtype=complex)
    candidates = [np.asarray(b, dtype=complex)]
    if allow_conjugate:
        candidates.append(np.conj(np.asarray(b, dtype=complex)))
    m = a.shape[0]
    best = 0.0
    for cand in candidates:
        dl = np.ones(m, dtype=complex)
        dr = np.ones(m, dtype=complex)
        prev = -1.0
        for _ in range(iterations):
            # optimal left phases for fixed right ones
            g = (cand * dr[None, :]) @ a.conj().T
            diag = np.diag(g)
            dl = np.where(np.abs(diag) > 0, np.conj(diag) / np.abs(diag), 1.0)
            # optimal right phases for fixed left ones
            g = a.conj().T @ (dl[:, None] * cand)
            diag = np.diag(g)
            dr = np.where(np.abs(diag) > 0, np.conj(diag) / np.abs(diag), 1.0)
            val = float(np.abs(np.trace(a.conj().T @ (dl[:, None] * cand * dr[None, :]))))
            if abs(val - prev) < 1e-14:
                break
            prev = val
        best = max(best, prev / m)
    return best


def _unit_bordered(moduli: np.ndarray, phases: np.ndarray) -> np.ndarray:
    m = moduli.shape[0]
    u = np.array(moduli, dtype=complex)
    u[1:, 1:] = moduli[1:, 1:] * np.exp(1j * phases.reshape(m - 1, m - 1))
    return u


def phases_from_amplitudes(moduli, seed: int = 0, restarts: int = 12) -> Interferometer:
    """Complete a matrix of moduli into a unitary by choosing interior phases.

    The first row and column stay real nonnegative (unit-bordered gauge);
    the (m-1)^2 interior phases minimize ||U^dag U - I||_F^2 by local
    optimization from several deterministic starting points.
    """
    moduli = np.asarray(moduli, dtype=float)
    if moduli.ndim != 2 or moduli.shape[0] != moduli.shape[1]:
        raise ValueError("moduli must form a square matrix")
    if (moduli < 0).any():
        raise ValueError("moduli must be nonnegative")
    m = moduli.shape[0]
    sq = moduli**2
    if np.abs(sq.sum(axis=0) - 1).max() > 0.05 or np.abs(sq.sum(axis=1) - 1).max() > 0.05:
        raise ValueError("row/column power sums deviate from 1 by more than 5%")

    def cost(phases):
        u = _unit_bordered(moduli, phases)
        d = u.conj().T @ u - np.eye(m)
        return float(np.sum(np.abs(d) ** 2))

    rng = np.random.default_rng(seed)
    n_ph = (m - 1) ** 2
    starts = [np.zeros(n_ph)]
    starts += [rng.uniform(0, 2 * math.pi, n_ph) for _ in range(restarts - 1)]
    best = None
    for x0 in starts:
        res = minimize(cost, x0, method="L-BFGS-B")
        if best is None or res.fun < best.fun:
            best = res
    u = _unit_bordered(moduli, best.x)
    if unitarity_residual(u) > 0.1:
        raise ReconstructionError(
            f"no unitary completion found (residual {unitarity_residual(u):.3g})"
        )
    return Interferometer(u, label="reconstructed", relaxed=True)


def synthesize_fringes(u, n_samples: int = 16, noise: float = 0.0, rng=None):
    """Simulated characterization data for a transfer matrix.

    Returns (singles, fringes): singles[j, k] is the output-k intensity with
    only input j fed; fringes[j-1, k, i] the output-k intensity with inputs
    0 and j fed with relative phase 2*pi*i/n_samples. Optional multiplicative
    Gaussian noise models intensity measurement error.
    """
    u = np.asarray(u, dtype=complex)
    m = u.shape[0]
    singles = np.abs(u) ** 2
    phis = 2 * math.pi * np.arange(n_samples) / n_samples
    fringes = np.empty((m - 1, m, n_samples))
    for j in range(1, m):
        amps = u[0][None, :] + np.exp(1j * phis)[:, None] * u[j][None, :]
        fringes[j - 1] = (np.abs(amps) ** 2).T
    if noise > 0:
        if rng is None:
            rng = np.random.default_rng()
        singles = singles * (1 + noise * rng.standard_normal(singles.shape))
        fringes = fringes * (1 + noise * rng.standard_normal(fringes.shape))
    return singles, fringes


@dataclass(frozen=True)
class CharacterizationResult:
    interferometer: Interferometer
    fringe_residual: float


def characterize_from_fringes(singles, fringes) -> CharacterizationResult:
    """Reconstruct a transfer matrix from singles and two-beam fringes.

    Moduli come from the singles (rows renormalized to unit power); the
    interior phases from a three-parameter cosine fit of each fringe,
    referenced to input 0 and gauge-fixed so the first column is real.
    The fringe grid must hold at least 8 phase samples over [0, 2pi).
    """
    singles = np.asarray(singles, dtype=float)
    fringes = np.asarray(fringes, dtype=float)
    m = singles.shape[0]
    if singles.shape != (m, m):
        raise ValueError("singles must be square")
    if fringes.shape[:2] != (m - 1, m):
        raise ValueError("fringes must have shape (m-1, m, samples)")
    n_samples = fringes.shape[2]
    if n_samples < 8:
        raise ValueError("need at least 8 phase samples per fringe")

    moduli = np.sqrt(np.clip(singles, 0.0, None) / singles.sum(axis=1, keepdims=True))
    phis = 2 * math.pi * np.arange(n_samples) / n_samples
    design = np.column_stack([np.ones(n_samples), np.cos(phis), np.sin(phis)])

    theta = np.zeros((m, m))
    for j in range(1, m):
        for k in range(m):
            coef, *_ = np.linalg.lstsq(design, fringes[j - 1, k], rcond=None)
            amp = math.hypot(coef[1], coef[2])
            if amp < 1e-6:
                if moduli[0, k] * moduli[j, k] > 1e-3:
                    raise ReconstructionError(
                        f"fringe ({j},{k}) flat although both moduli are nonzero"
                    )
                theta[j, k] = 0.0
            else:
                theta[j, k] = math.atan2(-coef[2], coef[1])

    u = np.array(moduli, dtype=complex)
    for j in range(1, m):
        u[j] = moduli[j] * np.exp(1j * (theta[j] - theta[j, 0]))

    synth_singles, synth_fringes = synthesize_fringes(u, n_samples=n_samples)
    scale = float(np.abs(fringes).max())
    residual = float(np.abs(synth_fringes - fringes).max() / max(scale, 1e-12))
    return CharacterizationResult(
        Interferometer(u, label="characterized", relaxed=True), residual
    )


def ghz_probability(n: int, j: int, k: int, phi: float, full: bool | None = None) -> float:
    """Detection probability in the 2n-port pairwise-splitter network.

    j and k count photons in the two detector groups. A full event
    (j + k = n) carries the n-photon phase: (1/2)^(2n-1) * (1 +
    (-1)^(k + n/2) cos phi); any partial event is phase-independent with
    probability (1/2)^(j+k). Only even n is supported.
    """
    if n <= 0 or n % 2:
        raise ValueError(f"even photon number required, got {n}")
    if j < 0 or k < 0 or j + k > n:
        raise ValueError(f"invalid detector counts j={j}, k={k} for n={n}")
    is_full = j + k == n
    if full is not None and full != is_full:
        raise ValueError("full flag inconsistent with j + k")
    if is_full:
        return 0.5 ** (2 * n - 1) * (1.0 + (-1.0) ** (k + n // 2) * math.cos(phi))
    return 0.5 ** (j + k)
