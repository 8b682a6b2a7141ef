"""Detection-event probabilities for partially distinguishable photons.

The central quantity is the permutation sum

    P(s, r, U, S) = N * sum_sigma w(sigma) * prod_j G[j, sigma(j)]
                      * perm(M entrywise* rows-permuted conj(M))

with G and M the distinguishability and scattering blocks indexed by the
mode-assignment lists of the input and output patterns. w is 1 for bosons,
sgn(sigma) for fermions; the classical variant keeps only the identity.

Two input conventions are supported. event_probability follows the
block-matrix normalization 1/(prod s_j! r_j!), which presumes photons
sharing an input mode are identical. event_probability_photons takes one
state per photon (photons in one mode may differ, as with background noise)
and normalizes by the exact input-state norm instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from math import factorial

import numpy as np

from . import linalg
from .states import (
    check_distinguishability,
    cyclic_trace,
    distinguishability_matrix,
)

MAX_PHOTONS = 8
IMAG_TOLERANCE = 1e-9

STATISTICS = ("boson", "fermion", "classical")


class ConsistencyError(RuntimeError):
    """The permutation sum produced a non-negligible imaginary residue."""


def _as_matrix(u, unitary_tol: float | None = 1e-8) -> np.ndarray:
    m = np.asarray(getattr(u, "matrix", u), dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"transfer matrix must be square, got {m.shape}")
    if unitary_tol is not None:
        res = np.abs(m.conj().T @ m - np.eye(m.shape[0])).max()
        if res > unitary_tol:
            raise ValueError(f"matrix is not unitary (residual {res:.3g})")
    return m


def check_pattern(pattern, modes: int | None = None) -> tuple[int, ...]:
    pattern = tuple(int(x) for x in pattern)
    if any(x < 0 for x in pattern):
        raise ValueError(f"occupations must be nonnegative, got {pattern}")
    if modes is not None and len(pattern) != modes:
        raise ValueError(f"pattern {pattern} does not cover {modes} modes")
    return pattern


def mode_assignment(pattern) -> list[int]:
    """Mode index repeated per photon, ascending: (2, 1) -> [0, 0, 1]."""
    pattern = check_pattern(pattern)
    out = []
    for mode, count in enumerate(pattern):
        out.extend([mode] * count)
    return out


def _per_photon_gram(s_or_states, r: tuple[int, ...]) -> np.ndarray:
    """Expand a per-mode distinguishability matrix to the photon list of r.

    Accepts a Gram matrix (or state list) indexed either by all modes or by
    the occupied modes only, in ascending mode order.
    """
    occupied = [m for m, n in enumerate(r) if n > 0]
    if isinstance(s_or_states, (list, tuple)):
        s = distinguishability_matrix(s_or_states)
    else:
        s = check_distinguishability(s_or_states)
    if s.shape[0] == len(r):
        index = {m: m for m in occupied}
    elif s.shape[0] == len(occupied):
        index = {m: i for i, m in enumerate(occupied)}
    else:
        raise ValueError(
            f"distinguishability matrix of size {s.shape[0]} matches neither "
            f"{len(r)} modes nor {len(occupied)} occupied modes"
        )
    rows = [index[m] for m in mode_assignment(r)]
    return s[np.ix_(rows, rows)]


def gram_block(s_or_states, r) -> np.ndarray:
    """N x N distinguishability block G[j][l] = S[d(r)[j]][d(r)[l]]."""
    return _per_photon_gram(s_or_states, check_pattern(r))


def scattering_block(u, r, s) -> np.ndarray:
    """N x N transfer block M: rows follow d(r), columns follow d(s)."""
    m = _as_matrix(u, unitary_tol=None)
    r = check_pattern(r, m.shape[0])
    s = check_pattern(s, m.shape[0])
    if sum(r) != sum(s):
        raise ValueError(f"photon number mismatch: {sum(r)} in, {sum(s)} out")
    return m[np.ix_(mode_assignment(r), mode_assignment(s))]


def _sigma_terms(n: int, statistics: str):
    """Yield (sigma, weight) pairs in canonical enumeration order."""
    if statistics not in STATISTICS:
        raise ValueError(f"unknown statistics {statistics!r}")
    if statistics == "classical":
        yield tuple(range(n)), 1.0
        return
    for sigma in permutations(range(n)):
        w = 1.0 if statistics == "boson" else float(linalg.permutation_sign(sigma))
        yield sigma, w


def _permutation_sum(m_block, gram, statistics, weight_fn=None) -> complex:
    """sum_sigma w(sigma) * weight(sigma) * perm(M x conj(M)_sigma).

    weight_fn(sigma) defaults to the product of Gram entries prod_j
    G[sigma(j), j]; the mixed-state path substitutes cyclic traces.  The
    index order matters: G[j, sigma(j)] is its complex conjugate, which
    only shows up for three or more photons with complex overlaps.
    """
    n = m_block.shape[0]
    conj_m = np.conj(m_block)
    total = 0.0 + 0.0j
    for sigma, w in _sigma_terms(n, statistics):
        if weight_fn is None:
            g = 1.0 + 0.0j
            for j in range(n):
                g *= gram[sigma[j], j]
        else:
            g = weight_fn(sigma)
        if abs(g) < 1e-18:
            continue
        total += w * g * linalg.permanent(m_block * conj_m[list(sigma), :])
    return total


def _finalize(value: complex, context: str) -> float:
    if abs(value.imag) > IMAG_TOLERANCE:
        raise ConsistencyError(f"{context}: imaginary residue {value.imag:.3g}")
    return float(value.real)


def event_probability(u, s_or_states, r, s, statistics: str = "boson") -> float:
    """Probability of detecting output pattern s given input pattern r.

    s_or_states describes the internal states per input mode (photons
    sharing a mode are identical); normalization 1/(prod s_j! r_j!).
    """
    mat = _as_matrix(u)
    r = check_pattern(r, mat.shape[0])
    s = check_pattern(s, mat.shape[0])
    n = sum(r)
    if n != sum(s):
        raise ValueError(f"photon number mismatch: {n} in, {sum(s)} out")
    if n > MAX_PHOTONS:
        raise ValueError(f"photon number {n} exceeds cap {MAX_PHOTONS}")
    if n == 0:
        return 1.0
    gram = gram_block(s_or_states, r)
    m_block = mat[np.ix_(mode_assignment(r), mode_assignment(s))]
    norm = 1.0
    for occ in list(r) + list(s):
        norm *= factorial(occ)
    total = _permutation_sum(m_block, gram, statistics) / norm
    return _finalize(total, "event probability")


def input_norm(gram: np.ndarray, input_modes, statistics: str = "boson") -> float:
    """Squared norm of the multi-photon input state.

    Mode-preserving permutations factor per input mode, so this is a product
    of per-mode permanents (determinants for fermions) of Gram blocks; the
    classical value is 1.
    """
    if statistics == "classical":
        return 1.0
    groups: dict[int, list[int]] = {}
    for j, mode in enumerate(input_modes):
        groups.setdefault(mode, []).append(j)
    c = 1.0
    for block in groups.values():
        sub = gram[np.ix_(block, block)]
        val = linalg.permanent(sub) if statistics == "boson" else np.linalg.det(sub)
        c *= _finalize(complex(val), "input norm")
    return c


def event_probability_photons(
    u, gram, input_modes, s, statistics: str = "boson"
) -> float:
    """Per-photon variant: photon j enters input_modes[j] with Gram matrix gram.

    Photons sharing a mode may carry different internal states; the result
    is normalized by the exact input norm, so probabilities over all output
    patterns sum to 1 for every statistics.
    """
    mat = _as_matrix(u)
    s = check_pattern(s, mat.shape[0])
    input_modes = [int(m) for m in input_modes]
    n = len(input_modes)
    if any(m < 0 or m >= mat.shape[0] for m in input_modes):
        raise ValueError("input mode out of range")
    if n != sum(s):
        raise ValueError(f"photon number mismatch: {n} in, {sum(s)} out")
    if n > MAX_PHOTONS:
        raise ValueError(f"photon number {n} exceeds cap {MAX_PHOTONS}")
    if n == 0:
        return 1.0
    gram = check_distinguishability(gram)
    if gram.shape[0] != n:
        raise ValueError("need one Gram row per photon")
    c = input_norm(gram, input_modes, statistics)
    if abs(c) < 1e-12:
        raise ValueError("input state has (near-)zero norm")
    m_block = mat[np.ix_(input_modes, mode_assignment(s))]
    norm = c
    for occ in s:
        norm *= factorial(occ)
    total = _permutation_sum(m_block, gram, statistics) / norm
    return _finalize(total, "event probability")


def event_probability_mixed(u, rhos, r, s, statistics: str = "boson") -> float:
    """Event probability with one density matrix per occupied input mode.

    Only single occupation is supported; each permutation's overlap product
    is replaced by the product of cyclic traces over its disjoint cycles.
    """
    mat = _as_matrix(u)
    r = check_pattern(r, mat.shape[0])
    s = check_pattern(s, mat.shape[0])
    if any(x > 1 for x in r):
        raise ValueError("mixed-state inputs support one photon per mode only")
    n = sum(r)
    if n != sum(s):
        raise ValueError(f"photon number mismatch: {n} in, {sum(s)} out")
    if n > MAX_PHOTONS:
        raise ValueError(f"photon number {n} exceeds cap {MAX_PHOTONS}")
    if len(rhos) != n:
        raise ValueError("need one density matrix per occupied input mode")
    if n == 0:
        return 1.0
    rhos = [np.asarray(rho, dtype=complex) for rho in rhos]

    def cycle_weight(sigma):
        # Matching the pure-state weight prod_j S[sigma(j), j] needs the
        # density matrices multiplied against the cycle direction; forward
        # order would conjugate every loop phase.
        w = 1.0 + 0.0j
        for cycle in linalg.cycle_decomposition(sigma):
            w *= cyclic_trace([rhos[j] for j in reversed(cycle)])
        return w

    m_block = mat[np.ix_(mode_assignment(r), mode_assignment(s))]
    norm = 1.0
    for occ in s:
        norm *= factorial(occ)
    total = _permutation_sum(m_block, None, statistics, weight_fn=cycle_weight) / norm
    return _finalize(total, "mixed event probability")


def event_probability_ensemble(u, ensembles, r, s, statistics: str = "boson") -> float:
    """Ensemble average of pure-state event probabilities.

    ensembles holds, per occupied input mode, a list of (probability, state)
    pairs; probabilities must sum to 1. Must agree with the mixed-state
    formula on the corresponding density matrices.
    """
    r = check_pattern(r)
    if any(x > 1 for x in r):
        raise ValueError("ensemble inputs support one photon per mode only")
    for ens in ensembles:
        total_p = sum(p for p, _ in ens)
        if abs(total_p - 1.0) > 1e-9:
            raise ValueError(f"ensemble probabilities sum to {total_p}, not 1")
    total = 0.0
    for combo in product(*[list(ens) for ens in ensembles]):
        weight = 1.0
        for p, _ in combo:
            weight *= p
        states = [state for _, state in combo]
        total += weight * event_probability(u, states, r, s, statistics)
    return total


@dataclass(frozen=True)
class ProbabilityBreakdown:
    """Event probability split by permutation cycle type.

    terms maps each integer partition of N (cycle lengths, descending) to
    its real contribution; the partition of all ones is the classical term,
    and any partition containing a k-cycle carries k-photon interference.
    """

    total: float
    terms: dict[tuple[int, ...], float]


def decompose_terms(u, s_or_states, r, s, statistics: str = "boson"):
    """Group the permutation sum by conjugacy class (cycle type)."""
    mat = _as_matrix(u)
    r = check_pattern(r, mat.shape[0])
    s = check_pattern(s, mat.shape[0])
    n = sum(r)
    if n != sum(s):
        raise ValueError(f"photon number mismatch: {n} in, {sum(s)} out")
    if n > MAX_PHOTONS:
        raise ValueError(f"photon number {n} exceeds cap {MAX_PHOTONS}")
    gram = gram_block(s_or_states, r)
    m_block = mat[np.ix_(mode_assignment(r), mode_assignment(s))]
    conj_m = np.conj(m_block)
    norm = 1.0
    for occ in list(r) + list(s):
        norm *= factorial(occ)
    sums: dict[tuple[int, ...], complex] = {}
    for sigma, w in _sigma_terms(n, statistics):
        g = 1.0 + 0.0j
        for j in range(n):
            g *= gram[sigma[j], j]
        term = 0.0 + 0.0j
        if abs(g) >= 1e-18:
            term = w * g * linalg.permanent(m_block * conj_m[list(sigma), :]) / norm
        key = linalg.cycle_type(sigma)
        sums[key] = sums.get(key, 0.0 + 0.0j) + term
    terms = {key: _finalize(val, f"cycle type {key}") for key, val in sums.items()}
    return ProbabilityBreakdown(total=sum(terms.values()), terms=terms)


@dataclass(frozen=True)
class OverlapGraph:
    """Directed overlap graph: edge i->j present when |S[i][j]| >= threshold."""

    weights: np.ndarray
    threshold: float

    @property
    def adjacency(self) -> np.ndarray:
        adj = np.abs(self.weights) >= self.threshold
        np.fill_diagonal(adj, False)
        return adj


def overlap_graph(s_or_states, threshold: float = 1e-9) -> OverlapGraph:
    if isinstance(s_or_states, (list, tuple)):
        s = distinguishability_matrix(s_or_states)
    else:
        s = check_distinguishability(s_or_states)
    return OverlapGraph(weights=s, threshold=threshold)


def has_n_photon_interference(graph: OverlapGraph) -> bool:
    """True when the overlap graph admits a directed Hamiltonian cycle.

    Exhaustive subset dynamic program, intended for N <= 10.
    """
    adj = graph.adjacency
    n = adj.shape[0]
    if n > 10:
        raise ValueError("Hamiltonian-cycle search supported for N <= 10 only")
    if n == 1:
        return True
    # dp[mask][v]: a path 0 -> v visiting exactly the vertices in mask
    size = 1 << n
    dp = [[False] * n for _ in range(size)]
    dp[1][0] = True
    for mask in range(1, size):
        if not mask & 1:
            continue
        for v in range(n):
            if not dp[mask][v]:
                continue
            for w in range(n):
                if mask & (1 << w) or not adj[v, w]:
                    continue
                dp[mask | (1 << w)][w] = True
    full = size - 1
    return any(dp[full][v] and adj[v, 0] for v in range(1, n))


def fold_impurity(gram: np.ndarray, purity: float) -> np.ndarray:
    """Distinguishability matrix of photons sharing a common purity.

    Mixing each photon's pure state with weight (1 - purity) on its own
    auxiliary slot multiplies every off-diagonal overlap by the purity; a
    cycle of length L then picks up purity^L, exactly the mixed-state value.
    """
    if not 0.0 < purity <= 1.0:
        raise ValueError(f"purity must lie in (0, 1], got {purity}")
    gram = check_distinguishability(gram)
    return purity * gram + (1.0 - purity) * np.eye(gram.shape[0])


def vacuum_probability(
    u, gram, input_modes, excluded_outputs, statistics: str = "boson"
) -> float:
    """Probability that no photon lands in any of the excluded output modes.

    Summing the event formula over every allowed output pattern collapses
    the inner permanent: with C[j][j'] = sum over allowed k of
    U[m_j, k] conj(U[m_j', k]), the answer is the single weighted permanent
    of (G entrywise C) divided by the input norm (determinant for fermions,
    diagonal product for the classical variant).
    """
    mat = _as_matrix(u)
    input_modes = [int(m) for m in input_modes]
    n = len(input_modes)
    if n == 0:
        return 1.0
    gram = check_distinguishability(gram)
    if gram.shape[0] != n:
        raise ValueError("need one Gram row per photon")
    excluded = set(int(k) for k in excluded_outputs)
    if any(k < 0 or k >= mat.shape[0] for k in excluded):
        raise ValueError("excluded output mode out of range")
    keep = [k for k in range(mat.shape[0]) if k not in excluded]
    rows = mat[np.ix_(input_modes, keep)]
    c_tilde = rows @ rows.conj().T
    folded = gram * c_tilde
    if statistics == "boson":
        val = linalg.permanent(folded)
    elif statistics == "fermion":
        val = complex(np.linalg.det(folded))
    elif statistics == "classical":
        val = complex(np.prod(np.diag(folded)))
    else:
        raise ValueError(f"unknown statistics {statistics!r}")
    c = input_norm(gram, input_modes, statistics)
    if abs(c) < 1e-12:
        raise ValueError("input state has (near-)zero norm")
    return _finalize(val / c, "vacuum probability")


def click_probability(
    u, gram, input_modes, required=(), forbidden=(), statistics: str = "boson"
) -> float:
    """Probability that every required detector clicks and none forbidden does.

    Detectors are output modes with unit efficiency and no number resolution.
    Inclusion-exclusion over subsets of the required set reduces the count to
    at most 2^|required| vacuum probabilities.
    """
    required = [int(k) for k in required]
    forbidden = set(int(k) for k in forbidden)
    if forbidden & set(required):
        raise ValueError("a detector cannot be both required and forbidden")
    total = 0.0
    for mask in range(1 << len(required)):
        subset = {required[i] for i in range(len(required)) if mask & (1 << i)}
        sign = -1.0 if bin(mask).count("1") % 2 else 1.0
        total += sign * vacuum_probability(
            u, gram, input_modes, forbidden | subset, statistics
        )
    # inclusion-exclusion cancellation can leave tiny negatives
    if total < 0 and total > -1e-10:
        total = 0.0
    return total
