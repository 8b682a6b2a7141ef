"""Permanents, permutation bookkeeping and small dense-algebra helpers.

Everything here operates on plain numpy arrays. The permanent routines are
the workhorses of the interference engine; they are deliberately hand-rolled
(no external solver exists for permanents anyway) and kept small enough to
audit against the naive definition.
"""

from __future__ import annotations

import numpy as np

MAX_PERMANENT_SIZE = 20
MAX_NAIVE_SIZE = 6


def permanent(a: np.ndarray) -> complex:
    """Permanent of a square matrix via Ryser's formula with Gray-code updates.

    Runs in O(2^n * n). Sizes above MAX_PERMANENT_SIZE are rejected because
    the runtime becomes unreasonable long before then.
    """
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"permanent needs a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n == 0:
        return 1.0 + 0.0j
    if n > MAX_PERMANENT_SIZE:
        raise ValueError(f"matrix size {n} exceeds permanent cap {MAX_PERMANENT_SIZE}")

    # columns as python lists: for the small sizes used here this beats
    # numpy's per-call overhead by a wide margin
    cols = [list(a[:, j]) for j in range(n)]
    row = [0j] * n
    total = 0j
    gray = 0
    for k in range(1, 1 << n):
        g = k ^ (k >> 1)
        bit = g ^ gray
        j = bit.bit_length() - 1
        col = cols[j]
        if g & bit:
            for i in range(n):
                row[i] += col[i]
        else:
            for i in range(n):
                row[i] -= col[i]
        gray = g
        prod = 1.0 + 0j
        for x in row:
            prod *= x
        total += -prod if (g.bit_count() & 1) else prod
    if n & 1:
        total = -total
    return complex(total)


def permanent_naive(a: np.ndarray) -> complex:
    """Reference permanent from the defining n! sum. Capped at 6x6."""
    from itertools import permutations

    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"permanent needs a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n > MAX_NAIVE_SIZE:
        raise ValueError(f"naive permanent capped at {MAX_NAIVE_SIZE}, got {n}")
    total = 0j
    for sigma in permutations(range(n)):
        prod = 1.0 + 0j
        for i in range(n):
            prod *= a[i, sigma[i]]
        total += prod
    return complex(total)


def _check_permutation(perm) -> tuple[int, ...]:
    perm = tuple(int(p) for p in perm)
    if sorted(perm) != list(range(len(perm))):
        raise ValueError(f"{perm} is not a permutation of 0..{len(perm) - 1}")
    return perm


def cycle_decomposition(perm) -> list[tuple[int, ...]]:
    """Disjoint cycles of a permutation, in canonical form.

    Each cycle is rotated so its smallest element comes first and cycles are
    ordered by their first element. perm maps position i to perm[i].
    """
    perm = _check_permutation(perm)
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cur = start
        cycle = []
        while not seen[cur]:
            seen[cur] = True
            cycle.append(cur)
            cur = perm[cur]
        cycles.append(tuple(cycle))
    return cycles


def cycle_type(perm) -> tuple[int, ...]:
    """Multiset of cycle lengths, longest first. Labels the conjugacy class."""
    return tuple(sorted((len(c) for c in cycle_decomposition(perm)), reverse=True))


def permutation_sign(perm) -> int:
    perm = _check_permutation(perm)
    return -1 if (len(perm) - len(cycle_decomposition(perm))) & 1 else 1


def permute_rows(a: np.ndarray, perm) -> np.ndarray:
    """Rows reordered so row j of the result is row perm[j] of the input."""
    perm = _check_permutation(perm)
    a = np.asarray(a)
    if a.shape[0] != len(perm):
        raise ValueError(f"permutation length {len(perm)} != row count {a.shape[0]}")
    return a[list(perm), :]


def hadamard(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Entrywise product of two equal-shape matrices."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")
    return a * b


def hermitian_evolve(h: np.ndarray, z: float, psi: np.ndarray) -> np.ndarray:
    """Apply exp(-i h z) to psi through an eigendecomposition of h.

    h must be hermitian; the result's norm is checked against the input's as
    a cheap guard against a botched decomposition.
    """
    h = np.asarray(h, dtype=complex)
    psi = np.asarray(psi, dtype=complex)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ValueError(f"expected a square matrix, got {h.shape}")
    scale = max(np.abs(h).max(), 1.0)
    if np.abs(h - h.conj().T).max() > 1e-10 * scale:
        raise ValueError("matrix is not hermitian")
    if psi.shape[0] != h.shape[0]:
        raise ValueError(f"state length {psi.shape} does not match matrix {h.shape}")
    w, v = np.linalg.eigh(h)
    out = v @ (np.exp(-1j * w * z) * (v.conj().T @ psi))
    n_in, n_out = np.linalg.norm(psi), np.linalg.norm(out)
    if abs(n_out - n_in) > 1e-9 * max(n_in, 1.0):
        raise RuntimeError("evolution failed to preserve the norm")
    return out


def evolution_operator(h: np.ndarray, z: float) -> np.ndarray:
    """Dense unitary exp(-i h z) for a hermitian h."""
    h = np.asarray(h, dtype=complex)
    scale = max(np.abs(h).max(), 1.0)
    if np.abs(h - h.conj().T).max() > 1e-10 * scale:
        raise ValueError("matrix is not hermitian")
    w, v = np.linalg.eigh(h)
    return (v * np.exp(-1j * w * z)) @ v.conj().T
