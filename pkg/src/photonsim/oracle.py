"""First-quantization reference calculation of detection probabilities.

Everything here is deliberately brute force: the N-photon state is held
as a dense rank-N tensor over the combined mode/internal single-particle
space, (anti)symmetrized by explicit axis permutations, and binned by
output occupancy. No permanents, no Gram matrices, no permutation-group
shortcuts. It exists so the production engine has something independent
to be checked against; keep it slow and obvious.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from .linalg import permutation_sign
from .states import InternalState, states_from_gram

MAX_ORACLE_PHOTONS = 5
MAX_SINGLE_PARTICLE_DIM = 20

_STATISTICS = ("boson", "fermion", "classical")


def _check_limits(n_photons: int, single_dim: int) -> None:
    if n_photons > MAX_ORACLE_PHOTONS:
        raise ValueError(
            f"brute-force path supports at most {MAX_ORACLE_PHOTONS} photons, "
            f"got {n_photons}"
        )
    if single_dim > MAX_SINGLE_PARTICLE_DIM:
        raise ValueError(
            f"single-particle dimension {single_dim} exceeds "
            f"{MAX_SINGLE_PARTICLE_DIM}"
        )


def _state_vector(st) -> np.ndarray:
    for attr in ("amplitudes", "vector"):
        if hasattr(st, attr):
            return np.asarray(getattr(st, attr), dtype=complex)
    return np.asarray(st, dtype=complex)


def _internal_vectors(states, n_modes: int, occupied):
    """Per-occupied-mode internal state vectors as equal-length rows."""
    if isinstance(states, np.ndarray) or (
        hasattr(states, "__len__")
        and len(states) > 0
        and not isinstance(states[0], InternalState)
        and not hasattr(states[0], "vector")
        and not hasattr(states[0], "amplitudes")
    ):
        gram = np.asarray(states, dtype=complex)
        states = states_from_gram(gram)
    states = list(states)
    if len(states) == n_modes:
        chosen = [states[k] for k in occupied]
    elif len(states) == len(occupied):
        chosen = states
    else:
        raise ValueError(
            f"need one internal state per mode ({n_modes}) or per occupied "
            f"mode ({len(occupied)}), got {len(states)}"
        )
    vectors = [_state_vector(st) for st in chosen]
    dim = max(v.size for v in vectors)
    return [np.pad(v, (0, dim - v.size)) for v in vectors], dim


def _pattern_to_modes(pattern) -> list[int]:
    out = []
    for mode, count in enumerate(pattern):
        if count < 0 or count != int(count):
            raise ValueError(f"occupation numbers must be non-negative integers: {pattern}")
        out.extend([mode] * int(count))
    return out


def _projected_probability_tensor(evolved, statistics: str):
    """|P Phi_out|^2 amplitudes (flattened) and the squared projector norm."""
    n = len(evolved)
    tensor = evolved[0]
    for vec in evolved[1:]:
        tensor = np.multiply.outer(tensor, vec)
    projected = np.zeros_like(tensor)
    for perm in itertools.permutations(range(n)):
        term = np.transpose(tensor, perm)
        if statistics == "fermion" and permutation_sign(list(perm)) < 0:
            projected -= term
        else:
            projected += term
    projected /= math.factorial(n)
    flat = projected.reshape(-1)
    weights = np.abs(flat) ** 2
    return weights, float(weights.sum())


def _occupancy_keys(n_modes: int, internal_dim: int, n_photons: int) -> np.ndarray:
    """Base-(n+1) occupancy key contributed by each flattened basis index."""
    base = n_photons + 1
    single = np.repeat(base ** np.arange(n_modes, dtype=np.int64), internal_dim)
    keys = np.zeros(1, dtype=np.int64)
    for _ in range(n_photons):
        keys = (keys[:, None] + single[None, :]).reshape(-1)
    return keys


def _pattern_key(pattern, n_photons: int) -> int:
    base = n_photons + 1
    return int(sum(int(c) * base**k for k, c in enumerate(pattern)))


def _quantum_distribution(u, vectors, input_modes, statistics):
    n = len(input_modes)
    m = u.shape[0]
    dim = vectors[0].size
    _check_limits(n, m * dim)
    evolved = [np.kron(u[mode, :], vec) for mode, vec in zip(input_modes, vectors)]
    weights, norm = _projected_probability_tensor(evolved, statistics)
    if statistics == "fermion" and norm < 1e-12:
        return None, 0.0
    keys = _occupancy_keys(m, dim, n)
    binned = np.bincount(keys, weights=weights)
    return binned, norm


def _classical_distribution(u, input_modes):
    n = len(input_modes)
    m = u.shape[0]
    _check_limits(n, m)
    mode_probs = [np.abs(u[mode, :]) ** 2 for mode in input_modes]
    tensor = mode_probs[0]
    for p in mode_probs[1:]:
        tensor = np.multiply.outer(tensor, p)
    keys = _occupancy_keys(m, 1, n)
    return np.bincount(keys, weights=tensor.reshape(-1))


def _resolve(u):
    mat = getattr(u, "matrix", u)
    return np.asarray(mat, dtype=complex)


def brute_force_probability(u, states, r, s, statistics: str = "boson") -> float:
    """Detection probability from the dense first-quantization route.

    Mirrors the production engine's conventions: `states` holds one
    internal state per mode (or per occupied mode, ascending) and may be
    given as a distinguishability matrix instead; `r` and `s` are input
    and output occupation patterns over the same modes.
    """
    if statistics not in _STATISTICS:
        raise ValueError(f"unknown statistics: {statistics!r}")
    u = _resolve(u)
    m = u.shape[0]
    r = tuple(int(x) for x in r)
    s = tuple(int(x) for x in s)
    if len(r) != m or len(s) != m:
        raise ValueError("patterns must have one entry per mode")
    if sum(r) != sum(s):
        raise ValueError(f"photon number mismatch: {sum(r)} in, {sum(s)} out")
    input_modes = _pattern_to_modes(r)
    n = len(input_modes)
    key = _pattern_key(s, n)
    input_factorials = math.prod(math.factorial(c) for c in r)

    if statistics == "classical":
        binned = _classical_distribution(u, input_modes)
        value = binned[key] if key < binned.size else 0.0
        return float(value) / input_factorials

    occupied = sorted(set(input_modes))
    vectors, _ = _internal_vectors(states, m, occupied)
    by_mode = dict(zip(occupied, vectors))
    photon_vectors = [by_mode[mode] for mode in input_modes]
    binned, norm = _quantum_distribution(u, photon_vectors, input_modes, statistics)
    if binned is None:
        return 0.0
    value = binned[key] if key < binned.size else 0.0
    return float(value) / norm


def brute_force_probability_photons(
    u, photon_states, input_modes, s, statistics: str = "boson"
) -> float:
    """Per-photon variant: one internal state per injected photon.

    Photons sharing an input mode may carry different internal states;
    the classical route ignores internal structure entirely (each photon
    is an independently routed labelled particle).
    """
    if statistics not in _STATISTICS:
        raise ValueError(f"unknown statistics: {statistics!r}")
    u = _resolve(u)
    m = u.shape[0]
    input_modes = [int(x) for x in input_modes]
    s = tuple(int(x) for x in s)
    if len(photon_states) != len(input_modes):
        raise ValueError("need exactly one internal state per photon")
    if sum(s) != len(input_modes):
        raise ValueError("output pattern must account for every photon")
    n = len(input_modes)
    key = _pattern_key(s, n)

    if statistics == "classical":
        binned = _classical_distribution(u, input_modes)
        return float(binned[key]) if key < binned.size else 0.0

    vectors = [_state_vector(st) for st in photon_states]
    dim = max(v.size for v in vectors)
    vectors = [np.pad(v, (0, dim - v.size)) for v in vectors]
    binned, norm = _quantum_distribution(u, vectors, input_modes, statistics)
    if binned is None:
        return 0.0
    value = binned[key] if key < binned.size else 0.0
    return float(value) / norm


def brute_force_distribution(u, states, r, statistics: str = "boson"):
    """Probability of every output pattern, keyed by pattern tuple."""
    u = _resolve(u)
    m = u.shape[0]
    n = sum(int(x) for x in r)
    out = {}
    for pattern in _compositions(n, m):
        out[pattern] = brute_force_probability(u, states, r, pattern, statistics)
    return out


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest
