"""Scenario builders and observables for the interference experiments.

Covers the three-photon scans on the balanced tritter (identical
polarizations and the Mercedes-star triple), the triad-phase sweep with
delay compensation, the four-photon circle-dance on the quitter, the
two-photon locking signal, and closed-form reference formulas for all
tritter detection patterns.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .engine import decompose_terms, event_probability
from .interferometers import quitter, tritter
from .states import (
    GaussianWavepacket,
    PolarizationState,
    distinguishability_matrix,
    product_states,
    triad_phase,
)

POL_H = PolarizationState(1.0, 0.0)
POL_V = PolarizationState(0.0, 1.0)
POL_PLUS = PolarizationState(1.0 / math.sqrt(2), 1.0 / math.sqrt(2))


def mercedes_polarizations():
    """Three polarizations with pairwise overlap moduli 1/2 and triad phase pi."""
    return (
        POL_H,
        PolarizationState(0.5, math.sqrt(3) / 2),
        PolarizationState(0.5, -math.sqrt(3) / 2),
    )


# --- closed-form tritter probabilities ------------------------------------

def tritter_three_fold(r_ab: float, r_bc: float, r_ca: float, phi: float) -> float:
    """Coincidence probability across all three tritter outputs."""
    return (
        2.0
        + 4.0 * r_ab * r_bc * r_ca * math.cos(phi)
        - r_ab**2
        - r_bc**2
        - r_ca**2
    ) / 9.0


def tritter_bunched(r_ab: float, r_bc: float, r_ca: float, phi: float) -> float:
    """All three photons in one output port (any of the three)."""
    return (
        1.0
        + r_ab**2
        + r_bc**2
        + r_ca**2
        + 2.0 * r_ab * r_bc * r_ca * math.cos(phi)
    ) / 27.0


def tritter_two_one_plus(r_ab, r_bc, r_ca, phi) -> float:
    """Patterns (1,2,0), (0,1,2), (2,0,1): phase advanced by pi/3."""
    return (1.0 - 2.0 * r_ab * r_bc * r_ca * math.cos(phi + math.pi / 3)) / 9.0


def tritter_two_one_minus(r_ab, r_bc, r_ca, phi) -> float:
    """Patterns (0,2,1), (2,1,0), (1,0,2): phase retarded by pi/3."""
    return (1.0 - 2.0 * r_ab * r_bc * r_ca * math.cos(phi - math.pi / 3)) / 9.0


def tritter_pair(r_ij: float) -> float:
    """Two-photon coincidence across any two tritter ports."""
    return (2.0 - r_ij**2) / 9.0


_PLUS_PATTERNS = {(1, 2, 0), (0, 1, 2), (2, 0, 1)}
_MINUS_PATTERNS = {(0, 2, 1), (2, 1, 0), (1, 0, 2)}
_BUNCHED_PATTERNS = {(3, 0, 0), (0, 3, 0), (0, 0, 3)}


def tritter_pattern_probability(pattern, r_ab, r_bc, r_ca, phi) -> float:
    """Closed-form probability for any three-photon tritter output pattern."""
    pattern = tuple(int(x) for x in pattern)
    if pattern == (1, 1, 1):
        return tritter_three_fold(r_ab, r_bc, r_ca, phi)
    if pattern in _BUNCHED_PATTERNS:
        return tritter_bunched(r_ab, r_bc, r_ca, phi)
    if pattern in _PLUS_PATTERNS:
        return tritter_two_one_plus(r_ab, r_bc, r_ca, phi)
    if pattern in _MINUS_PATTERNS:
        return tritter_two_one_minus(r_ab, r_bc, r_ca, phi)
    raise ValueError(f"not a three-photon tritter pattern: {pattern}")


# --- three-photon delay scans ----------------------------------------------

@dataclass(frozen=True)
class ThreePhotonScenario:
    """Three photons on the tritter with delays symmetric about photon 2.

    The scan parameter tau sets t1 = -tau/2, t2 = 0, t3 = +tau/2.
    """

    polarizations: tuple[PolarizationState, PolarizationState, PolarizationState]
    width: float = 1.0

    def states(self, tau: float):
        packets = [
            GaussianWavepacket(-0.5 * tau, self.width),
            GaussianWavepacket(0.0, self.width),
            GaussianWavepacket(0.5 * tau, self.width),
        ]
        return product_states(packets, list(self.polarizations))


def w_shape_scenario(width: float = 1.0) -> ThreePhotonScenario:
    return ThreePhotonScenario((POL_H, POL_H, POL_H), width)


def mercedes_scenario(width: float = 1.0) -> ThreePhotonScenario:
    return ThreePhotonScenario(mercedes_polarizations(), width)


def _three_fold_curve(scenario: ThreePhotonScenario, taus) -> np.ndarray:
    u = tritter()
    out = np.empty(len(taus))
    for i, tau in enumerate(taus):
        out[i] = event_probability(u, scenario.states(tau), (1, 1, 1), (1, 1, 1))
    return out


def w_shape_scan(scenario: ThreePhotonScenario, taus) -> np.ndarray:
    """Three-fold coincidence along the symmetric delay scan (W-shaped curve)."""
    return _three_fold_curve(scenario, taus)


def mercedes_scan(scenario: ThreePhotonScenario, taus) -> np.ndarray:
    """Same scan evaluated for the Mercedes-star polarization triple."""
    return _three_fold_curve(scenario, taus)


# --- triad-phase sweep -----------------------------------------------------

def sweep_polarizations(theta: float):
    """Polarization triple whose triad phase varies while all moduli stay put."""
    a = PolarizationState(math.cos(2 * theta), 1j * math.sin(2 * theta))
    b = PolarizationState(math.sqrt(3) / 2, 0.5)
    c = PolarizationState(math.sqrt(3) / 2, -0.5)
    return a, b, c


def sweep_delay(theta: float, width: float = 1.0) -> float:
    """Walk-off applied to the rotated photon so |<a|b>| stays 1/2."""
    return width * math.sqrt(2.0 * math.log(2.0 + math.cos(4 * theta)))


def sweep_phase(theta: float) -> float:
    """Closed-form triad phase of the sweep configuration, in [0, 2pi)."""
    z = math.sqrt(3) * math.cos(2 * theta) - 1j * math.sin(2 * theta)
    return float(2.0 * np.angle(z)) % (2.0 * math.pi)


def sweep_states(theta: float, width: float = 1.0):
    pols = sweep_polarizations(theta)
    packets = [
        GaussianWavepacket(sweep_delay(theta, width), width),
        GaussianWavepacket(0.0, width),
        GaussianWavepacket(0.0, width),
    ]
    return product_states(packets, list(pols))


@dataclass(frozen=True)
class TriadSweepResult:
    theta: np.ndarray
    delay: np.ndarray
    phase: np.ndarray
    p111: np.ndarray
    p011: np.ndarray
    p101: np.ndarray
    p110: np.ndarray


def triad_sweep(thetas, width: float = 1.0) -> TriadSweepResult:
    """Full sweep: three-fold events plus the two-photon pair coincidences.

    The pair columns inject only the named photon pair (third input empty)
    and must come out theta-independent: the delay law is built to hold
    every squared overlap fixed.
    """
    u = tritter()
    thetas = np.asarray(thetas, dtype=float)
    delay = np.array([sweep_delay(t, width) for t in thetas])
    phase = np.array([sweep_phase(t) for t in thetas])
    p111 = np.empty_like(thetas)
    pairs = {"p011": (1, 2), "p101": (0, 2), "p110": (0, 1)}
    pair_curves = {name: np.empty_like(thetas) for name in pairs}
    for i, theta in enumerate(thetas):
        states = sweep_states(theta, width)
        p111[i] = event_probability(u, states, (1, 1, 1), (1, 1, 1))
        for name, (j, k) in pairs.items():
            pattern = tuple(1 if m in (j, k) else 0 for m in range(3))
            pair_states = [states[j], states[k]]
            pair_curves[name][i] = event_probability(u, pair_states, pattern, pattern)
    return TriadSweepResult(
        theta=thetas, delay=delay, phase=phase, p111=p111, **pair_curves
    )


def triad_sweep_states_phase(theta: float, width: float = 1.0) -> float:
    """Triad phase recomputed from the concrete sweep states."""
    a, b, c = sweep_states(theta, width)
    return triad_phase(a, b, c)


# --- four-photon circle dance ----------------------------------------------

# |<t2|t3>| = 0.1 boundary for unit-width packets split symmetrically
CIRCLE_DANCE_SPLIT = math.sqrt(math.log(10.0))


@dataclass(frozen=True)
class CircleDanceScenario:
    """Four photons on the quitter with a cyclic overlap graph.

    Photons a and c share a broad temporal mode at t = 0 and orthogonal
    polarizations; b and d are narrow, split symmetrically by +-split, with
    polarizations that close the ring. theta is the four-photon phase.
    """

    theta: float
    chi: float = math.pi / 2
    width_narrow: float = 1.0
    width_ratio: float = 2.2
    split: float = CIRCLE_DANCE_SPLIT

    def states(self):
        wb = self.width_narrow * self.width_ratio
        t_a = GaussianWavepacket(0.0, wb)
        t_b = GaussianWavepacket(-self.split, self.width_narrow)
        t_c = GaussianWavepacket(0.0, wb)
        t_d = GaussianWavepacket(self.split, self.width_narrow)
        pol_d = PolarizationState(
            1.0 / math.sqrt(2), np.exp(1j * self.theta) / math.sqrt(2)
        )
        return product_states(
            [t_a, t_b, t_c, t_d], [POL_H, POL_PLUS, POL_V, pol_d]
        )

    def injection_order(self):
        """States listed per quitter input: d, b, c, a enter inputs 0..3."""
        a, b, c, d = self.states()
        return [d, b, c, a]


def circle_dance_formula(r_ab, r_bc, r_cd, r_ad, chi, theta) -> float:
    """Closed-form four-fold coincidence probability on the quitter."""
    ring = r_ab * r_bc * r_cd * r_ad
    return (
        3.0
        - r_ab**2
        - r_bc**2
        - r_cd**2
        - r_ad**2
        + (2.0 + math.cos(2 * chi)) * (r_ab**2 * r_cd**2 + r_ad**2 * r_bc**2)
        + 2.0 * (math.cos(2 * chi) - 2.0) * ring * math.cos(theta)
    ) / 32.0


def circle_dance_ring_overlaps(scenario: CircleDanceScenario):
    """Moduli of the four ring overlaps (ab, bc, cd, ad)."""
    a, b, c, d = scenario.states()
    s = distinguishability_matrix([a, b, c, d])
    return tuple(abs(s[i, j]) for i, j in ((0, 1), (1, 2), (2, 3), (0, 3)))


def circle_dance_probability(scenario: CircleDanceScenario) -> float:
    """Four-fold coincidence from the generic engine on the quitter."""
    u = quitter(scenario.chi)
    return event_probability(
        u, scenario.injection_order(), (1, 1, 1, 1), (1, 1, 1, 1)
    )


def circle_dance_curve(thetas, **scenario_kwargs) -> np.ndarray:
    return np.array(
        [
            circle_dance_probability(CircleDanceScenario(theta=t, **scenario_kwargs))
            for t in thetas
        ]
    )


def circle_dance_subset_probability(scenario: CircleDanceScenario, pattern) -> float:
    """Probability of a partial detection pattern (fewer than four photons).

    The named photons are dropped from the input; used to show singles,
    two-folds and three-folds carry no four-photon phase.
    """
    states = scenario.injection_order()
    pattern = tuple(int(x) for x in pattern)
    keep = [i for i, n in enumerate(pattern) if n > 0]
    sub_states = [states[i] for i in keep]
    r = tuple(1 if i in keep else 0 for i in range(4))
    return event_probability(quitter(scenario.chi), sub_states, r, pattern)


def circle_dance_breakdown(scenario: CircleDanceScenario):
    """Cycle-type decomposition of the four-fold event."""
    return decompose_terms(
        quitter(scenario.chi), scenario.injection_order(), (1, 1, 1, 1), (1, 1, 1, 1)
    )


# photon index (a, b, c, d) entering each quitter input 0..3
_CIRCLE_DANCE_INJECTION = (3, 1, 2, 0)


def circle_dance_gram(r_ab, r_bc, r_cd, r_ad, theta) -> np.ndarray:
    """Canonical circle-dance Gram: ring overlaps only, diagonals exactly zero.

    The four-photon phase theta sits on the cd edge. The concrete
    temporal realization approximates this matrix up to the residual
    <t2|t3> overlap; this is the idealized version the closed form
    describes exactly.
    """
    s = np.eye(4, dtype=complex)
    s[0, 1] = r_ab
    s[1, 2] = r_bc
    s[2, 3] = r_cd * np.exp(1j * theta)
    s[0, 3] = r_ad
    s[1, 0] = np.conj(s[0, 1])
    s[2, 1] = np.conj(s[1, 2])
    s[3, 2] = np.conj(s[2, 3])
    s[3, 0] = np.conj(s[0, 3])
    return s


def circle_dance_probability_from_gram(gram, chi: float) -> float:
    """Engine four-fold probability for a photon-indexed circle-dance Gram."""
    inj = list(_CIRCLE_DANCE_INJECTION)
    gram_inputs = np.asarray(gram, dtype=complex)[np.ix_(inj, inj)]
    return event_probability(quitter(chi), gram_inputs, (1, 1, 1, 1), (1, 1, 1, 1))


def circle_dance_subset_probability_from_gram(gram, photons, pattern,
                                              chi: float) -> float:
    """Partial detection with only the named photons (by a,b,c,d index) present."""
    input_of = {photon: mode for mode, photon in enumerate(_CIRCLE_DANCE_INJECTION)}
    inputs = sorted(input_of[p] for p in photons)
    by_input = {input_of[p]: p for p in photons}
    order = [by_input[i] for i in inputs]
    sub = np.asarray(gram, dtype=complex)[np.ix_(order, order)]
    r = tuple(1 if m in inputs else 0 for m in range(4))
    return event_probability(quitter(chi), sub, r, tuple(pattern))


def circle_dance_visibility(split: float, chi: float = math.pi / 2,
                            width_ratio: float = 2.2) -> float:
    """Fringe visibility (max - min)/max of the four-fold theta fringe."""
    lo = CircleDanceScenario(theta=0.0, chi=chi, width_ratio=width_ratio, split=split)
    r_ab, r_bc, r_cd, r_ad = circle_dance_ring_overlaps(lo)
    values = [
        circle_dance_formula(r_ab, r_bc, r_cd, r_ad, chi, th)
        for th in (0.0, math.pi)
    ]
    top, bottom = max(values), min(values)
    return (top - bottom) / top


def circle_dance_max_visibility(
    chi: float = math.pi / 2,
    width_ratio: float = 2.2,
    max_residual: float = 0.1,
    grid: int = 200,
) -> tuple[float, float]:
    """Largest four-fold visibility under the residual-overlap constraint.

    The only free temporal parameter is the symmetric walk-off of the
    narrow photons; the search scans it from the constraint boundary
    outward and returns (visibility, split).
    """
    # |<t2|t3>| = exp(-split^2) for unit narrow width
    boundary = math.sqrt(math.log(1.0 / max_residual))
    splits = np.linspace(boundary, boundary + 4.0, grid)
    best = (0.0, boundary)
    for split in splits:
        v = circle_dance_visibility(split, chi=chi, width_ratio=width_ratio)
        if v > best[0]:
            best = (v, float(split))
    return best


# --- locking signal ----------------------------------------------------------

# input pair and output pair on the quitter realizing the locking formula;
# fixed by exhaustive search over port pairings against the closed form
LOCKING_INPUTS = (0, 3)
LOCKING_OUTPUTS = (0, 2)


def locking_signal(chi: float, r: float) -> float:
    """Two-photon coincidence used to stabilize the quitter phase."""
    if not 0.0 <= r <= 1.0:
        raise ValueError(f"overlap modulus must lie in [0, 1], got {r}")
    return (1.0 - r**2 * math.cos(chi)) / 8.0


def locking_engine_value(chi: float, r: float) -> float:
    """Engine evaluation of the locking coincidence at overlap modulus r."""
    s = np.array([[1.0, r], [r, 1.0]], dtype=complex)
    rin = tuple(1 if m in LOCKING_INPUTS else 0 for m in range(4))
    sout = tuple(1 if m in LOCKING_OUTPUTS else 0 for m in range(4))
    return event_probability(quitter(chi), s, rin, sout)


# --- visibility ---------------------------------------------------------------

def visibility(curve, baseline: float) -> float:
    """Baseline-relative visibility of the strongest feature in a curve.

    Dips count as (baseline - min)/baseline, peaks as (max - baseline)/
    baseline; the larger deviation wins. baseline is normally the
    distinguishable-photon limit.
    """
    if baseline <= 0:
        raise ValueError("baseline must be positive")
    curve = np.asarray(curve, dtype=float)
    lo = float(curve.min())
    hi = float(curve.max())
    dip = (baseline - lo) / baseline
    peak = (hi - baseline) / baseline
    return dip if dip >= peak else peak
