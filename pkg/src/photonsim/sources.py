"""Heralded pair sources with impurity, background photons and detector fans.

Models the counting experiments: each parametric source emits geometrically
distributed photon pairs plus uncorrelated background photons in both arms,
single-photon purity folds into the pairwise overlap matrix, and heralding
selects emission terms with at least one photon in every herald arm. Event
rates come from the inclusion-exclusion click calculus of the engine, so
multi-photon terms need one permanent per vacuum term rather than a sum
over output patterns.
"""

from __future__ import annotations

import dataclasses
import itertools
import math
from dataclasses import dataclass

import numpy as np

from .engine import click_probability, event_probability_photons
from .experiments import (
    CIRCLE_DANCE_SPLIT,
    POL_H,
    POL_PLUS,
    POL_V,
    mercedes_polarizations,
    sweep_polarizations,
)
from .interferometers import beamsplitter, quitter, tritter
from .states import (
    GaussianWavepacket,
    PolarizationState,
    polarization_overlap,
    unequal_width_overlap,
)


@dataclass(frozen=True)
class SourceModel:
    """Parameters of one pair source; both sources are assumed identical.

    squeezing is the pair amplitude (probability of n pairs goes as its
    2n-th power), purity the single-photon purity, and the two noise
    rates govern uncorrelated background photons in the idler and signal
    arms respectively.
    """

    squeezing: float = 0.16
    purity: float = 0.9
    idler_noise: float = 0.035
    signal_noise: float = 0.009
    max_total_photons: int = 8
    max_noise_photons: int = 3
    weight_floor: float = 1e-9


@dataclass(frozen=True)
class EmissionTerm:
    pairs: int
    signal_noise: int
    idler_noise: int
    weight: float


def source_emission_density(model: SourceModel) -> list[EmissionTerm]:
    """Truncated, renormalized emission distribution of a single source."""
    lam2 = model.squeezing**2
    max_pairs = model.max_total_photons // 2
    terms = []
    for n in range(max_pairs + 1):
        for k in range(model.max_noise_photons + 1):
            for l in range(model.max_noise_photons + 1):
                w = (
                    (1.0 - lam2) * lam2**n
                    * (1.0 - model.signal_noise) * model.signal_noise**k
                    * (1.0 - model.idler_noise) * model.idler_noise**l
                )
                terms.append(EmissionTerm(n, k, l, w))
    total = sum(t.weight for t in terms)
    return [dataclasses.replace(t, weight=t.weight / total) for t in terms]


def _joint_terms(model: SourceModel, n_sources: int):
    """Joint emission terms across sources, truncated and renormalized."""
    single = source_emission_density(model)
    joint = []
    for combo in itertools.product(single, repeat=n_sources):
        photons = sum(2 * t.pairs + t.signal_noise + t.idler_noise for t in combo)
        noise = sum(t.signal_noise + t.idler_noise for t in combo)
        if photons > model.max_total_photons or noise > model.max_noise_photons:
            continue
        joint.append((combo, math.prod(t.weight for t in combo)))
    total = sum(w for _, w in joint)
    return [(combo, w / total) for combo, w in joint]


# --- experimental layouts ----------------------------------------------------

@dataclass(frozen=True)
class ArmSpec:
    """One output arm of a source. input_mode None marks a herald arm."""

    input_mode: int | None
    delay: float
    width: float
    polarization: PolarizationState


@dataclass(frozen=True)
class PdcSource:
    signal: ArmSpec
    idler: ArmSpec


@dataclass(frozen=True, eq=False)
class HeraldedSetup:
    """Interferometer, source wiring and the detection event definition.

    events is a tuple of (required, forbidden) detector-mode tuples; the
    event rate is the sum over those combinations. heralded demands at
    least one photon in every herald arm of every source. When
    exact_pattern is set, events is ignored and the rate is instead the
    number-resolved probability of that output pattern; the pattern must
    cover every interferometer mode, so emission terms with the wrong
    photon total contribute exactly zero and are skipped.
    """

    unitary: np.ndarray
    sources: tuple[PdcSource, ...]
    events: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    heralded: bool = True
    exact_pattern: tuple[int, ...] | None = None


def _pure_overlap(a: ArmSpec, b: ArmSpec) -> complex:
    temporal = unequal_width_overlap(
        GaussianWavepacket(a.delay, a.width), GaussianWavepacket(b.delay, b.width)
    )
    return temporal * polarization_overlap(a.polarization, b.polarization)


def _stagger_arm(arm: ArmSpec, stagger: float) -> ArmSpec:
    if arm.input_mode is None or stagger == 0.0:
        return arm
    return dataclasses.replace(arm, delay=arm.delay + stagger * (arm.input_mode + 1))


def scenario_rate(model: SourceModel, setup: HeraldedSetup, stagger: float = 0.0) -> float:
    """Expected rate of the setup's detection event under the source model.

    stagger shifts every injected arm's delay by a distinct multiple,
    which for a large value realizes the distinguishable-photon baseline
    while leaving photons sharing an arm untouched.
    """
    accepted = []
    for combo, weight in _joint_terms(model, len(setup.sources)):
        photons = []  # (arm, is_pair)
        heralds_ok = True
        for src, term in zip(setup.sources, combo):
            for arm, n_pair, n_noise in (
                (src.signal, term.pairs, term.signal_noise),
                (src.idler, term.pairs, term.idler_noise),
            ):
                arm = _stagger_arm(arm, stagger)
                if arm.input_mode is None:
                    if setup.heralded and n_pair + n_noise == 0:
                        heralds_ok = False
                else:
                    photons.extend([(arm, True)] * n_pair)
                    photons.extend([(arm, False)] * n_noise)
        if not heralds_ok or not photons:
            continue
        if setup.exact_pattern is not None and len(photons) != sum(setup.exact_pattern):
            continue
        accepted.append((photons, weight))
    if not accepted:
        return 0.0

    top = max(w for _, w in accepted)
    rate = 0.0
    for photons, weight in accepted:
        if weight < model.weight_floor * top:
            continue
        n = len(photons)
        gram = np.eye(n, dtype=complex)
        for i in range(n):
            arm_i, pair_i = photons[i]
            for j in range(i + 1, n):
                arm_j, pair_j = photons[j]
                if pair_i and pair_j:
                    g = model.purity * _pure_overlap(arm_i, arm_j)
                    gram[i, j] = g
                    gram[j, i] = np.conj(g)
        modes = [arm.input_mode for arm, _ in photons]
        if setup.exact_pattern is not None:
            rate += weight * event_probability_photons(
                setup.unitary, gram, modes, setup.exact_pattern
            )
        else:
            rate += weight * sum(
                click_probability(setup.unitary, gram, modes, required, forbidden)
                for required, forbidden in setup.events
            )
    return rate


# --- detector fan-outs --------------------------------------------------------

@dataclass(frozen=True, eq=False)
class DetectorLayout:
    unitary: np.ndarray
    groups: dict[int, tuple[int, ...]]


def _embed_unitary(total: int, block: np.ndarray, modes) -> np.ndarray:
    out = np.eye(total, dtype=complex)
    idx = np.asarray(modes, dtype=int)
    out[np.ix_(idx, idx)] = np.asarray(block, dtype=complex)
    return out


def detector_config_a() -> DetectorLayout:
    """First output split by a two-stage 50:50 chain (1/2, 1/4, 1/4)."""
    bs = np.asarray(beamsplitter())
    u = _embed_unitary(5, np.asarray(tritter()), (0, 1, 2))
    u = u @ _embed_unitary(5, bs, (0, 3))
    u = u @ _embed_unitary(5, bs, (3, 4))
    return DetectorLayout(u, {0: (0, 3, 4), 1: (1,), 2: (2,)})


def detector_config_b() -> DetectorLayout:
    """First and third outputs each fanned into three balanced detectors."""
    fan = np.asarray(tritter())
    u = _embed_unitary(7, fan, (0, 1, 2))
    u = u @ _embed_unitary(7, fan, (0, 3, 4))
    u = u @ _embed_unitary(7, fan, (2, 5, 6))
    return DetectorLayout(u, {0: (0, 3, 4), 1: (1,), 2: (2, 5, 6)})


def exact_fan_clicks(group, count: int):
    """(required, forbidden) splits of a fan realizing an exact click count."""
    group = tuple(group)
    for chosen in itertools.combinations(group, count):
        rest = tuple(d for d in group if d not in chosen)
        yield chosen, rest


# --- the four counting experiments -------------------------------------------

def _herald_arm() -> ArmSpec:
    return ArmSpec(None, 0.0, 1.0, POL_H)


def two_fold_setup(pol_a: PolarizationState, pol_b: PolarizationState,
                   width: float = 1.0) -> HeraldedSetup:
    """Two heralded signal photons on tritter inputs 0 and 1; both idlers herald."""
    sources = (
        PdcSource(ArmSpec(0, 0.0, width, pol_a), _herald_arm()),
        PdcSource(ArmSpec(1, 0.0, width, pol_b), _herald_arm()),
    )
    events = (((0, 1), ()),)
    return HeraldedSetup(np.asarray(tritter()), sources, events)


def three_photon_sources(pols, width: float = 1.0) -> tuple[PdcSource, PdcSource]:
    """Signal 1 heralded by its idler; source 2 contributes signal and idler."""
    return (
        PdcSource(ArmSpec(0, 0.0, width, pols[0]), _herald_arm()),
        PdcSource(
            ArmSpec(1, 0.0, width, pols[1]), ArmSpec(2, 0.0, width, pols[2])
        ),
    )


def suppressed_setup(width: float = 1.0) -> HeraldedSetup:
    """Number-resolved (2,1,0) pattern with three identical photons."""
    return HeraldedSetup(
        np.asarray(tritter()),
        three_photon_sources((POL_H, POL_H, POL_H), width),
        (),
        exact_pattern=(2, 1, 0),
    )


def suppressed_cascade_setup(width: float = 1.0) -> HeraldedSetup:
    """The (2,1,0) pattern read off the fanned detector layout instead.

    Pseudo-number resolution through the fan misses the events where both
    bunched photons hit the same physical detector, so this sits below the
    number-resolved rate by a known combinatorial factor.
    """
    layout = detector_config_b()
    events = []
    for req, forb in exact_fan_clicks(layout.groups[0], 2):
        events.append((req + layout.groups[1], forb + layout.groups[2]))
    return HeraldedSetup(
        layout.unitary,
        three_photon_sources((POL_H, POL_H, POL_H), width),
        tuple(events),
    )


def triad_dip_setup(width: float = 1.0) -> HeraldedSetup:
    """Number-resolved three-fold coincidence at triad phase pi, moduli 1/2."""
    pols = sweep_polarizations(math.pi / 4)
    return HeraldedSetup(
        np.asarray(tritter()),
        three_photon_sources(pols, width),
        (),
        exact_pattern=(1, 1, 1),
    )


def quitter_fourfold_setup(theta: float, chi: float = math.pi / 2,
                           width_ratio: float = 2.2) -> HeraldedSetup:
    """Unheralded four-photon coincidence on the quitter (cyclic overlaps)."""
    split = CIRCLE_DANCE_SPLIT
    pol_d = PolarizationState(
        1.0 / math.sqrt(2), np.exp(1j * theta) / math.sqrt(2)
    )
    sources = (
        PdcSource(
            ArmSpec(3, 0.0, width_ratio, POL_H),
            ArmSpec(0, split, 1.0, pol_d),
        ),
        PdcSource(
            ArmSpec(1, -split, 1.0, POL_PLUS),
            ArmSpec(2, 0.0, width_ratio, POL_V),
        ),
    )
    events = (((0, 1, 2, 3), ()),)
    return HeraldedSetup(np.asarray(quitter(chi)), sources, events, heralded=False)


@dataclass(frozen=True)
class SimulationResult:
    scenario: str
    dip_rate: float
    baseline_rate: float
    visibility: float


_SCENARIOS = (
    "twofold_identical",
    "twofold_mercedes",
    "suppressed_210",
    "triad_dip",
)


def _setup_for(scenario: str, width: float) -> HeraldedSetup:
    if scenario == "twofold_identical":
        return two_fold_setup(POL_H, POL_H, width)
    if scenario == "twofold_mercedes":
        pols = mercedes_polarizations()
        return two_fold_setup(pols[0], pols[1], width)
    if scenario == "suppressed_210":
        return suppressed_setup(width)
    if scenario == "triad_dip":
        return triad_dip_setup(width)
    raise ValueError(f"unknown scenario {scenario!r}; expected one of {_SCENARIOS}")


def simulate_counts(model: SourceModel, scenario: str,
                    width: float = 1.0) -> SimulationResult:
    """Dip and distinguishable-baseline rates plus the model visibility.

    The baseline staggers every injected arm by 60 widths, which kills
    all cross-arm overlaps without touching same-arm ones, matching the
    far-delay wings of the measured scans.
    """
    setup = _setup_for(scenario, width)
    dip = scenario_rate(model, setup)
    base = scenario_rate(model, setup, stagger=60.0 * width)
    return SimulationResult(scenario, dip, base, (base - dip) / base)


def model_visibilities(model: SourceModel) -> dict[str, float]:
    """Visibility of each counting experiment under the full source model."""
    return {name: simulate_counts(model, name).visibility for name in _SCENARIOS}
