import itertools
import math

import numpy as np

import photonsim.sources as src
from photonsim.engine import click_probability, event_probability_photons
from photonsim.experiments import POL_H, sweep_polarizations
from photonsim.interferometers import tritter
from photonsim.sources import (
    HeraldedSetup,
    SourceModel,
    detector_config_b,
    exact_fan_clicks,
    three_photon_sources,
)

model = SourceModel()
pols_triad = sweep_polarizations(math.pi / 4)
pols_w = (POL_H, POL_H, POL_H)


def rate(setup, stagger, scanned, perfect_pattern=None):
    total = 0.0
    terms = src._joint_terms(model, len(setup.sources))
    top = max(w for _, w in terms)
    for combo, weight in terms:
        if weight < model.weight_floor * top:
            continue
        photons = []
        heralds_ok = True
        for s, term in zip(setup.sources, combo):
            for arm, n_pair, n_noise in ((s.signal, term.pairs, term.signal_noise),
                                         (s.idler, term.pairs, term.idler_noise)):
                if arm.input_mode is not None and arm.input_mode in scanned and stagger:
                    arm = src._stagger_arm(arm, stagger)
                if arm.input_mode is None:
                    if setup.heralded and term.pairs + term.idler_noise == 0:
                        heralds_ok = False
                else:
                    photons.extend([(arm, True)] * n_pair)
                    photons.extend([(arm, False)] * n_noise)
        if not heralds_ok or not photons:
            continue
        if perfect_pattern is not None and len(photons) != sum(perfect_pattern):
            continue
        n = len(photons)
        gram = np.eye(n, dtype=complex)
        for i in range(n):
            ai, pi = photons[i]
            for j in range(i + 1, n):
                aj, pj = photons[j]
                if pi and pj:
                    g = model.purity * src._pure_overlap(ai, aj)
                    gram[i, j] = g
                    gram[j, i] = np.conj(g)
        modes = [a.input_mode for a, _ in photons]
        if perfect_pattern is not None:
            total += weight * event_probability_photons(
                np.asarray(tritter()), gram, modes, perfect_pattern
            )
        else:
            total += weight * sum(
                click_probability(setup.unitary, gram, modes, rq, fb)
                for rq, fb in setup.events
            )
    return total


def vis(setup, scanned, perfect_pattern=None):
    dip = rate(setup, 0.0, scanned, perfect_pattern)
    base = rate(setup, 60.0, scanned, perfect_pattern)
    return (base - dip) / base


layout = detector_config_b()


def exclusive_111_events():
    events = []
    for combo in itertools.product(*(exact_fan_clicks(layout.groups[k], 1) for k in range(3))):
        req = tuple(d for picked, _ in combo for d in picked)
        forb = tuple(d for _, rest in combo for d in rest)
        events.append((req, forb))
    return tuple(events)


# triad dip, scanned photon = input 0 only
triad_sources = three_photon_sources(pols_triad)
setup_incl = HeraldedSetup(np.asarray(tritter()), triad_sources, (((0, 1, 2), ()),))
setup_excl = HeraldedSetup(layout.unitary, triad_sources, exclusive_111_events())
print("triad scan-only-a inclusive:", f"{vis(setup_incl, (0,)):.4f}")
print("triad scan-only-a exclusive-b:", f"{vis(setup_excl, (0,)):.4f}")
print("triad scan-only-a perfect:", f"{vis(setup_incl, (0,), (1, 1, 1)):.4f}")

# suppressed, scanned photons = inputs 0 and 2
w_sources = three_photon_sources(pols_w)
ev210 = []
for req, forb in exact_fan_clicks(layout.groups[0], 2):
    ev210.append((req + layout.groups[1], forb + layout.groups[2]))
ev201 = []
for req, forb in exact_fan_clicks(layout.groups[0], 2):
    for req2, forb2 in exact_fan_clicks(layout.groups[2], 1):
        ev201.append((req + req2, forb + forb2 + layout.groups[1]))
setup210 = HeraldedSetup(layout.unitary, w_sources, tuple(ev210))
setup_sum = HeraldedSetup(layout.unitary, w_sources, tuple(ev210) + tuple(ev201))
print("suppressed 210 cascade:", f"{vis(setup210, (0, 2)):.4f}")
print("suppressed 210+201 cascade:", f"{vis(setup_sum, (0, 2)):.4f}")
print("suppressed 210 perfect:", f"{vis(setup210, (0, 2), (2, 1, 0)):.4f}")
