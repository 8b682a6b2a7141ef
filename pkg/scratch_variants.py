import itertools
import math
import time

import numpy as np

from photonsim.sources import (
    HeraldedSetup,
    SourceModel,
    detector_config_a,
    detector_config_b,
    exact_fan_clicks,
    scenario_rate,
    three_photon_sources,
)
from photonsim.experiments import sweep_polarizations, POL_H

model = SourceModel()


def vis(setup):
    dip = scenario_rate(model, setup)
    base = scenario_rate(model, setup, stagger=60.0)
    return (base - dip) / base


def exclusive_111_events(layout):
    """Exactly one click in each output group."""
    events = []
    for combo in itertools.product(*(exact_fan_clicks(layout.groups[k], 1) for k in range(3))):
        req = tuple(d for picked, _ in combo for d in picked)
        forb = tuple(d for _, rest in combo for d in rest)
        events.append((req, forb))
    return tuple(events)


pols_triad = sweep_polarizations(math.pi / 4)
pols_w = (POL_H, POL_H, POL_H)

# triad dip variants
t0 = time.time()
for name, layout in (("config_a", detector_config_a()), ("config_b", detector_config_b())):
    setup = HeraldedSetup(
        layout.unitary, three_photon_sources(pols_triad), exclusive_111_events(layout)
    )
    print(f"triad_dip exclusive {name}: V = {vis(setup):.4f}  [{time.time()-t0:.1f}s]")
    t0 = time.time()

# suppressed (2,1,0) variants: already exclusive; try also forbidding nothing on fan2
layout = detector_config_b()
ev_exact = []
for req, forb in exact_fan_clicks(layout.groups[0], 2):
    ev_exact.append((req + layout.groups[1], forb + layout.groups[2]))
setup = HeraldedSetup(layout.unitary, three_photon_sources(pols_w), tuple(ev_exact))
print(f"suppressed exact-2 veto-all: V = {vis(setup):.4f}")

# variant: inclusive on the pair fan (>=2 clicks), veto output 2 fan only
ev_incl2 = []
for pair in itertools.combinations(layout.groups[0], 2):
    ev_incl2.append((pair + layout.groups[1], layout.groups[2]))
# note: >=2-of-3 via inclusion-exclusion of pairs overcounts triples; quick estimate only
setup2 = HeraldedSetup(layout.unitary, three_photon_sources(pols_w), tuple(ev_incl2))
print(f"suppressed pairs-inclusive (overcounts): V = {vis(setup2):.4f}")

# variant: herald ALSO required on... already heralded; try four-fold herald:
# require the herald arm AND all three... n/a.

# variant: purity applied with shared noise slot for same-arm pair copies
# (cross overlap P^2 + (1-P)^2 = 0.82 instead of 0.9) -- approximate by
# scaling same-arm pair-pair gram entries; monkey test via modified purity map
import photonsim.sources as src

orig = src.scenario_rate

def vis_sameslot(setup):
    import dataclasses
    import numpy as _np
    from photonsim.engine import click_probability as _cp

    def rate(model, setup, stagger=0.0):
        accepted = []
        for combo, weight in src._joint_terms(model, len(setup.sources)):
            photons = []
            heralds_ok = True
            for s, term in zip(setup.sources, combo):
                for arm, n_pair, n_noise in ((s.signal, term.pairs, term.signal_noise),
                                             (s.idler, term.pairs, term.idler_noise)):
                    arm2 = src._stagger_arm(arm, stagger)
                    if arm2.input_mode is None:
                        if setup.heralded and n_pair + n_noise == 0:
                            heralds_ok = False
                    else:
                        photons.extend([(arm2, True)] * n_pair)
                        photons.extend([(arm2, False)] * n_noise)
            if not heralds_ok or not photons:
                continue
            accepted.append((photons, weight))
        top = max(w for _, w in accepted)
        total = 0.0
        p = model.purity
        for photons, weight in accepted:
            if weight < model.weight_floor * top:
                continue
            n = len(photons)
            gram = _np.eye(n, dtype=complex)
            for i in range(n):
                ai, pi = photons[i]
                for j in range(i + 1, n):
                    aj, pj = photons[j]
                    if pi and pj:
                        pure = src._pure_overlap(ai, aj)
                        if ai is aj:
                            g = p * p * pure + (1 - p) ** 2
                        else:
                            g = p * pure
                        gram[i, j] = g
                        gram[j, i] = _np.conj(g)
            modes = [a.input_mode for a, _ in photons]
            total += weight * sum(
                _cp(setup.unitary, gram, modes, rq, fb) for rq, fb in setup.events
            )
        return total

    dip = rate(model, setup)
    base = rate(model, setup, stagger=60.0)
    return (base - dip) / base

setup210 = HeraldedSetup(layout.unitary, three_photon_sources(pols_w), tuple(ev_exact))
print(f"suppressed same-slot copies: V = {vis_sameslot(setup210):.4f}")

setup_triad_b = HeraldedSetup(
    layout.unitary, three_photon_sources(pols_triad), exclusive_111_events(layout)
)
print(f"triad exclusive config_b same-slot: V = {vis_sameslot(setup_triad_b):.4f}")
