import dataclasses
import math

import numpy as np

import photonsim.sources as src
from photonsim.engine import event_probability_photons
from photonsim.experiments import POL_H, mercedes_polarizations, sweep_polarizations
from photonsim.interferometers import tritter
from photonsim.sources import SourceModel, simulate_counts


def perfect_rate(model, pols, pattern, stagger=0.0):
    """Ideal photon-number-resolving detection of an exact output pattern."""
    u = np.asarray(tritter())
    sources = src.three_photon_sources(pols)
    n_target = sum(pattern)
    total = 0.0
    terms = src._joint_terms(model, 2)
    top = max(w for _, w in terms)
    for combo, weight in terms:
        photons = []
        heralds_ok = True
        for s, term in zip(sources, combo):
            for arm, n_pair, n_noise in ((s.signal, term.pairs, term.signal_noise),
                                         (s.idler, term.pairs, term.idler_noise)):
                arm2 = src._stagger_arm(arm, stagger)
                if arm2.input_mode is None:
                    if term.pairs + term.idler_noise == 0:
                        heralds_ok = False
                else:
                    photons.extend([(arm2, True)] * n_pair)
                    photons.extend([(arm2, False)] * n_noise)
        if not heralds_ok or len(photons) != n_target:
            continue
        if weight < model.weight_floor * top:
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
        total += weight * event_probability_photons(u, gram, modes, pattern)
    return total


model = SourceModel()
pols_triad = sweep_polarizations(math.pi / 4)
pols_w = (POL_H, POL_H, POL_H)

for name, pols, pattern in (
    ("triad 111 perfect", pols_triad, (1, 1, 1)),
    ("suppressed 210 perfect", pols_w, (2, 1, 0)),
):
    dip = perfect_rate(model, pols, pattern)
    base = perfect_rate(model, pols, pattern, stagger=60.0)
    print(f"{name}: V = {(base-dip)/base:.4f}")

# suppressed: sum of (2,1,0) and (2,0,1)
d1 = perfect_rate(model, pols_w, (2, 1, 0))
b1 = perfect_rate(model, pols_w, (2, 1, 0), 60.0)
d2 = perfect_rate(model, pols_w, (2, 0, 1))
b2 = perfect_rate(model, pols_w, (2, 0, 1), 60.0)
print(f"suppressed sum perfect: V = {(b1+b2-d1-d2)/(b1+b2):.4f}")

# index swap: signal noise 0.035, idler noise 0.009
swapped = SourceModel(idler_noise=0.009, signal_noise=0.035)
for name in ("twofold_identical", "twofold_mercedes", "suppressed_210", "triad_dip"):
    res = simulate_counts(swapped, name)
    print(f"swapped {name}: V = {res.visibility:.4f}")
