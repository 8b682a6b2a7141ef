import itertools
import math

import numpy as np

from photonsim.engine import event_probability, event_probability_photons
from photonsim.experiments import (
    CircleDanceScenario,
    circle_dance_formula,
    circle_dance_max_visibility,
    circle_dance_probability,
    circle_dance_ring_overlaps,
    locking_signal,
    mercedes_scenario,
    sweep_phase,
    sweep_states,
    triad_sweep,
    tritter_pattern_probability,
    w_shape_scenario,
    w_shape_scan,
)
from photonsim.interferometers import quitter, tritter
from photonsim.oracle import brute_force_probability
from photonsim.states import (
    GaussianWavepacket,
    distinguishability_matrix,
    gaussian_overlap,
    product_states,
    triad_phase,
)

rng = np.random.default_rng(7)

# 1. HOM
bs = np.array([[1, 1], [1, -1]]) / math.sqrt(2)
s_id = np.ones((2, 2), dtype=complex)
print("HOM identical P11:", event_probability(bs, s_id, (1, 1), (1, 1)))
print("HOM identical P20:", event_probability(bs, s_id, (1, 1), (2, 0)))
print("HOM fermion  P11:", event_probability(bs, s_id, (1, 1), (1, 1), "fermion"))
print("HOM classical P11:", event_probability(bs, np.eye(2, dtype=complex), (1, 1), (1, 1), "classical"))

# 2. oracle spot equivalence
def rand_unitary(m):
    a = rng.normal(size=(m, m)) + 1j * rng.normal(size=(m, m))
    q, r = np.linalg.qr(a)
    return q * (np.diag(r) / np.abs(np.diag(r)))

def rand_states_gram(k):
    d = k + 1
    vecs = rng.normal(size=(k, d)) + 1j * rng.normal(size=(k, d))
    vecs /= np.linalg.norm(vecs, axis=1, keepdims=True)
    return vecs @ vecs.conj().T

bad = 0
for trial in range(30):
    m = rng.integers(2, 5)
    n = rng.integers(2, 5)
    u = rand_unitary(m)
    r = [0] * m
    for _ in range(n):
        r[rng.integers(0, m)] += 1
    modes = [k for k in range(m) for _ in range(r[k])]
    stat = ["boson", "fermion", "classical"][trial % 3]
    if stat in ("fermion", "classical"):
        if n > m:
            continue
        r = [0] * m
        for k in rng.permutation(m)[:n]:
            r[k] += 1
    gram = rand_states_gram(len(set(k for k in range(m) if r[k])) or 1)
    occ = sorted({k for k in range(m) if r[k]})
    gram = rand_states_gram(len(occ))
    s = [0] * m
    for _ in range(n):
        s[rng.integers(0, m)] += 1
    p_eng = event_probability(u, gram, tuple(r), tuple(s), stat)
    p_orc = brute_force_probability(u, gram, tuple(r), tuple(s), stat)
    if abs(p_eng - p_orc) > 1e-9:
        bad += 1
        print("MISMATCH", stat, r, s, p_eng, p_orc)
print("oracle спot-check mismatches:", bad)

# 3. W-shape
sc = w_shape_scenario()
taus = np.linspace(0, 20, 9)
curve = w_shape_scan(sc, taus)
print("W P(0):", curve[0], "asym:", curve[-1])

mc = mercedes_scenario()
print("Mercedes P(0):", w_shape_scan(mc, [0.0])[0], "(expect 1/12 =", 1 / 12, ")")

# 4. triad sweep constancy + formula
res = triad_sweep(np.linspace(0, math.pi / 2, 7))
print("sweep p011 spread:", res.p011.max() - res.p011.min())
print("sweep p101 spread:", res.p101.max() - res.p101.min())
print("sweep p110 spread:", res.p110.max() - res.p110.min())
pred = [tritter_pattern_probability((1, 1, 1), 0.5, 0.5, 0.5, ph) for ph in res.phase]
print("sweep p111 vs formula max err:", np.max(np.abs(res.p111 - pred)))
print("phase(0):", res.phase[0], "phase(pi/8):", sweep_phase(math.pi / 8), "(expect 5pi/3 =", 5 * math.pi / 3, ")")

# triad phase from states matches closed form
st = sweep_states(math.pi / 8)
print("triad_phase(states):", triad_phase(*st))

# 5. circle dance engine vs formula
scn = CircleDanceScenario(theta=0.7)
p_eng = circle_dance_probability(scn)
r_ab, r_bc, r_cd, r_ad = circle_dance_ring_overlaps(scn)
p_form = circle_dance_formula(r_ab, r_bc, r_cd, r_ad, scn.chi, scn.theta)
print("circle dance engine:", p_eng, "formula:", p_form, "diff:", abs(p_eng - p_form))
print("ring overlaps:", r_ab, r_bc, r_cd, r_ad)
scn0 = CircleDanceScenario(theta=0.0, split=3.0)
print("r at split=3: ", circle_dance_ring_overlaps(scn0))

vis, split = circle_dance_max_visibility()
print("max visibility:", vis, "at split:", split, "(boundary", math.sqrt(math.log(10)), ")")

# frozen check 0.0546875 at r=1/2 exactly, chi=pi/2, theta=0
print("formula r=1/2:", circle_dance_formula(0.5, 0.5, 0.5, 0.5, math.pi / 2, 0.0), "expect", 7 / 128)

# 6. locking port search
grid_r = [0.0, 0.3, 0.7, 1.0]
grid_chi = [0.2, 1.1, 2.5]
hits = []
for ins in itertools.combinations(range(4), 2):
    for outs in itertools.combinations(range(4), 2):
        ok = True
        for r in grid_r:
            for chi in grid_chi:
                s = np.array([[1.0, r], [r, 1.0]], dtype=complex)
                rin = tuple(1 if m in ins else 0 for m in range(4))
                sout = tuple(1 if m in outs else 0 for m in range(4))
                p = event_probability(quitter(chi), s, rin, sout)
                if abs(p - locking_signal(chi, r)) > 1e-10:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            hits.append((ins, outs))
print("locking port pairings matching formula:", hits)
