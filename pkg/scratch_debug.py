import numpy as np

from photonsim.engine import event_probability
from photonsim.oracle import brute_force_probability
from photonsim.states import InternalState, states_from_gram

rng = np.random.default_rng(7)

def rand_unitary(m):
    a = rng.normal(size=(m, m)) + 1j * rng.normal(size=(m, m))
    q, r = np.linalg.qr(a)
    return q * (np.diag(r) / np.abs(np.diag(r)))

bad = 0
worst = 0.0
for trial in range(60):
    m = int(rng.integers(2, 5))
    n = int(rng.integers(2, 5))
    u = rand_unitary(m)
    stat = ["boson", "fermion", "classical"][trial % 3]
    r = [0] * m
    if stat == "boson":
        for _ in range(n):
            r[rng.integers(0, m)] += 1
    else:
        if n > m:
            continue
        for k in rng.permutation(m)[:n]:
            r[k] += 1
    occ = sorted({k for k in range(m) if r[k]})
    # explicit random internal vectors, one per occupied mode
    d = len(occ) + 1
    vecs = rng.normal(size=(len(occ), d)) + 1j * rng.normal(size=(len(occ), d))
    vecs /= np.linalg.norm(vecs, axis=1, keepdims=True)
    gram = vecs @ vecs.conj().T
    states = [InternalState(v, basis="x") for v in vecs]
    s = [0] * m
    for _ in range(n):
        s[rng.integers(0, m)] += 1
    p_eng = event_probability(u, gram, tuple(r), tuple(s), stat)
    p_orc = brute_force_probability(u, states, tuple(r), tuple(s), stat)
    diff = abs(p_eng - p_orc)
    worst = max(worst, diff)
    if diff > 1e-9:
        bad += 1
        print("MISMATCH", stat, r, s, p_eng, p_orc, diff)
print("explicit-vector mismatches:", bad, "worst:", worst)

# now same but through states_from_gram embedding
bad = 0
worst = 0.0
for trial in range(60):
    m = int(rng.integers(2, 5))
    n = int(rng.integers(2, 5))
    u = rand_unitary(m)
    stat = ["boson", "fermion", "classical"][trial % 3]
    r = [0] * m
    if stat == "boson":
        for _ in range(n):
            r[rng.integers(0, m)] += 1
    else:
        if n > m:
            continue
        for k in rng.permutation(m)[:n]:
            r[k] += 1
    occ = sorted({k for k in range(m) if r[k]})
    d = len(occ) + 1
    vecs = rng.normal(size=(len(occ), d)) + 1j * rng.normal(size=(len(occ), d))
    vecs /= np.linalg.norm(vecs, axis=1, keepdims=True)
    gram = vecs @ vecs.conj().T
    emb = states_from_gram(gram)
    gram2 = np.array([[np.vdot(a.amplitudes, b.amplitudes) for b in emb] for a in emb])
    err = np.max(np.abs(gram2 - gram))
    s = [0] * m
    for _ in range(n):
        s[rng.integers(0, m)] += 1
    p_eng = event_probability(u, gram, tuple(r), tuple(s), stat)
    p_orc = brute_force_probability(u, gram, tuple(r), tuple(s), stat)
    diff = abs(p_eng - p_orc)
    if diff > 1e-9:
        bad += 1
        print("GRAM MISMATCH", stat, r, s, diff, "embed err:", err)
    worst = max(worst, diff)
print("gram-path mismatches:", bad, "worst:", worst)
