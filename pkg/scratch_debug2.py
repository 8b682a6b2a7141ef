import numpy as np

from photonsim.engine import event_probability
from photonsim.oracle import brute_force_probability
from photonsim.states import InternalState, states_from_gram

rng = np.random.default_rng(123)

m, n = 3, 3
u_a = rng.normal(size=(m, m)) + 1j * rng.normal(size=(m, m))
q, rr = np.linalg.qr(u_a)
u = q * (np.diag(rr) / np.abs(np.diag(rr)))

vecs = rng.normal(size=(3, 4)) + 1j * rng.normal(size=(3, 4))
vecs /= np.linalg.norm(vecs, axis=1, keepdims=True)
gram = vecs @ vecs.conj().T
states = [InternalState(v, basis="x") for v in vecs]
emb = states_from_gram(gram)
gram_emb = np.array([[np.vdot(a.amplitudes, b.amplitudes) for b in emb] for a in emb])
print("embed max err:", np.max(np.abs(gram_emb - gram)))
print("embed dims:", [e.dim for e in emb])

r = (1, 1, 1)
for s in [(0, 2, 1), (1, 1, 1), (3, 0, 0), (2, 1, 0)]:
    p_eng = event_probability(u, gram, r, s, "fermion")
    p_exp = brute_force_probability(u, states, r, s, "fermion")
    p_gra = brute_force_probability(u, gram, r, s, "fermion")
    p_emb = brute_force_probability(u, emb, r, s, "fermion")
    print(s, "eng", f"{p_eng:.12f}", "explicit", f"{p_exp:.12f}",
          "gram", f"{p_gra:.12f}", "embedded", f"{p_emb:.12f}")

# fermion totals: do distributions sum to 1 for each path?
from photonsim.oracle import brute_force_distribution
tot_exp = sum(brute_force_distribution(u, states, r, "fermion").values())
tot_emb = sum(brute_force_distribution(u, emb, r, "fermion").values())
print("totals explicit:", tot_exp, "embedded:", tot_emb)
