import numpy as np
from scipy.spatial import cKDTree
from photonsim.lattice import (
    graphene_rectangle, CouplingModel, nearest_coupling, dirac_point,
)

model = CouplingModel()
a0 = 10.0
geo = graphene_rectangle(240.0, 240.0, lattice_constant=a0)
t = nearest_coupling(model, a0)
kplus = dirac_point(a0)
gvec = 2.0 * kplus
pos = geo.positions
sub = geo.sublattice
tree = cKDTree(pos)
pairs = tree.query_pairs(1.05 * a0, output_type="ndarray")

def first_nonzero(tfun):
    n = geo.n_sites
    h = np.zeros((n, n))
    for i, j in pairs:
        a, b = (i, j) if sub[i] == 0 else (j, i)
        tij = tfun(pos[a], pos[b] - pos[a])
        h[i, j] = -tij
        h[j, i] = -tij
    evals = np.abs(np.linalg.eigvalsh(h))
    return np.sort(evals[evals > 1e-12 * evals.max()])[0] / t

m = 0.3 * t
def harm(ra, s, p, q, alpha=np.pi / 2):
    return 2.0 * np.real((m / 3.0) * np.exp(1j * p * (kplus @ s))
                         * np.exp(1j * q * (gvec @ ra)) * np.exp(1j * alpha))

print(f"pristine:            first/t={first_nonzero(lambda ra, s: t):.4f}")
print(f"crossed (-K,+G):     first/t={first_nonzero(lambda ra, s: t + harm(ra, s, -1, +1)):.4f}")
print(f"breathing (0,+G):    first/t={first_nonzero(lambda ra, s: t + harm(ra, s, 0, +1)):.4f}")
print(f"crossed + breathing: first/t={first_nonzero(lambda ra, s: t + harm(ra, s, -1, +1) + harm(ra, s, 0, +1)):.4f}")
print(f"gapping + breathing: first/t={first_nonzero(lambda ra, s: t + harm(ra, s, +1, +1) + harm(ra, s, 0, +1)):.4f}")
