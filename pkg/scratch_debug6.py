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
print(f"sites={geo.n_sites}")

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
for ks, gs in [(+1, +1), (-1, -1)]:
    row = []
    for alpha in [0.0, np.pi / 6, np.pi / 3, np.pi / 2, 2 * np.pi / 3]:
        def tf(ra, s, ks=ks, gs=gs, alpha=alpha):
            return t + 2.0 * np.real((m / 3.0) * np.exp(1j * ks * (kplus @ s))
                                     * np.exp(1j * gs * (gvec @ ra)) * np.exp(1j * alpha))
        row.append(f"a={alpha:.2f}:{first_nonzero(tf):.4f}")
    print(f"({ks:+d}K,{gs:+d}G): " + "  ".join(row))
