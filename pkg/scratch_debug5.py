import numpy as np
from scipy.spatial import cKDTree
from photonsim.lattice import (
    graphene_rectangle, CouplingModel, VortexField, kekule_displacement,
    nearest_coupling, dirac_point,
)

model = CouplingModel()
a0 = 10.0
geo = graphene_rectangle(200.0, 200.0, lattice_constant=a0)
t = nearest_coupling(model, a0)
kplus = dirac_point(a0)
gvec = 2.0 * kplus
pos = geo.positions
sub = geo.sublattice
tree = cKDTree(pos)
pairs = tree.query_pairs(1.05 * a0, output_type="ndarray")

def spectrum_of(tfun):
    n = geo.n_sites
    h = np.zeros((n, n))
    for i, j in pairs:
        a, b = (i, j) if sub[i] == 0 else (j, i)
        s_vec = pos[b] - pos[a]
        tij = tfun(pos[a], s_vec)
        h[i, j] = -tij
        h[j, i] = -tij
    evals = np.linalg.eigvalsh(h)
    aE = np.abs(evals)
    zeros = int(np.sum(aE < 1e-12 * aE.max()))
    first = np.sort(aE[aE > 1e-12 * aE.max()])[0]
    return zeros, first / t

m = 0.3 * t
for ks in (+1, -1):
    for gs in (+1, -1):
        def tf(ra, s, ks=ks, gs=gs):
            return t + 2.0 * np.real((m / 3.0) * np.exp(1j * ks * (kplus @ s))
                                     * np.exp(1j * gs * (gvec @ ra)) * np.exp(1j * np.pi / 2))
        zeros, first = spectrum_of(tf)
        print(f"e^({ks:+d}iK.s) e^({gs:+d}iG.r): zeros={zeros} first nonzero |E|/t={first:.4f}")

print(f"imbalance={int(np.sum(sub==0)) - int(np.sum(sub==1))}  pristine check:")
zeros, first = spectrum_of(lambda ra, s: t)
print(f"pristine: zeros={zeros} first/t={first:.4f}")
