import numpy as np
from photonsim.lattice import vortex_lattice, coupling_hamiltonian, spectrum
from photonsim.lattice.hamiltonian import _disentangle_clusters, _region_fractions

vl = vortex_lattice()
geo = vl.geometry
h = coupling_hamiltonian(geo, vl.model)
evals, evecs = spectrum(h)
center = np.asarray(vl.field.center)
rel = geo.positions - center
core_mask = np.hypot(rel[:, 0], rel[:, 1]) <= 2 * vl.field.width

order = np.argsort(np.abs(evals))
sv = evals[order]
tol = 1e-12 + 1e-9 * np.abs(evals).max()
print("first 24 |E|-sorted signed values:", np.array2string(sv[:24], precision=3, max_line_width=200))
print("tol =", tol)

cands = _disentangle_clusters(evals, evecs, core_mask)
for rank, (energy, mode) in enumerate(cands[:24]):
    core, edge = _region_fractions(mode, geo, center, 2 * vl.field.width, 20.0)
    print(f"rank={rank} E={energy:+.3e} core={core:.3f} edge={edge:.3f}")
