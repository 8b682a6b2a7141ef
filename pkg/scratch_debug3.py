import numpy as np
from photonsim.lattice import (
    vortex_lattice, coupling_hamiltonian, spectrum, nearest_coupling,
    analytic_zero_mode,
)

vl = vortex_lattice()
geo = vl.geometry
t = nearest_coupling(vl.model, geo.lattice_constant)
h = coupling_hamiltonian(geo, vl.model)
evals, evecs = spectrum(h)
aE = np.abs(evals)
zero_idx = np.where(aE < 1e-12 * aE.max())[0]
print(f"exact zeros: {len(zero_idx)}  (A={int(np.sum(geo.sublattice==0))}, B={int(np.sum(geo.sublattice==1))})")

center = np.asarray(vl.field.center)
rel = geo.positions - center
rho = np.hypot(rel[:, 0], rel[:, 1])
core_mask = rho <= 2 * vl.field.width

block = evecs[:, zero_idx]
# sublattice content of the zero space
a_mask = geo.sublattice == 0
wA = np.sum(np.abs(block[a_mask]) ** 2, axis=0)
print(f"zero-space per-vector A weight: min={wA.min():.3f} max={wA.max():.3f}")

weight = block[core_mask].conj().T @ block[core_mask]
vals, rot = np.linalg.eigh((weight + weight.conj().T) / 2)
print(f"core weights of rotated combos (top 5): {np.sort(vals)[::-1][:5].round(4)}")
best = block @ rot[:, -1]
print(f"best combo: A weight={np.sum(np.abs(best[a_mask])**2):.4f}")
ana = analytic_zero_mode(vl.pristine, vl.field, vl.model)
print(f"overlap best vs analytic: {abs(np.vdot(ana, best)):.4f}")
# where does the best combo live?
p = np.abs(best) ** 2
print(f"best combo mean radius from center: {np.sum(p * rho):.1f} um; core frac={p[core_mask].sum():.4f}")
# project analytic mode onto the zero space: is the vortex mode IN the zero space at all?
proj = block @ (block.conj().T @ ana)
print(f"analytic-mode weight inside zero space: {np.vdot(proj, proj).real:.4f}")
# and weight onto the 10 smallest NONzero modes
nz = np.argsort(aE)[len(zero_idx):len(zero_idx)+10]
for i in nz[:5]:
    print(f"  nonzero |E|/t={aE[i]/t:.4f} |<ana|mode>|={abs(np.vdot(ana, evecs[:, i])):.4f}")
