import math
import time

import numpy as np

from photonsim.lattice.geometry import (
    SUBLATTICE_A,
    CouplingModel,
    dirac_point,
    nearest_coupling,
    fermi_velocity,
    ssh_chain,
)
from photonsim.lattice.hamiltonian import (
    coupling_hamiltonian,
    spectrum,
    sublattice_ratio,
    find_zero_mode,
    vortex_lattice,
)
from photonsim.lattice.topology import (
    chern_number,
    graphene_dispersion,
    jackiw_rebbi_mode,
    sphere_cover_hamiltonian,
    ssh_winding,
)
from photonsim.lattice.excitation import excitation_optimize, field_objective

t0 = time.time()

# --- winding ---
print("winding t_R>t_L:", ssh_winding(t_left=0.5, t_right=1.0))
print("winding t_L>t_R:", ssh_winding(t_left=1.0, t_right=0.5))

# --- SSH domain wall, 200 sites ---
model = CouplingModel()
for dim in (0.05, 0.08, 0.1, 0.15):
    chain = ssh_chain(200, 10.0, dim, wall_at=100)
    h = coupling_hamiltonian(chain, model)
    evals, evecs = spectrum(h)
    t_short = model.coupling(10.0 * (1.0 - dim))
    t_long = model.coupling(10.0 * (1.0 + dim))
    gap = abs(t_short - t_long)
    inside = np.abs(evals) < 0.5 * gap
    idx = int(np.argmin(np.abs(evals)))
    mode = evecs[:, idx]
    # analytic profile: mass |t_R - t_L| flipping sign at the wall site,
    # velocity = inter-cell hopping, cell length = 2 sites
    wall_x = chain.positions[100, 0]
    cells = (chain.positions[:, 0] - wall_x) / (2.0 * 10.0)
    support = chain.sublattice == chain.sublattice[100]
    grid = cells[support]
    mass = gap * np.sign(grid + 1e-12)
    # pre-wall intra = short bond -> m = t_R - t_L = t_short - t_long > 0?
    # test both orientations of velocity choice
    for v in (t_long, t_short):
        bound = jackiw_rebbi_mode(-mass, v, grid)
        full = np.zeros(200)
        full[support] = bound.amplitude
        ov = abs(np.vdot(full, mode))
        print(f"dim={dim} gap={gap:.2e} n_midgap={inside.sum()} "
              f"E0={evals[idx]:.2e} v={'long' if v==t_long else 'short'} overlap={ov:.4f}")

# --- Chern on the sphere cover ---
c = chern_number(sphere_cover_hamiltonian, band=0, grid=40,
                 k1_range=(0.0, math.pi), k2_range=(0.0, 2.0 * math.pi))
print("chern lower band:", c)
c_up = chern_number(sphere_cover_hamiltonian, band=1, grid=40,
                    k1_range=(0.0, math.pi), k2_range=(0.0, 2.0 * math.pi))
print("chern upper band:", c_up)

# --- graphene dispersion ---
t = nearest_coupling(model, 10.0)
kp = dirac_point(10.0)
lo, hi = graphene_dispersion(kp, t, 10.0)
print(f"E(K+)={hi:.3e}  (t={t:.5f})")
lo0, hi0 = graphene_dispersion(np.zeros(2), t, 10.0)
print(f"E(0)={hi0:.6f} vs 3t={3*t:.6f}")
vf = fermi_velocity(model, 10.0)
p = 0.04 / 10.0
_, e1 = graphene_dispersion(kp + np.array([p, 0.0]), t, 10.0)
print(f"slope={e1/p:.5f} vs v_F={vf:.5f} rel={(e1/p - vf)/vf:.3%}")

print(f"topo elapsed {time.time()-t0:.0f}s")

# --- excitation optimization ---
t1 = time.time()
vl = vortex_lattice(box=340.0)
center = np.asarray(vl.field.center)
h = coupling_hamiltonian(vl.geometry, vl.model)
dist = np.linalg.norm(vl.pristine.positions - center, axis=1)
inputs = np.argsort(dist)[:13]
target = np.flatnonzero(dist <= 22.0)
print(f"inputs={len(inputs)} target={len(target)} sites={vl.geometry.n_sites}")
z = 2.0e4
res = excitation_optimize(h, inputs, target, z, restarts=12, seed=0)
gam = sublattice_ratio(res.output, vl.pristine)
print(f"vortex: success={res.success} obj={res.objective:.3f} "
      f"threshold={res.threshold:.3f} gamma={gam:.2f}")
print("  restarts:", [f"{v:.2f}" for v in res.restart_objectives])

# exact zero mode as input: objective at optimum
evals, evecs = spectrum(h)
zm = find_zero_mode(evals, evecs, vl.pristine, center, 4 * 10.0,
                    zero_band=0.2 * vl.field.delta0)
fo = field_objective(h, zm.field.astype(complex), target, z)
print(f"zero-mode input objective={fo:.3f} (vs best {res.objective:.3f})")

# no vortex: pristine lattice
h0 = coupling_hamiltonian(vl.pristine, vl.model)
res0 = excitation_optimize(h0, inputs, target, z, restarts=12, seed=0)
gam0 = sublattice_ratio(res0.output, vl.pristine)
print(f"pristine: success={res0.success} obj={res0.objective:.3f} "
      f"threshold={res0.threshold:.3f} gamma={gam0:.2f}")
print("  restarts:", [f"{v:.2f}" for v in res0.restart_objectives])
print(f"excitation elapsed {time.time()-t1:.0f}s")
