import time

import numpy as np

from photonsim.lattice.geometry import SUBLATTICE_B
from photonsim.lattice.hamiltonian import (
    coupling_hamiltonian,
    find_zero_mode,
    spectrum,
    sublattice_ratio,
    vortex_lattice,
)
from photonsim.lattice.excitation import excitation_optimize, field_objective

t0 = time.time()
vl = vortex_lattice(box=340.0)
center = np.asarray(vl.field.center)
h = coupling_hamiltonian(vl.geometry, vl.model)
h0 = coupling_hamiltonian(vl.pristine, vl.model)
dist = np.linalg.norm(vl.pristine.positions - center, axis=1)
is_b = vl.pristine.sublattice == SUBLATTICE_B
b_sites = np.flatnonzero(is_b)
inputs = b_sites[np.argsort(dist[b_sites])[:13]]

evals, evecs = spectrum(h)
zm = find_zero_mode(evals, evecs, vl.pristine, center, 40.0,
                    zero_band=0.2 * vl.field.delta0)


def core_gamma(field, radius=40.0):
    masked = np.where(dist <= radius, field, 0.0)
    return sublattice_ratio(masked, vl.pristine)


for radius in (40.0, 50.0):
    for z in (2.0e4, 4.0e4):
        target = np.flatnonzero(is_b & (dist <= radius))
        res = excitation_optimize(h, inputs, target, z, restarts=12, seed=0)
        res0 = excitation_optimize(h0, inputs, target, z, restarts=12, seed=0)
        fo = field_objective(h, zm.field.astype(complex), target, z)
        print(f"r={radius} z={z:g} targets={len(target)}")
        print(f"  vortex: obj={res.objective:.3f} thr={res.threshold:.3f} "
              f"success={res.success} gamma_all={sublattice_ratio(res.output, vl.pristine):.2f} "
              f"gamma_core={core_gamma(res.output):.2f} zm={fo:.3f}")
        print(f"    starts med={np.median(res.restart_objectives):.2f}")
        print(f"  pristine: obj={res0.objective:.3f} thr={res0.threshold:.3f} "
              f"success={res0.success} gamma_all={sublattice_ratio(res0.output, vl.pristine):.2f} "
              f"gamma_core={core_gamma(res0.output):.2f}")
        print(f"    starts med={np.median(res0.restart_objectives):.2f}")
print(f"elapsed {time.time()-t0:.0f}s")
