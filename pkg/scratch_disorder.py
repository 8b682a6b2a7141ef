import time
import numpy as np
from photonsim.lattice import (
    vortex_lattice, apply_disorder, coupling_hamiltonian, spectrum,
    find_zero_mode, sublattice_ratio, ZeroModeNotFound,
)

t0 = time.time()
vl = vortex_lattice(box=340.0)
for r_d in (0.0, 0.2, 0.4, 0.6):
    gammas = []
    misses = 0
    for seed in range(20):
        geo = apply_disorder(vl.geometry, r_d, seed)
        evals, evecs = spectrum(coupling_hamiltonian(geo, vl.model))
        try:
            res = find_zero_mode(evals, evecs, geo, vl.field.center,
                                 core_radius=2 * vl.field.width,
                                 zero_band=0.2 * vl.field.delta0)
            gammas.append(sublattice_ratio(res.field, vl.pristine))
        except ZeroModeNotFound:
            misses += 1
    gam = np.array(gammas)
    print(f"r_d={r_d}: mean={gam.mean():.3g} median={np.median(gam):.3g} "
          f"min={gam.min():.3g} misses={misses}")
print(f"elapsed={time.time()-t0:.0f}s")
