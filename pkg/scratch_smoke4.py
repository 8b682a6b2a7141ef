import time
import numpy as np
from photonsim.lattice import (
    vortex_lattice, coupling_hamiltonian, spectrum, find_zero_mode,
)

for box in (420.0, 440.0, 480.0):
    t0 = time.time()
    vl = vortex_lattice(box=box)
    geo = vl.geometry
    h = coupling_hamiltonian(geo, vl.model)
    evals, evecs = spectrum(h)
    res = find_zero_mode(evals, evecs, geo, vl.field.center,
                         core_radius=2 * vl.field.width,
                         zero_band=0.2 * vl.field.delta0)
    print(f"box={box:.0f} sites={geo.n_sites} |E0|/gap={abs(res.energy)/res.gap_edge:.5f} "
          f"n_int={res.n_interior} dt={time.time()-t0:.1f}s")
