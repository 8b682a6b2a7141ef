import time
import numpy as np
from photonsim.lattice import (
    vortex_lattice, coupling_hamiltonian, spectrum, find_zero_mode,
    sublattice_ratio, analytic_zero_mode, hexagon_contrast, nearest_coupling,
)

for box in (260.0, 340.0, 400.0):
    t0 = time.time()
    vl = vortex_lattice(box=box)
    geo = vl.geometry
    t = nearest_coupling(vl.model, geo.lattice_constant)
    h = coupling_hamiltonian(geo, vl.model)
    evals, evecs = spectrum(h)
    res = find_zero_mode(evals, evecs, geo, vl.field.center,
                         core_radius=2 * vl.field.width,
                         zero_band=0.2 * vl.field.delta0)
    gamma = sublattice_ratio(res.field, vl.pristine)
    ana = analytic_zero_mode(vl.pristine, vl.field, vl.model)
    ana_d = analytic_zero_mode(geo, vl.field, vl.model)
    contrast = hexagon_contrast(res.field, vl.pristine, vl.field.center)
    print(f"box={box:.0f} sites={geo.n_sites} |E0|/gap={abs(res.energy)/res.gap_edge:.5f} "
          f"gap/t={res.gap_edge/t:.3f} n_int={res.n_interior} core={res.core_fraction:.3f} "
          f"gamma={gamma:.1f} ov={abs(np.vdot(ana, res.field)):.4f}/{abs(np.vdot(ana_d, res.field)):.4f} "
          f"contrast={contrast:.2f} dt={time.time()-t0:.1f}s")
