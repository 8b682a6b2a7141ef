import time

import numpy as np

from photonsim.lattice.geometry import apply_disorder
from photonsim.lattice.hamiltonian import (
    analytic_zero_mode,
    coupling_hamiltonian,
    coupling_matrix_sparse,
    find_zero_mode,
    spectrum,
    vortex_lattice,
)
from photonsim.lattice.geometry import SUBLATTICE_A, SUBLATTICE_B
from scipy.sparse.linalg import expm_multiply

t0 = time.time()
vl = vortex_lattice(box=340.0)
center = np.asarray(vl.field.center)

# launches: analytic profile vs clean numerical mode
analytic = analytic_zero_mode(vl.pristine, vl.field, vl.model).astype(complex)
h0 = coupling_hamiltonian(vl.geometry, vl.model)
evals, evecs = spectrum(h0)
zm = find_zero_mode(evals, evecs, vl.pristine, center, 4 * 10.0,
                    zero_band=0.2 * vl.field.delta0)
numeric = zm.field.astype(complex)
print(f"setup {time.time() - t0:.0f}s  overlap={abs(np.vdot(analytic, numeric)):.4f}")

near = np.linalg.norm(vl.pristine.positions - center, axis=1) <= 60.0
on_a = near & (vl.pristine.sublattice == SUBLATTICE_A)
on_b = near & (vl.pristine.sublattice == SUBLATTICE_B)

for name, launch in (("analytic", analytic), ("numeric", numeric)):
    for length in (2.0e4,):
        rows = []
        for shift in (0.0, 0.2, 0.4, 0.6):
            vals = []
            for seed in range(20):
                frame = apply_disorder(vl.geometry, shift, seed)
                h = coupling_matrix_sparse(frame, vl.model)
                final = expm_multiply(-1j * length * h, launch)
                inten = np.abs(final) ** 2
                vals.append(inten[on_b].sum() / inten[on_a].sum())
            vals = np.array(vals)
            rows.append((shift, vals.mean(), np.median(vals), vals.min(), vals.max()))
        print(f"{name} z={length:g}")
        for shift, mean, med, lo, hi in rows:
            print(f"  r_d={shift}: mean={mean:.3f} median={med:.3f} min={lo:.3f} max={hi:.3f}")
        print(f"  elapsed={time.time() - t0:.0f}s")
