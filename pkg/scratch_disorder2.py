import time

import numpy as np

from photonsim.lattice.hamiltonian import disorder_sweep, vortex_lattice

t0 = time.time()
vl = vortex_lattice(box=340.0)
for length in (2.0e4, 5.0e4):
    gammas = disorder_sweep(vl, seeds=20, length=length)
    print(f"length={length:g}")
    for shift, row in zip((0.0, 0.2, 0.4, 0.6), gammas):
        print(f"  r_d={shift}: mean={row.mean():.3f} median={np.median(row):.3f} "
              f"min={row.min():.3f} max={row.max():.3f}")
    print(f"  elapsed={time.time() - t0:.0f}s")
