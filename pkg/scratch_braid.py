import time
import numpy as np
from photonsim.lattice import braid, braid_preset
from photonsim.lattice.hamiltonian import AdiabaticError, BraidError

base, field, model = braid_preset()
print(f"sites={base.n_sites}")
for swap in (True, False):
    t0 = time.time()
    try:
        res = braid(base, field, model, swap=swap)
        print(f"swap={swap}: phase_left={res.phase_left:+.4f} phase_right={res.phase_right:+.4f} "
              f"fidelity={res.fidelity:.4f} splitting={res.splitting:.2e} "
              f"step_change={res.step_change:.2e} dt={time.time()-t0:.1f}s")
    except (AdiabaticError, BraidError) as exc:
        print(f"swap={swap}: {type(exc).__name__}: {exc} dt={time.time()-t0:.1f}s")
