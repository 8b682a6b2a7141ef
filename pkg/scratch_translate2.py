import time
import numpy as np
from photonsim.lattice import translate_zero_mode, CouplingModel, nearest_coupling
from photonsim.lattice.hamiltonian import AdiabaticError

t = nearest_coupling(CouplingModel(), 10.0)
for length in (4.0e4, 2.0e4, 1.0e4, 0.5e4):
    t0 = time.time()
    try:
        res = translate_zero_mode(length=length, substeps=16, delta0=1.5 * t)
        print(f"length={length:.0e}: fid={res.fidelity:.4f} "
              f"step_change={res.step_change:.2e} dt={time.time()-t0:.1f}s")
    except AdiabaticError as exc:
        print(f"length={length:.0e}: AdiabaticError {exc} dt={time.time()-t0:.1f}s")
