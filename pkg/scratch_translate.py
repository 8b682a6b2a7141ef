import time
import numpy as np
from photonsim.lattice import translate_zero_mode
from photonsim.lattice.hamiltonian import AdiabaticError

for substeps in (8, 16):
    for length in (4.0e4, 2.0e4):
        t0 = time.time()
        try:
            res = translate_zero_mode(length=length, substeps=substeps)
            print(f"substeps={substeps} length={length:.0e}: fid={res.fidelity:.4f} "
                  f"step_change={res.step_change:.2e} dt={time.time()-t0:.1f}s")
        except AdiabaticError as exc:
            print(f"substeps={substeps} length={length:.0e}: {exc} dt={time.time()-t0:.1f}s")
