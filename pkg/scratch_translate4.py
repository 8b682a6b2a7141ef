import time
from photonsim.lattice import translate_zero_mode
from photonsim.lattice.hamiltonian import AdiabaticError

for length, sub in ((8.0e3, 6), (4.0e3, 6), (2.0e3, 6), (1.0e3, 6), (6.25e2, 6)):
    t0 = time.time()
    try:
        res = translate_zero_mode(length=length, substeps=sub)
        print(f"length={length:8.0f} sub={sub}: fid={res.fidelity:.4f} "
              f"step_change={res.step_change:.2e} dt={time.time()-t0:.1f}s")
    except AdiabaticError as exc:
        print(f"length={length:8.0f} sub={sub}: AdiabaticError {exc} dt={time.time()-t0:.1f}s")
