import time
from photonsim.lattice import translate_zero_mode
from photonsim.lattice.hamiltonian import AdiabaticError

for length in (4.0e4, 2.0e4, 4.0e3, 2.0e3, 1.0e3, 5.0e2):
    t0 = time.time()
    try:
        res = translate_zero_mode(length=length)
        print(f"length={length:8.0f}: fid={res.fidelity:.4f} "
              f"step_change={res.step_change:.2e} dt={time.time()-t0:.1f}s")
    except AdiabaticError as exc:
        print(f"length={length:8.0f}: AdiabaticError {exc} dt={time.time()-t0:.1f}s")
