import time
from photonsim.lattice import braid, braid_preset

base, field, model = braid_preset()
t0 = time.time()
res = braid(base, field, model, length=1.2e5, keyframes=37, exchanges=2)
print(f"double swap: phase_left={res.phase_left:+.4f} phase_right={res.phase_right:+.4f} "
      f"fidelity={res.fidelity:.4f} step_change={res.step_change:.2e} dt={time.time()-t0:.1f}s")
