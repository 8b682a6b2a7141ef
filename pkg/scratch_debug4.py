import numpy as np
from photonsim.lattice import (
    vortex_lattice, coupling_hamiltonian, spectrum, nearest_coupling,
    analytic_zero_mode, displacement_scale,
)

base = vortex_lattice()   # defaults: tuned xi
t = nearest_coupling(base.model, 10.0)
phys_xi = 1.0 / (6.0 * base.model.decay * t)
print(f"tuned xi={base.xi_eff:.1f} physical xi={phys_xi:.1f}")

for mult, xi in [("0.125x", 0.125 * phys_xi), ("0.25x", 0.25 * phys_xi),
                 ("0.5x", 0.5 * phys_xi), ("1.0x", phys_xi), ("tuned", base.xi_eff)]:
    vl = vortex_lattice(xi_eff=xi)
    geo = vl.geometry
    h = coupling_hamiltonian(geo, vl.model)
    evals, evecs = spectrum(h)
    aE = np.abs(evals)
    nzero = int(np.sum(aE < 1e-11 * aE.max()))
    ana = analytic_zero_mode(vl.pristine, vl.field, vl.model)
    # weight of analytic mode on each eigenvector; find where it lands
    ov = np.abs(evecs.conj().T @ ana) ** 2
    top = np.argsort(ov)[::-1][:4]
    desc = ", ".join(f"|E|/t={aE[i]/t:.4f} w={ov[i]:.3f}" for i in top)
    within_zero = ov[aE < 1e-11 * aE.max()].sum()
    print(f"{mult:7s} xi={xi:6.1f}: zeros={nzero} ana-in-zero-space={within_zero:.3f} top: {desc}")
