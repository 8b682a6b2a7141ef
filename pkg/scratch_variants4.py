import numpy as np
from photonsim.lattice import (
    graphene_rectangle, CouplingModel, VortexField, kekule_displacement,
    coupling_hamiltonian, spectrum, nearest_coupling, contrast_delta0,
)

model = CouplingModel()
a0 = 10.0
geo = graphene_rectangle(260.0, 260.0, lattice_constant=a0)
t = nearest_coupling(model, a0)
d0 = contrast_delta0(model, a0, 2 * a0)
print(f"sites={geo.n_sites} A={int(np.sum(geo.sublattice==0))} B={int(np.sum(geo.sublattice==1))} t={t:.6f} d0/t={d0/t:.4f}")

box = geo.box
cx = 0.5 * (box[0] + box[2]); cy = 0.5 * (box[1] + box[3])
margin = 2 * a0

def edge_frac(vec):
    p = np.abs(vec) ** 2
    x, y = geo.positions[:, 0], geo.positions[:, 1]
    near = (x < box[0] + margin) | (x > box[2] - margin) | (y < box[1] + margin) | (y > box[3] - margin)
    return p[near].sum()

phys_xi = 1.0 / (6.0 * model.decay * t)
print(f"physical xi={phys_xi:.2f}")
# uniform texture: vortex far away so tanh==1, phase fixed
for xi in [0.25 * phys_xi, 0.5 * phys_xi, phys_xi, 2.0 * phys_xi]:
    field = VortexField(delta0=d0, width=2 * a0, center=(1e6, 0.0))
    disp = kekule_displacement(geo, field, xi)
    g2 = geo.with_positions(geo.positions + disp)
    h = coupling_hamiltonian(g2, model)
    evals, evecs = spectrum(h)
    aE = np.abs(evals)
    zeros = int(np.sum(aE < 1e-12))
    ingap = np.where((aE >= 1e-12) & (aE < 0.4 * d0))[0]
    bulkish = [i for i in ingap if edge_frac(evecs[:, i]) < 0.5]
    print(f"xi={xi:7.2f} maxdisp={np.max(np.hypot(disp[:,0],disp[:,1])):.3f} zeros={zeros} "
          f"nonzero|E|<0.4d0: total={len(ingap)} bulk-like={len(bulkish)} "
          f"first nonzero |E|/t={np.sort(aE[aE>1e-12])[0]/t:.4f}")
