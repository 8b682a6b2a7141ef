import numpy as np
from scipy.spatial import cKDTree
from photonsim.lattice import (
    graphene_rectangle, CouplingModel, VortexField, kekule_displacement,
    nearest_coupling, dirac_point,
)

model = CouplingModel()
a0 = 10.0
geo = graphene_rectangle(240.0, 240.0, lattice_constant=a0)
t = nearest_coupling(model, a0)
kplus = dirac_point(a0)
gvec = 2.0 * kplus
pos0 = geo.positions
sub = geo.sublattice
tree = cKDTree(pos0)
pairs = tree.query_pairs(1.05 * a0, output_type="ndarray")

xi = 8.0   # deep linear regime
field = VortexField(delta0=0.4816 * t, width=2 * a0, center=(1e6, 0.0))
disp = kekule_displacement(geo, field, xi)
pos1 = pos0 + disp

rows = []   # (r_A, s_j, delta_t)
for i, j in pairs:
    a, b = (i, j) if sub[i] == 0 else (j, i)
    d1 = np.linalg.norm(pos1[b] - pos1[a])
    rows.append((pos0[a], pos0[b] - pos0[a], model.coupling(d1) - t))
print(f"bonds={len(rows)} max |dt|/t={max(abs(r[2]) for r in rows)/t:.4f}")

# least-squares decomposition over harmonics e^{i p K.s} e^{i q G.r}, p,q in {-1,0,1}
channels = [(p, q) for p in (-1, 0, 1) for q in (-1, 0, 1)]
A = np.zeros((len(rows), len(channels)), complex)
y = np.zeros(len(rows))
for n, (ra, s, dt) in enumerate(rows):
    y[n] = dt
    for c, (p, q) in enumerate(channels):
        A[n, c] = np.exp(1j * p * (kplus @ s)) * np.exp(1j * q * (gvec @ ra))
coef, *_ = np.linalg.lstsq(A, y.astype(complex), rcond=None)
resid = np.linalg.norm(A @ coef - y) / np.linalg.norm(y)
pred = 3.0 * model.decay * t * xi * field.delta0   # expected Kekule mass for this xi
print(f"relative residual={resid:.3e}   predicted m={pred/t:.5f} t  (per-channel amp m/3={pred/(3*t):.5f} t)")
for c, (p, q) in enumerate(channels):
    mag = abs(coef[c])
    if mag > 1e-6 * t:
        print(f"  (p={p:+d} K.s, q={q:+d} G.r): |amp|/t={mag/t:.5f}  arg={np.angle(coef[c]):+.3f}")
