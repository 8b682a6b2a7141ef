import math
import time

import numpy as np

from photonsim.experiments import (
    circle_dance_formula,
    circle_dance_gram,
    circle_dance_probability_from_gram,
    circle_dance_subset_probability_from_gram,
)
from photonsim.sources import SourceModel, model_visibilities, simulate_counts

# canonical circle-dance gram: engine vs formula
for theta in (0.0, 0.7, math.pi):
    g = circle_dance_gram(0.4, 0.45, 0.5, 0.35, theta)
    p_eng = circle_dance_probability_from_gram(g, math.pi / 2)
    p_form = circle_dance_formula(0.4, 0.45, 0.5, 0.35, math.pi / 2, theta)
    print(f"canonical theta={theta:.2f}: engine {p_eng:.12f} formula {p_form:.12f} diff {abs(p_eng-p_form):.2e}")

# subsets theta-independence on the canonical gram
import itertools
worst = 0.0
for size in (1, 2, 3):
    for photons in itertools.combinations(range(4), size):
        for pattern in itertools.product(range(size + 1), repeat=4):
            if sum(pattern) != size:
                continue
            vals = []
            for theta in np.linspace(0, 2 * math.pi, 7):
                g = circle_dance_gram(0.5, 0.5, 0.5, 0.5, theta)
                vals.append(
                    circle_dance_subset_probability_from_gram(g, photons, pattern, math.pi / 2)
                )
            worst = max(worst, max(vals) - min(vals))
print("subset worst theta spread:", worst)

# ideal-limit convergence
ideal = SourceModel(squeezing=1e-4, purity=1.0, idler_noise=0.0, signal_noise=0.0)
for name, expect in [
    ("twofold_identical", 0.5),
    ("twofold_mercedes", 0.125),
    ("suppressed_210", 1.0),
    ("triad_dip", 0.625),
]:
    t0 = time.time()
    res = simulate_counts(ideal, name)
    print(f"ideal {name}: V = {res.visibility:.8f} (expect {expect})  [{time.time()-t0:.1f}s]")

# full model
model = SourceModel()
t0 = time.time()
for name, target in [
    ("twofold_identical", 0.36),
    ("twofold_mercedes", 0.10),
    ("suppressed_210", 0.57),
    ("triad_dip", 0.43),
]:
    t1 = time.time()
    res = simulate_counts(model, name)
    print(f"model {name}: V = {res.visibility:.4f} (target {target})  dip={res.dip_rate:.3e} base={res.baseline_rate:.3e}  [{time.time()-t1:.1f}s]")
print("total:", time.time() - t0, "s")
