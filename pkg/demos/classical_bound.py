"""
The classical constant on [-1, 1]
=================================

Mean value of a 1-Lipschitz function against its value at t.
"""

import numpy as np

from ostrowski import engine
from ostrowski.instances import build_scalar_instance
from ostrowski.quadrature import Grid

# put every sweep point on the grid so |tau - t| integrates exactly
ts = np.round(np.linspace(-1, 1, 9), 10)
inst = build_scalar_instance(Grid.uniform(257, breakpoints=ts))

# the bound is lam(|. - t|), i.e. the mean of |tau - t|
for t in ts:
    r = engine.verify_sharpness(inst.q, inst.dT, inst.dY, t, 1e-12)
    print(f"t={t:+.2f}  bound={r.bound:.6f}  (1+t^2)/2={(1 + t * t) / 2:.6f}  extremal={r.deviation:.6f}")

# random members stay below it
rng = np.random.default_rng(0)
f = inst.member(rng)
print("random member at t=0.5:", engine.deviation(inst.q, f, inst.dY, 0.5), "<=", (1 + 0.25) / 2)
