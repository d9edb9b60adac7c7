"""
Distances valued in the positive quadrant
=========================================

Two coordinates, compared componentwise.
"""

import numpy as np

from ostrowski import engine
from ostrowski.distances import ambient
from ostrowski.instances import build_pair_instance
from ostrowski.order import orthant
from ostrowski.quadrature import Grid

R2 = orthant(2)
print("sup of (1,0), (0,1):", R2.sup((1.0, 0.0), (0.0, 1.0)))
print("h_M((1,5), (4,2)):", ambient(R2)((1.0, 5.0), (4.0, 2.0)))

inst = build_pair_instance(Grid.uniform(257, breakpoints=[0.5]))
r = engine.verify_sharpness(inst.q, inst.dT, inst.dY, 0.5, 1e-12)
print("bound at 0.5:", r.bound)

# a member whose coordinates are each 1-Lipschitz
f = inst.member(np.random.default_rng(1))
ok, dev = engine.dominated(inst.q, f, inst.dY, 0.5, r.bound, 1e-9)
print("deviation:", dev, "dominated:", ok)
