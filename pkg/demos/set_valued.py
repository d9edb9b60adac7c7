"""
Set-valued maps and the convex hull
===================================

Finite sets under the Hausdorff distance, averaged by Minkowski sums.
"""

import numpy as np

from ostrowski import engine
from ostrowski.instances import build_setvalued_instance, minkowski_riemann_integral
from ostrowski.lipschitz import SampledFunction
from ostrowski.quadrature import Grid
from ostrowski.sets import RealSet, hausdorff

grid = Grid.uniform(65, breakpoints=[0.25])
print(hausdorff(RealSet.points([0, 1]), RealSet.points([0.5])))

# the average of {-|t|, |t|} fills in the gap
F = SampledFunction(lambda t: RealSet.points([-abs(t), abs(t)]), grid.nodes)
print("integral:", minkowski_riemann_integral(F, grid))

# the bound holds against the hull of F(t), not F(t) itself
inst = build_setvalued_instance(grid)
G = inst.member(np.random.default_rng(2))
r = engine.corollary_bound_with_P(inst.q, inst.dT, inst.dX, 0.25, 1e-6, f=G)
print(f"G(0.25) = {G(0.25)}")
print(f"bound {r.bound}, member deviation {r.member_deviation:.4f}, extremal {r.deviation}")
