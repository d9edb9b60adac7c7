"""
Square-root modulus
===================

Replacing |tau - t| by its square root changes the constant.
"""

from ostrowski import engine
from ostrowski.distances import ABS
from ostrowski.instances import build_scalar_instance
from ostrowski.lipschitz import check_modulus_axioms, power_modulus
from ostrowski.order import REALS_PLUS
from ostrowski.quadrature import Grid

w = power_modulus(0.5, ABS, "sqrt")
print(check_modulus_axioms(w, REALS_PLUS.sample(64)).lines())

# sqrt has an infinite slope at t, so the grid has to be fine
for x in (0.0, 0.5, 1.0):
    inst = build_scalar_instance(Grid.uniform(100_001, breakpoints=[x]))
    r = engine.homega_bound(inst.q, inst.dT, w, inst.dY, x, 1e-6)
    exact = ((1 - x) ** 1.5 + (1 + x) ** 1.5) / 3
    print(f"x={x}: bound {r.bound:.9f}, closed form {exact:.9f}")
