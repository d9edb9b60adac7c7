"""
When agreement fails
====================

Two metrics on R+ for which the agreement inequality breaks.
"""

import math

from ostrowski import distances as D
from ostrowski.order import Sample

# |x - y| measured with the discrete metric on its values
rep = D.check_agreement(D.absolute(), D.discrete_metric(), Sample.of([0.0, 0.5]))
print(rep["agreement"].line())

# the log metric is a metric...
lm = D.log_metric()
print(D.check_metric_axioms(lm, Sample.of(D.log_ladder())).lines())

# ...but not with itself on M
rep = D.check_agreement(lm, lm, Sample.of([1.0, 2.0]))
w = rep["agreement"].witness
print(w, "ln 2 =", math.log(2))
