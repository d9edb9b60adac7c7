"""Sharp deviation bounds for Lipschitz maps between abstract distance spaces.

Distances take values in a partially ordered monoid M. Given operators
``Lambda`` on X-valued functions and a monotone ``lam`` on M-valued ones that
agree, the deviation h_Y(Lambda f, Lambda f(t)) is bounded by
lam(h_T(., t)), and the bound is attained by phi_x(h_T(., t)).
"""
from .distances import (
    ABS,
    DistanceSpace,
    EFunction,
    Tier,
    TierViolation,
    check_agreement,
    check_distance_axioms,
    check_e_axioms,
    check_metric_axioms,
    construct_metric_from_e,
)
from .engine import (
    BoundReport,
    OperatorQuadruple,
    PConditionViolation,
    SharpnessFailure,
    check_diagram,
    check_monotone,
    check_operator_agreement,
    corollary_bound_with_P,
    deviation,
    extremal_function,
    homega_bound,
    ostrowski_bound,
    verify_sharpness,
)
from .instances import (
    Instance,
    build_pair_instance,
    build_scalar_instance,
    build_setvalued_instance,
    build_vector_instance,
    minkowski_riemann_integral,
)
from .lipschitz import (
    ModulusOfContinuity,
    SampledFunction,
    check_class_membership,
    check_modulus_axioms,
    compose,
    distance_section,
    transform_distance,
)
from .order import (
    REALS_PLUS,
    AxiomReport,
    NoSupremum,
    OrderedMonoid,
    Sample,
    check_monoid_axioms,
    check_poset_axioms,
    orthant,
    sup,
)
from .quadrature import Grid, trapezoid_integral
from .sets import RealSet, hausdorff

__version__ = "0.1.0"
