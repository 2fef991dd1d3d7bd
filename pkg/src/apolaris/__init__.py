"""Exact apolar inner products and Bombieri-type inequality checks."""

from .apolar import (
    apolar_inner,
    apolar_inner_via_diff,
    apolar_norm_sq,
    bombieri_inner,
    bombieri_norm_sq,
)
from .gaussian import GaussianRational
from .homogenize import (
    HomogenizationPattern,
    homogenize_even_two_var,
    homogenize_many_var,
    homogenize_one_var,
    specialize_fresh,
)
from .inequalities import (
    HypothesisError,
    InternalError,
    Theorem,
    Verdict,
    check_bombieri_homogeneous,
    check_constant_one,
    check_disjoint_equality,
    check_even,
    check_mixed_homogeneous,
    check_monotonicity_counterexample,
    check_nonnegative,
    check_power,
    check_theorem_main,
    check_theorem_topband,
    find_equality_parameter,
    power_root_sequence,
)
from .parsing import PolySyntaxError, format_poly, parse
from .poly import (
    ArityError,
    MultiIndex,
    Poly,
    ZeroPolynomialError,
    add,
    apply_diff,
    conjugate,
    evaluate,
    homogeneous_component,
    mul,
    substitute_disjoint_relabel,
    total_degree,
)

__version__ = "0.1.0"
