"""Exact verdicts for Bombieri-type inequalities on apolar norms.

Every checker compares squared norms with exact rationals, so a verdict is
a proof for that instance rather than a numerical observation.  Checkers
validate their hypotheses and raise :class:`HypothesisError` when the
inputs fall outside them.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .apolar import apolar_norm_sq
from .gaussian import GaussianRational
from .homogenize import homogenize_one_var
from .poly import Poly, ZeroPolynomialError, product


class HypothesisError(ValueError):
    """The inputs do not satisfy the hypotheses of the requested check."""


class InternalError(AssertionError):
    """A proven inequality failed: the arithmetic itself is broken."""


class Theorem(str, enum.Enum):
    CONSTANT_ONE = "constant-one"
    BOMBIERI = "bombieri"
    MIXED = "mixed"
    MAIN = "main"
    TOPBAND = "topband"
    NONNEG = "nonneg"
    EVEN = "even"
    DISJOINT = "disjoint"
    MONOTONICITY = "monotonicity"
    POWER = "power"
    SEARCH = "search"


Rational = Union[int, Fraction]

_RELATIONS = {
    ">=": lambda a, b: a >= b,
    "==": lambda a, b: a == b,
    "<": lambda a, b: a < b,
}


@dataclass(frozen=True)
class Verdict:
    """Outcome of comparing ``constant * lhs_sq`` with ``rhs_sq``.

    ``relation`` is ``">="`` for the inequalities, ``"=="`` for equality
    statements and ``"<"`` for counterexamples.
    """

    theorem: Theorem
    constant: Rational
    lhs_sq: Fraction
    rhs_sq: Fraction
    holds: bool
    relation: str = ">="
    witness: Tuple[Poly, ...] = ()
    details: Dict[str, object] = field(default_factory=dict)

    @property
    def ratio(self) -> Optional[Fraction]:
        if self.rhs_sq == 0:
            return None
        return Fraction(self.constant) * self.lhs_sq / self.rhs_sq

    def to_dict(self) -> dict:
        out = {
            "theorem": self.theorem.value,
            "constant": str(self.constant),
            "lhs_sq": str(self.lhs_sq),
            "rhs_sq": str(self.rhs_sq),
            "holds": self.holds,
            "ratio": None if self.ratio is None else str(self.ratio),
            "relation": self.relation,
        }
        if self.witness:
            out["witness"] = [str(p) for p in self.witness]
        if self.details:
            out["details"] = {k: _jsonable(v) for k, v in self.details.items()}
        return out


def _jsonable(v):
    if isinstance(v, (bool, int, float, str)) or v is None:
        return v
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return str(v)


def _verdict(theorem: Theorem, constant: Rational, lhs: Fraction, rhs: Fraction,
             relation: str = ">=", **kw) -> Verdict:
    holds = _RELATIONS[relation](constant * lhs, rhs)
    return Verdict(theorem, constant, Fraction(lhs), Fraction(rhs), holds, relation, **kw)


def _nonzero(polys: Sequence[Poly]) -> None:
    if not polys:
        raise HypothesisError("at least one polynomial is required")
    arity = polys[0].arity
    for p in polys:
        if p.is_zero():
            raise HypothesisError("polynomials must be nonzero")
        if p.arity != arity:
            raise HypothesisError("polynomials must share one arity")


def _product_norms(polys: Sequence[Poly]) -> Fraction:
    out = Fraction(1)
    for p in polys:
        out *= apolar_norm_sq(p)
    return out


# homogeneous and mixed cases ---------------------------------------------------


def check_constant_one(ps: Sequence[Poly]) -> Verdict:
    """||P_1 ... P_s||^2 >= prod ||P_i||^2 with no hypothesis; may fail."""
    ps = list(ps)
    _nonzero(ps)
    return _verdict(Theorem.CONSTANT_ONE, 1, apolar_norm_sq(product(ps)), _product_norms(ps),
                    witness=tuple(ps))


def check_bombieri_homogeneous(fs: Sequence[Poly]) -> Verdict:
    """||f_1 ... f_n||^2 >= prod ||f_i||^2 for homogeneous f_i."""
    fs = list(fs)
    _nonzero(fs)
    if not all(f.is_homogeneous() for f in fs):
        raise HypothesisError("every factor must be homogeneous")
    v = _verdict(Theorem.BOMBIERI, 1, apolar_norm_sq(product(fs)), _product_norms(fs),
                 witness=tuple(fs))
    if not v.holds:
        raise InternalError(f"homogeneous Bombieri inequality failed: {v.to_dict()}")
    return v


def check_mixed_homogeneous(p: Poly, f: Poly) -> Verdict:
    """||P f||^2 >= ||P||^2 ||f||^2 when f alone is homogeneous."""
    _nonzero([p, f])
    if not f.is_homogeneous():
        raise HypothesisError("the second factor must be homogeneous")
    return _verdict(Theorem.MIXED, 1, apolar_norm_sq(p * f), _product_norms([p, f]),
                    witness=(p, f))


# homogenization theorems -------------------------------------------------------


def check_theorem_main(ps: Sequence[Poly]) -> Verdict:
    """(n_1 + ... + n_s)! ||P_1 ... P_s||^2 >= prod ||P_i||^2."""
    ps = list(ps)
    _nonzero(ps)
    n = sum(p.total_degree() for p in ps)
    return _verdict(Theorem.MAIN, math.factorial(n), apolar_norm_sq(product(ps)),
                    _product_norms(ps), witness=tuple(ps))


def theorem_main_chain(ps: Sequence[Poly]) -> Dict[str, Fraction]:
    """Every link of the homogenization argument behind :func:`check_theorem_main`.

    The returned values are non-increasing in insertion order, and the
    second and third are equal because homogenization commutes with
    products.
    """
    ps = list(ps)
    _nonzero(ps)
    n = sum(p.total_degree() for p in ps)
    prod = product(ps)
    homs = [homogenize_one_var(p) for p in ps]
    prod_hom = homogenize_one_var(prod)
    hom_prod = product(homs)
    if prod_hom != hom_prod:
        raise InternalError("one-variable homogenization did not commute with the product")
    return {
        "scaled_product": math.factorial(n) * apolar_norm_sq(prod),
        "homogenized_product": apolar_norm_sq(prod_hom),
        "product_of_homogenized": apolar_norm_sq(hom_prod),
        "homogenized_norms": _product_norms(homs),
        "norms": _product_norms(ps),
    }


def minimal_band(p: Poly) -> int:
    """Smallest j with P = P_m + ... + P_{m-j}."""
    degs = p.degrees_present()
    return degs[-1] - degs[0]


def check_theorem_topband(p: Poly, q: Poly, j: Optional[int] = None,
                          i: Optional[int] = None) -> Verdict:
    """(j + i)! ||P Q||^2 >= ||P||^2 ||Q||^2 when P, Q live in their top j, i degrees.

    Omitted bands default to the minimal valid ones.
    """
    _nonzero([p, q])
    jp, iq = minimal_band(p), minimal_band(q)
    j = jp if j is None else j
    i = iq if i is None else i
    m, n = p.total_degree(), q.total_degree()
    if not 0 <= j <= m or not 0 <= i <= n:
        raise HypothesisError(f"bands must satisfy 0 <= j <= {m} and 0 <= i <= {n}")
    if jp > j:
        raise HypothesisError(f"P has a component of degree {m - jp} below its band m-j = {m - j}")
    if iq > i:
        raise HypothesisError(f"Q has a component of degree {n - iq} below its band n-i = {n - i}")
    return _verdict(Theorem.TOPBAND, math.factorial(j + i), apolar_norm_sq(p * q),
                    _product_norms([p, q]), witness=(p, q),
                    details={"j": j, "i": i, "minimal_j": jp, "minimal_i": iq})


def check_nonnegative(p: Poly, q: Poly) -> Verdict:
    """||P Q||^2 >= ||P||^2 ||Q||^2 for real non-negative coefficients."""
    _nonzero([p, q])
    if not (p.is_real_nonnegative() and q.is_real_nonnegative()):
        raise HypothesisError("all coefficients must be real and non-negative")
    return _verdict(Theorem.NONNEG, 1, apolar_norm_sq(p * q), _product_norms([p, q]),
                    witness=(p, q))


def check_even(p: Poly, q: Poly) -> Verdict:
    """Squared form: (((m+n)/2)!)^2 ||P Q||^2 >= ||P||^2 ||Q||^2 for even exponents."""
    _nonzero([p, q])
    if not (p.has_only_even_exponents() and q.has_only_even_exponents()):
        raise HypothesisError("every exponent must be even")
    m, n = p.total_degree(), q.total_degree()
    if m == 0 or n == 0:
        raise HypothesisError("degrees must be positive even integers")
    c = math.factorial((m + n) // 2) ** 2
    return _verdict(Theorem.EVEN, c, apolar_norm_sq(p * q), _product_norms([p, q]),
                    witness=(p, q))


def check_disjoint_equality(p: Poly, q: Poly) -> Verdict:
    """||P Q||^2 == ||P||^2 ||Q||^2 when P and Q use disjoint variables."""
    _nonzero([p, q])
    shared = p.support_variables() & q.support_variables()
    if shared:
        raise HypothesisError(f"variables {sorted(shared)} occur in both polynomials")
    return _verdict(Theorem.DISJOINT, 1, apolar_norm_sq(p * q), _product_norms([p, q]),
                    relation="==", witness=(p, q))


# the one-variable examples --------------------------------------------------------


def _linear(a: Rational, b: Rational) -> Poly:
    """a + b*x in one variable."""
    terms = {(0,): GaussianRational(a), (1,): GaussianRational(b)}
    return Poly._make({k: c for k, c in terms.items() if c}, 1)


def equality_example_values(t: Rational) -> Tuple[Fraction, Fraction]:
    """(f(t), g(t)) = (||(x-1)(x+t)||^2, ||x-1||^2 ||x+t||^2)."""
    a, b = _linear(-1, 1), _linear(t, 1)
    return apolar_norm_sq(a * b), apolar_norm_sq(a) * apolar_norm_sq(b)


def _rational_sqrt(r: Fraction) -> Optional[Fraction]:
    if r < 0:
        return None
    n, d = math.isqrt(r.numerator), math.isqrt(r.denominator)
    if n * n == r.numerator and d * d == r.denominator:
        return Fraction(n, d)
    return None


def find_equality_parameter() -> Fraction:
    """The c in (0, 1) with ||(x-1)(x+c)||^2 == ||x-1||^2 ||x+c||^2.

    For real t both sides are quadratics in t; they are recovered exactly
    by interpolation at t = 0, 1, 2 and their difference is solved in Q.
    """
    f0, g0 = equality_example_values(0)
    f1, g1 = equality_example_values(1)
    if (f0, f1, g0, g1) != (3, 3, 2, 4):
        raise InternalError(f"boundary values f(0), f(1), g(0), g(1) = {f0}, {f1}, {g0}, {g1}")
    f2, g2 = equality_example_values(2)
    h0, h1, h2 = f0 - g0, f1 - g1, f2 - g2
    # h(t) = a t^2 + b t + c through three points
    a = (h2 - 2 * h1 + h0) / 2
    b = h1 - h0 - a
    c = h0
    if a == 0:
        if b == 0:
            raise InternalError("f - g vanishes identically")
        roots = [-c / b]
    else:
        disc = _rational_sqrt(b * b - 4 * a * c)
        if disc is None:
            raise InternalError("the crossing point is irrational")
        roots = [(-b - disc) / (2 * a), (-b + disc) / (2 * a)]
    inside = sorted(r for r in roots if 0 < r < 1)
    if not inside:
        raise InternalError(f"no crossing in (0, 1); roots {roots}")
    root = inside[0]
    f, g = equality_example_values(root)
    if f != g:
        raise InternalError(f"f(c) != g(c) at c = {root}")
    return root


def check_monotonicity_counterexample(t: Rational) -> Verdict:
    """Compare ||(1 + t x)(1 - t x)||^2 with ||1 * (1 - t x)||^2.

    ``holds`` means the counterexample is confirmed: t lies in (0, 1/2) and
    adding the degree-one term t x to P = 1 strictly lowered the norm.
    """
    t = Fraction(t)
    p = Poly.constant(1, 1)
    p1 = Poly({(1,): t}, 1)
    q = _linear(1, -t)
    lhs = apolar_norm_sq((p1 + p) * q)
    rhs = apolar_norm_sq(p * q)
    in_range = 0 < t < Fraction(1, 2)
    return Verdict(Theorem.MONOTONICITY, 1, lhs, rhs, in_range and lhs < rhs, "<",
                   witness=(p1 + p, q),
                   details={"t": t, "t_in_range": in_range, "strict_decrease": lhs < rhs})


# powers -----------------------------------------------------------------------------


def check_power(p: Poly, s: int) -> Verdict:
    """||P^s||^2 >= (||P||^2)^s."""
    _nonzero([p])
    if s < 1:
        raise HypothesisError("the exponent s must be a positive integer")
    return _verdict(Theorem.POWER, 1, apolar_norm_sq(p ** s), apolar_norm_sq(p) ** s,
                    witness=(p,), details={"s": s})


@dataclass(frozen=True)
class PowerGrowth:
    norms_sq: Tuple[Fraction, ...]
    roots: Tuple[float, ...]
    growth_factor: float
    grew: bool

    def to_dict(self) -> dict:
        return {
            "norms_sq": [str(v) for v in self.norms_sq],
            "roots": list(self.roots),
            "growth_factor": self.growth_factor,
            "grew": self.grew,
        }


DEFAULT_TERM_CAP = 200_000


def _root(value: Fraction, k: int) -> float:
    """value ** (1/k) for a positive rational of any size."""
    return math.exp((math.log(value.numerator) - math.log(value.denominator)) / k)


def power_root_sequence(p: Poly, s_max: int, growth_factor: float = 1.0,
                        term_cap: int = DEFAULT_TERM_CAP) -> PowerGrowth:
    """(||P^s||^2)^(1/(2s)) for s = 1..s_max, from exact norms.

    ``grew`` reports whether the last value exceeds the first by more than
    ``growth_factor``.
    """
    _nonzero([p])
    k = p.total_degree()
    if k < 1:
        raise HypothesisError("P must be non-constant")
    if s_max < 1:
        raise HypothesisError("s_max must be a positive integer")
    # monomials of degree <= s_max*k in d variables bound the size of P^s
    if math.comb(s_max * k + p.arity, p.arity) > term_cap:
        raise HypothesisError(f"P^{s_max} may exceed the cap of {term_cap} terms")
    norms: List[Fraction] = []
    power = p
    for s in range(1, s_max + 1):
        if s > 1:
            power = power * p
        norms.append(apolar_norm_sq(power))
    roots = tuple(_root(v, 2 * s) for s, v in enumerate(norms, start=1))
    return PowerGrowth(tuple(norms), roots, growth_factor, roots[-1] > growth_factor * roots[0])


def normalize_unit(p: Poly) -> Poly:
    """Multiply by the unit in {1, i, -1, -i} that puts the leading
    coefficient in the half-open quadrant re > 0, im >= 0."""
    if p.is_zero():
        return p
    c = p.sorted_terms()[0][1]
    for u in (GaussianRational(1), GaussianRational(0, 1), GaussianRational(-1), GaussianRational(0, -1)):
        v = c * u
        if v.re > 0 and v.im >= 0:
            return p.scale(u)
    raise InternalError("no unit normalizes the leading coefficient")


__all__ = [
    "HypothesisError",
    "InternalError",
    "PowerGrowth",
    "Theorem",
    "Verdict",
    "check_bombieri_homogeneous",
    "check_constant_one",
    "check_disjoint_equality",
    "check_even",
    "check_mixed_homogeneous",
    "check_monotonicity_counterexample",
    "check_nonnegative",
    "check_power",
    "check_theorem_main",
    "check_theorem_topband",
    "equality_example_values",
    "find_equality_parameter",
    "minimal_band",
    "normalize_unit",
    "power_root_sequence",
    "theorem_main_chain",
    "ZeroPolynomialError",
]
