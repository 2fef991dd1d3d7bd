"""Homogenization of non-homogeneous polynomials with fresh variables.

For P = P_k + ... + P_0 (P_j homogeneous of degree j) the level of P_j is
k - j.  Every construction multiplies the level-l component by a monomial
of degree l in fresh variables, so the result is homogeneous of degree k:

* one variable:        w^l
* even, two variables: (w1*w2)^(l/2)      (inputs with even exponents only)
* many variables:      w_{s_1} * ... * w_{s_l} for a pattern s_1..s_k

Fresh variables are appended after the existing ones (indices d+1, d+2, ...)
and print as w1, w2, ...
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Sequence, Tuple, Union

from .gaussian import GaussianRational
from .poly import Poly, ZeroPolynomialError

ONE_VARIABLE = "one-variable"
EVEN_TWO_VARIABLE = "even-two-variable"
MANY_VARIABLE = "many-variable"


@dataclass(frozen=True)
class HomogenizationPattern:
    """Which fresh variable is introduced at each level 1..k.

    ``assignment[l - 1]`` is the 1-based fresh variable multiplied in when
    going from level l-1 to level l.  Repetitions are allowed.
    """

    kind: str
    assignment: Tuple[int, ...]

    def __post_init__(self):
        if self.kind not in (ONE_VARIABLE, EVEN_TWO_VARIABLE, MANY_VARIABLE):
            raise ValueError(f"unknown homogenization kind {self.kind!r}")
        if any(v < 1 for v in self.assignment):
            raise ValueError("fresh variable indices start at 1")

    @classmethod
    def one_variable(cls, k: int) -> "HomogenizationPattern":
        return cls(ONE_VARIABLE, (1,) * k)

    @classmethod
    def even_two_variable(cls, k: int) -> "HomogenizationPattern":
        return cls(EVEN_TWO_VARIABLE, tuple(1 + (l % 2) for l in range(k)))

    @classmethod
    def many_variable(cls, assignment: Sequence[int]) -> "HomogenizationPattern":
        return cls(MANY_VARIABLE, tuple(int(v) for v in assignment))

    @property
    def fresh_count(self) -> int:
        if self.kind == ONE_VARIABLE:
            return 1
        if self.kind == EVEN_TWO_VARIABLE:
            return 2
        return max(self.assignment, default=0)

    def __len__(self) -> int:
        return len(self.assignment)


def _level_exponents(pattern: Sequence[int], nfresh: int):
    """Fresh-variable exponent vector for each level 0..len(pattern)."""
    levels = [(0,) * nfresh]
    cur = [0] * nfresh
    for v in pattern:
        cur[v - 1] += 1
        levels.append(tuple(cur))
    return levels


def _apply(p: Poly, pattern: HomogenizationPattern) -> Poly:
    k = p.total_degree()
    if len(pattern) != k:
        raise ValueError(f"pattern has length {len(pattern)}, polynomial degree is {k}")
    nfresh = pattern.fresh_count
    levels = _level_exponents(pattern.assignment, nfresh)
    out: Dict[tuple, GaussianRational] = {}
    for alpha, c in p.items():
        out[alpha + levels[k - sum(alpha)]] = c
    return Poly._make(out, p.arity + nfresh, p.fresh + nfresh)


def _require_nonzero(p: Poly) -> None:
    if p.is_zero():
        raise ZeroPolynomialError("cannot homogenize the zero polynomial")


def homogenize_one_var(p: Poly) -> Poly:
    """P_k + w P_{k-1} + ... + w^k P_0, in arity d+1."""
    _require_nonzero(p)
    return _apply(p, HomogenizationPattern.one_variable(p.total_degree()))


def homogenize_even_two_var(p: Poly) -> Poly:
    """P_m + ... + (w1 w2)^{(m-2)/2} P_2 + (w1 w2)^{m/2} P_0, in arity d+2."""
    _require_nonzero(p)
    if not p.has_only_even_exponents():
        raise ValueError("even homogenization needs every exponent to be even")
    m = p.total_degree()
    # even exponents force even degrees, so odd levels are empty and the
    # alternating pattern puts (w1 w2)^(l/2) on level l
    return _apply(p, HomogenizationPattern.even_two_variable(m))


def homogenize_many_var(p: Poly, pattern: Union[HomogenizationPattern, Sequence[int]]) -> Poly:
    _require_nonzero(p)
    if not isinstance(pattern, HomogenizationPattern):
        pattern = HomogenizationPattern.many_variable(pattern)
    return _apply(p, pattern)


def specialize_fresh(p: Poly, count: int) -> Poly:
    """Set the last ``count`` variables to 1 and drop them."""
    if not 0 <= count < p.arity:
        raise ValueError("count must leave at least one variable")
    if count == 0:
        return p
    d = p.arity - count
    out: Dict[tuple, GaussianRational] = {}
    for alpha, c in p.items():
        key = alpha[:d]
        s = out.get(key)
        out[key] = c if s is None else s + c
    return Poly._make({a: c for a, c in out.items() if c}, d, max(p.fresh - count, 0))
