"""Sparse multivariate polynomials over the Gaussian rationals.

A :class:`Poly` is an immutable map from exponent tuples to nonzero
:class:`~apolaris.gaussian.GaussianRational` coefficients, together with a
fixed arity.  Variables are numbered from 1 in the text format and from 0
in exponent tuples.  The last ``fresh`` variables are homogenization
variables and print as ``w1, w2, ...``; they take part in every algebraic
operation exactly like the others.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple

from .gaussian import GaussianRational, Number

Exponents = Tuple[int, ...]


class ArityError(ValueError):
    """Raised when polynomials of different arity are combined."""


class ZeroPolynomialError(ValueError):
    """Raised when an operation needs a degree and gets the zero polynomial."""


@lru_cache(maxsize=None)
def _fact(n: int) -> int:
    return math.factorial(n)


class MultiIndex(tuple):
    """Exponent vector alpha in N^d."""

    def __new__(cls, exponents: Iterable[int]):
        exps = tuple(int(e) for e in exponents)
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        return super().__new__(cls, exps)

    @property
    def order(self) -> int:
        """|alpha|, the sum of the entries."""
        return sum(self)

    @property
    def factorial(self) -> int:
        """alpha! = alpha_1! * ... * alpha_d!"""
        return multi_factorial(self)

    def precedes(self, other: Sequence[int]) -> bool:
        """Componentwise partial order: alpha_i <= beta_i for every i."""
        return len(self) == len(other) and all(a <= b for a, b in zip(self, other))

    def __repr__(self) -> str:
        return f"MultiIndex({tuple(self)})"


@lru_cache(maxsize=65536)
def multi_factorial(alpha: Exponents) -> int:
    out = 1
    for a in alpha:
        if a > 1:
            out *= _fact(a)
    return out


class Poly:
    """Immutable sparse polynomial with Gaussian-rational coefficients."""

    __slots__ = ("arity", "fresh", "_terms", "_hash")

    def __init__(
        self,
        terms: Optional[Mapping[Sequence[int], Number]] = None,
        arity: int = 1,
        fresh: int = 0,
    ):
        if arity < 1:
            raise ValueError("arity must be a positive integer")
        if not 0 <= fresh <= arity:
            raise ValueError("fresh variable count must lie in [0, arity]")
        clean: Dict[Exponents, GaussianRational] = {}
        for key, coeff in (terms or {}).items():
            alpha = tuple(int(e) for e in key)
            if len(alpha) != arity:
                raise ArityError(f"exponent {alpha} does not have length {arity}")
            if any(e < 0 for e in alpha):
                raise ValueError(f"negative exponent in {alpha}")
            c = GaussianRational.coerce(coeff)
            total = clean.get(alpha)
            c = c if total is None else total + c
            if c:
                clean[alpha] = c
            else:
                clean.pop(alpha, None)
        self._init(clean, arity, fresh)

    def _init(self, terms: Dict[Exponents, GaussianRational], arity: int, fresh: int) -> None:
        object.__setattr__(self, "_terms", terms)
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "fresh", fresh)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _make(cls, terms: Dict[Exponents, GaussianRational], arity: int, fresh: int = 0) -> "Poly":
        # trusted constructor: keys already validated, zero coefficients removed
        obj = object.__new__(cls)
        obj._init(terms, arity, fresh)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    def __reduce__(self):
        return (Poly._make, (self._terms, self.arity, self.fresh))

    # constructors -------------------------------------------------------------

    @classmethod
    def zero(cls, arity: int, fresh: int = 0) -> "Poly":
        return cls._make({}, arity, fresh)

    @classmethod
    def constant(cls, c: Number, arity: int) -> "Poly":
        return cls({(0,) * arity: c}, arity)

    @classmethod
    def monomial(cls, alpha: Sequence[int], c: Number = 1) -> "Poly":
        return cls({tuple(alpha): c}, len(alpha))

    @classmethod
    def variable(cls, index: int, arity: int) -> "Poly":
        """The variable x_index (1-based)."""
        if not 1 <= index <= arity:
            raise ValueError(f"variable index {index} out of range 1..{arity}")
        alpha = [0] * arity
        alpha[index - 1] = 1
        return cls.monomial(alpha)

    @classmethod
    def parse(cls, text: str, arity: int, fresh: Optional[int] = None) -> "Poly":
        from .parsing import parse

        return parse(text, arity, fresh)

    # accessors ----------------------------------------------------------------

    @property
    def terms(self) -> Mapping[Exponents, GaussianRational]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Exponents, GaussianRational]]:
        return iter(self._terms.items())

    def sorted_terms(self, descending: bool = True):
        """Terms in lexicographic order of exponent vectors."""
        return sorted(self._terms.items(), reverse=descending)

    def coeff(self, alpha: Sequence[int]) -> GaussianRational:
        return self._terms.get(tuple(alpha), GaussianRational(0))

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def total_degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomialError("the zero polynomial has no total degree")
        return max(sum(alpha) for alpha in self._terms)

    @property
    def degree(self) -> Optional[int]:
        """Total degree, or None for the zero polynomial."""
        return self.total_degree() if self._terms else None

    def degrees_present(self) -> list:
        return sorted({sum(alpha) for alpha in self._terms})

    def is_homogeneous(self) -> bool:
        return len({sum(alpha) for alpha in self._terms}) <= 1

    def support_variables(self) -> set:
        """1-based indices of variables that occur with positive exponent."""
        return {k + 1 for alpha in self._terms for k, e in enumerate(alpha) if e}

    def has_only_even_exponents(self) -> bool:
        return all(e % 2 == 0 for alpha in self._terms for e in alpha)

    def is_real_nonnegative(self) -> bool:
        return all(c.im == 0 and c.re >= 0 for c in self._terms.values())

    def constant_term(self) -> GaussianRational:
        return self.coeff((0,) * self.arity)

    # structure ----------------------------------------------------------------

    def homogeneous_component(self, j: int) -> "Poly":
        return Poly._make(
            {a: c for a, c in self._terms.items() if sum(a) == j}, self.arity, self.fresh
        )

    def components(self) -> Dict[int, "Poly"]:
        """Nonzero homogeneous components keyed by degree."""
        buckets: Dict[int, Dict[Exponents, GaussianRational]] = {}
        for a, c in self._terms.items():
            buckets.setdefault(sum(a), {})[a] = c
        return {j: Poly._make(t, self.arity, self.fresh) for j, t in sorted(buckets.items())}

    def principal_part(self) -> "Poly":
        return self.homogeneous_component(self.total_degree())

    def conjugate(self) -> "Poly":
        return Poly._make(
            {a: c.conjugate() for a, c in self._terms.items()}, self.arity, self.fresh
        )

    def with_fresh(self, fresh: int) -> "Poly":
        return Poly._make(self._terms, self.arity, fresh)

    def embed(self, arity: int, fresh: Optional[int] = None) -> "Poly":
        """Append unused variables so the result has the given arity."""
        if arity < self.arity:
            raise ArityError("cannot embed into a smaller arity")
        pad = (0,) * (arity - self.arity)
        f = self.fresh if fresh is None else fresh
        return Poly._make({a + pad: c for a, c in self._terms.items()}, arity, f)

    # arithmetic ---------------------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if self.arity != other.arity:
            raise ArityError(f"arity mismatch: {self.arity} vs {other.arity}")

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        return Poly.constant(GaussianRational.coerce(other), self.arity)

    def __add__(self, other) -> "Poly":
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for a, c in other._terms.items():
            s = out.get(a)
            s = c if s is None else s + c
            if s:
                out[a] = s
            else:
                del out[a]
        return Poly._make(out, self.arity, max(self.fresh, other.fresh))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._make({a: -c for a, c in self._terms.items()}, self.arity, self.fresh)

    def __sub__(self, other) -> "Poly":
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            try:
                c = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
            return self.scale(c)
        self._check(other)
        if self._gaussian_integral() and other._gaussian_integral():
            return self._mul_integral(other)
        out: Dict[Exponents, GaussianRational] = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                g = tuple(x + y for x, y in zip(a, b))
                s = out.get(g)
                out[g] = ca * cb if s is None else s + ca * cb
        out = {g: c for g, c in out.items() if c}
        return Poly._make(out, self.arity, max(self.fresh, other.fresh))

    def _gaussian_integral(self) -> bool:
        return all(c.re.denominator == 1 and c.im.denominator == 1 for c in self._terms.values())

    def _mul_integral(self, other: "Poly") -> "Poly":
        # same Cauchy product on machine-friendly ints; Fractions dominate the cost otherwise
        re: Dict[Exponents, int] = {}
        im: Dict[Exponents, int] = {}
        lhs = [(a, c.re.numerator, c.im.numerator) for a, c in self._terms.items()]
        rhs = [(b, c.re.numerator, c.im.numerator) for b, c in other._terms.items()]
        for a, ar, ai in lhs:
            for b, br, bi in rhs:
                g = tuple(x + y for x, y in zip(a, b))
                re[g] = re.get(g, 0) + ar * br - ai * bi
                if ai or bi:
                    im[g] = im.get(g, 0) + ar * bi + ai * br
        out = {}
        for g, r in re.items():
            i = im.get(g, 0)
            if r or i:
                out[g] = GaussianRational._raw(Fraction(r), Fraction(i))
        return Poly._make(out, self.arity, max(self.fresh, other.fresh))

    def __rmul__(self, other) -> "Poly":
        return self * other

    def scale(self, c: Number) -> "Poly":
        c = GaussianRational.coerce(c)
        if not c:
            return Poly.zero(self.arity, self.fresh)
        return Poly._make({a: c * v for a, v in self._terms.items()}, self.arity, self.fresh)

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = Poly.constant(1, self.arity).with_fresh(self.fresh)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # equality / printing --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.arity == other.arity and self._terms == other._terms
        if isinstance(other, (int, GaussianRational)) or hasattr(other, "denominator"):
            return self == Poly.constant(other, self.arity)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.arity, frozenset(self._terms.items()))))
        return self._hash

    def sort_key(self) -> tuple:
        """Total order used for deterministic tie-breaking."""
        return tuple((a, c.re, c.im) for a, c in self.sorted_terms())

    def var_name(self, k: int) -> str:
        """Printed name of the variable at 0-based position k."""
        nx = self.arity - self.fresh
        return f"x{k + 1}" if k < nx else f"w{k - nx + 1}"

    def __str__(self) -> str:
        from .parsing import format_poly

        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({str(self)!r}, arity={self.arity})"


# module-level operations -------------------------------------------------------


def add(p: Poly, q: Poly) -> Poly:
    p._check(q)
    return p + q


def mul(p: Poly, q: Poly) -> Poly:
    p._check(q)
    return p * q


def product(factors: Sequence[Poly]) -> Poly:
    if not factors:
        raise ValueError("empty product")
    out = factors[0]
    for f in factors[1:]:
        out = mul(out, f)
    return out


def total_degree(p: Poly) -> int:
    return p.total_degree()


def homogeneous_component(p: Poly, j: int) -> Poly:
    return p.homogeneous_component(j)


def conjugate(p: Poly) -> Poly:
    return p.conjugate()


def apply_diff(q: Poly, p: Poly) -> Poly:
    """Apply q(D) to p, where D_j = d/dz_j.

    z^beta(D) z^alpha = alpha!/(alpha-beta)! z^(alpha-beta) when beta <= alpha.
    """
    q._check(p)
    out: Dict[Exponents, GaussianRational] = {}
    for b, cb in q.items():
        for a, ca in p.items():
            if any(y > x for x, y in zip(a, b)):
                continue
            g = tuple(x - y for x, y in zip(a, b))
            k = multi_factorial(a) // multi_factorial(g)
            v = cb * ca * k
            s = out.get(g)
            out[g] = v if s is None else s + v
    return Poly._make({g: c for g, c in out.items() if c}, p.arity, max(p.fresh, q.fresh))


def evaluate(p: Poly, point: Sequence[complex]) -> complex:
    """Floating evaluation, summing terms in ascending lexicographic order."""
    if len(point) != p.arity:
        raise ArityError(f"point has length {len(point)}, expected {p.arity}")
    z = [complex(v) for v in point]
    total = 0j
    for alpha, c in p.sorted_terms(descending=False):
        m = complex(c)
        for zk, e in zip(z, alpha):
            for _ in range(e):
                m *= zk
        total += m
    return total


def substitute_disjoint_relabel(p: Poly, mapping: Mapping[int, int], new_arity: int) -> Poly:
    """Rename variable i to mapping[i] (both 1-based) inside a larger arity."""
    targets = list(mapping.values())
    if len(set(targets)) != len(targets):
        raise ValueError("variable mapping is not injective")
    for src, dst in mapping.items():
        if not 1 <= dst <= new_arity:
            raise ValueError(f"target index {dst} out of range 1..{new_arity}")
        if not 1 <= src <= p.arity:
            raise ValueError(f"source index {src} out of range 1..{p.arity}")
    missing = p.support_variables() - set(mapping)
    if missing:
        raise ValueError(f"variables {sorted(missing)} occur in the polynomial but are not mapped")
    out: Dict[Exponents, GaussianRational] = {}
    for alpha, c in p.items():
        beta = [0] * new_arity
        for src, dst in mapping.items():
            beta[dst - 1] = alpha[src - 1]
        out[tuple(beta)] = c
    return Poly._make(out, new_arity)
