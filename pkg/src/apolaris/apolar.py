"""Apolar and Bombieri inner products.

Monomials are orthogonal under both products; they differ only in the
weight given to a monomial z^alpha:

* apolar:   <z^a, z^a>_a = a!
* Bombieri: <z^a, z^a>_b = a! / |a|!

Norms are returned squared so that every comparison downstream stays in
exact rational arithmetic.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .gaussian import GaussianRational
from .poly import Poly, apply_diff, multi_factorial


def apolar_inner(p: Poly, q: Poly) -> GaussianRational:
    """sum over alpha of alpha! * c_alpha * conj(d_alpha)."""
    p._check(q)
    small, large = (p, q) if len(p) <= len(q) else (q, p)
    re = Fraction(0)
    im = Fraction(0)
    for alpha, _ in small.items():
        if alpha not in large._terms:
            continue
        c = p._terms[alpha] * q._terms[alpha].conjugate()
        k = multi_factorial(alpha)
        re += k * c.re
        im += k * c.im
    return GaussianRational(re, im)


def apolar_inner_via_diff(p: Poly, q: Poly) -> GaussianRational:
    """(conj(Q)(D) P)(0), the differential-operator form of the same product."""
    p._check(q)
    return apply_diff(q.conjugate(), p).constant_term()


def apolar_norm_sq(p: Poly) -> Fraction:
    """||P||_a^2 = sum alpha! |c_alpha|^2."""
    whole = 0
    rest = Fraction(0)
    for alpha, c in p.items():
        re, im = c.re, c.im
        # Fraction arithmetic dominates small norms; keep integers as ints
        if re.denominator == 1 and im.denominator == 1:
            whole += multi_factorial(alpha) * (re.numerator ** 2 + im.numerator ** 2)
        else:
            rest += multi_factorial(alpha) * c.abs2()
    return rest + whole if rest else Fraction(whole)


def bombieri_inner(p: Poly, q: Poly) -> GaussianRational:
    """Bombieri product; monomials of different degree are orthogonal."""
    p._check(q)
    re = Fraction(0)
    im = Fraction(0)
    for alpha, a in p.items():
        b = q._terms.get(alpha)
        if b is None:
            continue
        c = a * b.conjugate()
        w = Fraction(multi_factorial(alpha), math.factorial(sum(alpha)))
        re += w * c.re
        im += w * c.im
    return GaussianRational(re, im)


def bombieri_norm_sq(p: Poly) -> Fraction:
    return bombieri_inner(p, p).re
