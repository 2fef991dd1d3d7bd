"""Search for the smallest ratio ||P_1 ... P_s||^2 / prod ||P_i||^2.

The ratio is unchanged when a factor is multiplied by a unit (1, i, -1, -i)
or when factors are permuted, so candidates are normalized with
:func:`~apolaris.inequalities.normalize_unit` and factor tuples are taken as
sorted multisets.  Ties are broken by the lexicographic order of the
witness (see :meth:`Poly.sort_key`), which makes the result independent of
how the work is split across processes.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .apolar import apolar_norm_sq
from .gaussian import GaussianRational
from .inequalities import Theorem, Verdict, normalize_unit
from .poly import Poly, product

EXHAUSTIVE = "exhaustive"
SAMPLED = "sampled"


@dataclass(frozen=True)
class SearchConfig:
    """A finite family of polynomials and the number of factors to combine.

    Candidates are all polynomials in ``arity`` variables whose coefficient
    on every monomial of total degree <= ``degree`` is drawn from ``grid``
    (the zero polynomial excluded).  When the number of factor multisets
    exceeds ``threshold``, ``samples`` tuples are drawn with a PCG64
    generator seeded by ``seed`` instead.
    """

    grid: Tuple[GaussianRational, ...]
    arity: int = 1
    degree: int = 1
    factors: int = 2
    seed: int = 0
    threshold: int = 100_000
    samples: int = 10_000

    def __post_init__(self):
        object.__setattr__(self, "grid", tuple(GaussianRational.coerce(c) for c in self.grid))
        if not self.grid:
            raise ValueError("empty coefficient grid")
        if self.arity < 1 or self.degree < 0 or self.factors < 1:
            raise ValueError("arity and factor count must be positive, degree non-negative")

    def monomials(self) -> List[tuple]:
        return sorted(
            (a for a in itertools.product(range(self.degree + 1), repeat=self.arity)
             if sum(a) <= self.degree),
            reverse=True,
        )


@dataclass(frozen=True)
class SearchReport:
    ratio: Fraction
    witness: Tuple[Poly, ...]
    mode: str
    evaluated: int

    def verdict(self) -> Verdict:
        lhs = apolar_norm_sq(product(self.witness))
        rhs = Fraction(1)
        for p in self.witness:
            rhs *= apolar_norm_sq(p)
        return Verdict(Theorem.SEARCH, 1, lhs, rhs, lhs >= rhs, ">=", witness=self.witness)

    def to_dict(self) -> dict:
        out = self.verdict().to_dict()
        out["mode"] = self.mode
        out["evaluated"] = self.evaluated
        return out


def _candidates(config: SearchConfig) -> List[Poly]:
    monos = config.monomials()
    seen = {}
    for coeffs in itertools.product(config.grid, repeat=len(monos)):
        p = Poly(dict(zip(monos, coeffs)), config.arity)
        if p.is_zero():
            continue
        p = normalize_unit(p)
        seen.setdefault(p, p)
    return sorted(seen, key=Poly.sort_key)


def _poly_from_indices(config: SearchConfig, monos, idx) -> Poly:
    return Poly({m: config.grid[k] for m, k in zip(monos, idx)}, config.arity)


def _best(tuples, norms=None) -> Tuple[Optional[tuple], int]:
    best = None
    count = 0
    for factors in tuples:
        rhs = Fraction(1)
        for p in factors:
            rhs *= norms[p] if norms is not None else apolar_norm_sq(p)
        ratio = apolar_norm_sq(product(factors)) / rhs
        key = (ratio, tuple(p.sort_key() for p in factors))
        count += 1
        if best is None or key < best[0]:
            best = (key, factors)
    return best, count


def _exhaustive_chunk(args):
    config, start, stop = args
    cands = _candidates(config)
    norms = {p: apolar_norm_sq(p) for p in cands}
    combos = itertools.islice(
        itertools.combinations_with_replacement(cands, config.factors), start, stop
    )
    return _best(combos, norms)


def _sampled_tuples(config: SearchConfig):
    monos = config.monomials()
    rng = np.random.Generator(np.random.PCG64(config.seed))
    draws = rng.integers(0, len(config.grid), size=(config.samples, config.factors, len(monos)))
    return monos, draws


def _sampled_chunk(args):
    config, start, stop = args
    monos, draws = _sampled_tuples(config)
    tuples = []
    for row in draws[start:stop]:
        factors = [_poly_from_indices(config, monos, idx) for idx in row]
        if any(p.is_zero() for p in factors):
            continue
        factors = sorted((normalize_unit(p) for p in factors), key=Poly.sort_key)
        tuples.append(tuple(factors))
    return _best(tuples)


def _split(total: int, parts: int):
    parts = max(1, min(parts, total))
    step = -(-total // parts)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def search_min_ratio(config: SearchConfig, workers: int = 1) -> SearchReport:
    """Minimum of ||prod P||^2 / prod ||P||^2 over the configured family."""
    n_polys = len(config.grid) ** len(config.monomials())
    multisets = math.comb(n_polys + config.factors - 1, config.factors)
    if multisets <= config.threshold:
        mode = EXHAUSTIVE
        total = math.comb(len(_candidates(config)) + config.factors - 1, config.factors)
        worker = _exhaustive_chunk
    else:
        mode = SAMPLED
        total = config.samples
        worker = _sampled_chunk
    if total == 0:
        raise ValueError("the search space is empty")
    chunks = [(config, lo, hi) for lo, hi in _split(total, workers)]
    if workers > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(worker, chunks))
    else:
        results = [worker(c) for c in chunks]
    found = [r for r, _ in results if r is not None]
    if not found:
        raise ValueError("the search space is empty")
    (ratio, _), witness = min(found, key=lambda r: r[0])
    return SearchReport(ratio, tuple(witness), mode, sum(n for _, n in results))
