"""Floating-point oracle for the apolar product through the Bargmann integral

    <P, Q>_a = pi^-d * int_{R^d} int_{R^d} P(x+iy) conj(Q(x+iy)) exp(-|x|^2-|y|^2) dx dy

evaluated either by tensor Gauss-Hermite quadrature (exact for polynomial
integrands once enough nodes are used) or by Monte Carlo.  Under the
normalized weight every real coordinate is N(0, 1/2), so the Monte Carlo
estimate is a plain sample mean with no extra prefactor.

Nothing here touches the exact code path except for reading coefficients,
so agreement with :func:`apolaris.apolar.apolar_inner` is a genuine cross
check.
"""

from __future__ import annotations

import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from .poly import ArityError, Poly

MC_CHUNK = 1 << 16
MAX_GRID_POINTS = 4_000_000
# real coordinates are N(0, 1/2) under exp(-|x|^2)/sqrt(pi)
MC_SIGMA = math.sqrt(0.5)


@dataclass(frozen=True)
class QuadratureGrid:
    nodes: np.ndarray
    weights: np.ndarray
    exactness_degree: int

    def __len__(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class OracleEstimate:
    value: complex
    method: str
    stderr: float
    nodes_or_samples: int
    certified: bool

    def to_dict(self) -> dict:
        return {
            "value": [self.value.real, self.value.imag],
            "method": self.method,
            "stderr": self.stderr,
            "nodes_or_samples": self.nodes_or_samples,
            "certified": self.certified,
        }


def _orthonormal_hermite(x: np.ndarray, n: int) -> np.ndarray:
    """Rows p_0..p_n of the Hermite polynomials orthonormal for exp(-x^2)."""
    p = np.empty((n + 1,) + x.shape)
    p[0] = math.pi ** -0.25
    if n >= 1:
        p[1] = math.sqrt(2.0) * x * p[0]
    for k in range(1, n):
        p[k + 1] = math.sqrt(2.0 / (k + 1)) * x * p[k] - math.sqrt(k / (k + 1)) * p[k - 1]
    return p


def gauss_hermite_grid(n: int) -> QuadratureGrid:
    """n-point Gauss-Hermite rule for the weight exp(-x^2).

    Nodes are the eigenvalues of the Jacobi matrix (Golub-Welsch), polished
    by Newton steps on the orthonormal recurrence.  Weights are Christoffel
    numbers 1 / sum_k p_k(x)^2, which keeps small weights accurate in a
    relative sense.
    """
    if n < 1:
        raise ValueError("the number of nodes must be positive")
    off = np.sqrt(np.arange(1, n) / 2.0)
    jacobi = np.diag(off, 1) + np.diag(off, -1)
    x = np.linalg.eigvalsh(jacobi)
    for _ in range(3):
        p = _orthonormal_hermite(x, n)
        dp = math.sqrt(2.0 * n) * p[n - 1]
        x = x - p[n] / dp
    x = (x - x[::-1]) / 2.0
    if n % 2:
        x[n // 2] = 0.0
    p = _orthonormal_hermite(x, n - 1)
    w = 1.0 / np.sum(p * p, axis=0)
    w = (w + w[::-1]) / 2.0
    return QuadratureGrid(x, w, 2 * n - 1)


def variable_degree(p: Poly) -> int:
    """Largest exponent of any single variable in p (0 for the zero polynomial)."""
    return max((e for a, _ in p.items() for e in a), default=0)


def required_nodes(p: Poly, q: Poly) -> int:
    """Nodes per axis for which the tensor rule integrates P(z) conj(Q(z)) exactly.

    Only z_k = x_k + i y_k involves the axes x_k and y_k, so the integrand
    has degree at most deg_k P + deg_k Q along each of them.  This never
    exceeds ceil((deg P + deg Q + 1) / 2).
    """
    per_axis = max(
        (max((a[k] for a, _ in p.items()), default=0) + max((a[k] for a, _ in q.items()), default=0)
         for k in range(p.arity)),
        default=0,
    )
    return per_axis // 2 + 1


def _eval_points(p: Poly, z: np.ndarray) -> np.ndarray:
    """Evaluate p at complex points z of shape (..., d)."""
    out = np.zeros(z.shape[:-1], dtype=complex)
    if p.is_zero():
        return out
    maxe = [max(a[k] for a, _ in p.items()) for k in range(p.arity)]
    powers = []
    for k in range(p.arity):
        tbl = [np.ones(z.shape[:-1], dtype=complex)]
        for _ in range(maxe[k]):
            tbl.append(tbl[-1] * z[..., k])
        powers.append(tbl)
    for alpha, c in p.sorted_terms(descending=False):
        term = np.full(z.shape[:-1], complex(c))
        for k, e in enumerate(alpha):
            if e:
                term = term * powers[k][e]
        out += term
    return out


def _tensor_grid(d: int, grid: QuadratureGrid):
    """Points z (n^(2d), d) in lexicographic order over axes x1,y1,...,xd,yd,
    with the matching product weights."""
    n = len(grid)
    axes = np.meshgrid(*([grid.nodes] * (2 * d)), indexing="ij")
    z = np.stack([axes[2 * k] + 1j * axes[2 * k + 1] for k in range(d)], axis=-1).reshape(-1, d)
    wax = np.meshgrid(*([grid.weights] * (2 * d)), indexing="ij")
    w = np.ones(n ** (2 * d))
    for a in wax:
        w = w * a.reshape(-1)
    return z, w


def _fsum_complex(v: np.ndarray) -> complex:
    return complex(math.fsum(v.real.tolist()), math.fsum(v.imag.tolist()))


def inner_product_quadrature(p: Poly, q: Poly, nodes_per_axis: Optional[int] = None) -> OracleEstimate:
    """Tensor Gauss-Hermite estimate of <P, Q>_a over 2d real axes."""
    if p.arity != q.arity:
        raise ArityError(f"arity mismatch: {p.arity} vs {q.arity}")
    d = p.arity
    need = required_nodes(p, q)
    n = need if nodes_per_axis is None else nodes_per_axis
    if n < 1:
        raise ValueError("nodes_per_axis must be positive")
    certified = n >= need
    if not certified:
        warnings.warn(f"{n} nodes per axis do not certify exactness (need {need})", stacklevel=2)
    if n ** (2 * d) > MAX_GRID_POINTS:
        raise ValueError(f"{n}^{2 * d} grid points exceed the cap of {MAX_GRID_POINTS}")
    z, w = _tensor_grid(d, gauss_hermite_grid(n))
    vals = _eval_points(p, z) * np.conj(_eval_points(q, z)) * w
    value = _fsum_complex(vals) / math.pi ** d
    return OracleEstimate(value, "quadrature", 0.0, n, certified)


def _mc_chunk(p: Poly, q: Poly, seed: int, index: int, size: int):
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(index,))))
    xy = rng.normal(0.0, MC_SIGMA, size=(size, 2 * p.arity))
    z = xy[:, 0::2] + 1j * xy[:, 1::2]
    pv = _eval_points(p, z)
    qv = pv if q is p else _eval_points(q, z)
    v = pv * np.conj(qv)
    a2 = (v.real * v.real + v.imag * v.imag).tolist()
    return math.fsum(v.real.tolist()), math.fsum(v.imag.tolist()), math.fsum(a2)


def inner_product_montecarlo(p: Poly, q: Poly, samples: int, seed: int,
                             workers: int = 1) -> OracleEstimate:
    """Sample-mean estimate of <P, Q>_a with z_k = x_k + i y_k, x, y ~ N(0, 1/2).

    Samples are drawn in fixed chunks of ``MC_CHUNK`` points; chunk c uses a
    PCG64 generator seeded by ``SeedSequence(seed, spawn_key=(c,))``.
    Chunk sums are merged in chunk order, so the estimate is bit-identical
    for any ``workers``.
    """
    if p.arity != q.arity:
        raise ArityError(f"arity mismatch: {p.arity} vs {q.arity}")
    if samples < 1:
        raise ValueError("samples must be positive")
    sizes: List[int] = [MC_CHUNK] * (samples // MC_CHUNK)
    if samples % MC_CHUNK:
        sizes.append(samples % MC_CHUNK)
    jobs = [(p, q, seed, c, s) for c, s in enumerate(sizes)]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda a: _mc_chunk(*a), jobs))
    else:
        parts = [_mc_chunk(*a) for a in jobs]
    re = math.fsum(r for r, _, _ in parts) / samples
    im = math.fsum(i for _, i, _ in parts) / samples
    sq = math.fsum(s for _, _, s in parts)
    if samples > 1:
        var = max(sq - samples * (re * re + im * im), 0.0) / (samples - 1)
        stderr = math.sqrt(var / samples)
    else:
        stderr = math.inf
    return OracleEstimate(complex(re, im), "monte-carlo", stderr, samples, False)


def gaussian_l2s_norm(p: Poly, s: int, nodes_per_axis: Optional[int] = None,
                      max_points: int = MAX_GRID_POINTS) -> float:
    """int |P|^(2s) d(gamma), gamma the Gaussian probability measure on R^(2d).

    This is ||P||_{L^{2s}(gamma)}^{2s}, which equals ||P^s||_a^2.
    """
    if s < 1:
        raise ValueError("s must be a positive integer")
    d = p.arity
    # |P|^(2s) has degree 2s * deg_k P along the axes of z_k
    need = s * variable_degree(p) + 1
    n = need if nodes_per_axis is None else nodes_per_axis
    if n < need:
        raise ValueError(f"{n} nodes per axis cannot certify |P|^{2 * s}; need {need}")
    if n ** (2 * d) > max_points:
        raise ValueError(
            f"certification needs {n}^{2 * d} grid points, above the cap of {max_points}"
        )
    z, w = _tensor_grid(d, gauss_hermite_grid(n))
    pv = _eval_points(p, z)
    mod2 = pv.real * pv.real + pv.imag * pv.imag
    return math.fsum((mod2 ** s * w).tolist()) / math.pi ** d
