"""Acceptance criteria, one test per criterion.

Each test records a single ``PASS``/``FAIL`` line; ``conftest.py`` prints
them in the terminal summary, and running this file as a script prints
them directly.
"""

import math
import random
import time
import timeit
from fractions import Fraction

from apolaris import (
    Poly,
    apolar_norm_sq,
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
    homogenize_even_two_var,
    homogenize_one_var,
    parse,
)
from apolaris.apolar import apolar_inner
from apolaris.bargmann import inner_product_quadrature
from apolaris.inequalities import equality_example_values, find_equality_parameter, power_root_sequence
from apolaris.search import SearchConfig, search_min_ratio

from instances import grid_polys, random_poly, rng_for, theorem_instance

RESULTS = []


def record(number, title, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
    if detail:
        line += f" ({detail})"
    RESULTS.append(line)
    print(line)
    assert ok, line


def best_time(fn, repeat=20):
    fn()  # warm caches once
    return min(timeit.repeat(fn, number=1, repeat=repeat))


# 1 -----------------------------------------------------------------------------


def _failure_example():
    a, b = parse("x1 - 1", 1), parse("x1 + 1", 1)
    return apolar_norm_sq(a) * apolar_norm_sq(b), apolar_norm_sq(a * b), \
        check_constant_one([a, b]), check_theorem_main([a, b])


def test_criterion_1_failure_example():
    prod_norms, norm_prod, one, main = _failure_example()
    ok = (prod_norms == 4 and norm_prod == 3 and not one.holds
          and main.constant == 2 and main.holds)
    elapsed = best_time(_failure_example)
    record(1, "product of norms 4, norm of product 3, constant 1 fails, constant 2 holds",
           ok and elapsed < 1e-3, f"{elapsed * 1e6:.0f} us")


# 2 -----------------------------------------------------------------------------


def _equality_example():
    values = [equality_example_values(t) for t in (0, 1)]
    c = find_equality_parameter()
    return values, c, equality_example_values(c)


def test_criterion_2_equality_parameter():
    ((f0, g0), (f1, g1)), c, (fc, gc) = _equality_example()
    ok = (f0, f1, g0, g1) == (3, 3, 2, 4) and 0 < c < 1 and fc == gc and c == Fraction(1, 2)
    elapsed = best_time(_equality_example)
    record(2, f"f(0)=f(1)=3, g(0)=2, g(1)=4, c={c}", ok and elapsed < 1e-3,
           f"{elapsed * 1e6:.0f} us")


# 3 -----------------------------------------------------------------------------


def test_criterion_3_monotonicity():
    ok = True
    parts = []
    for t in (Fraction(1, 8), Fraction(1, 4), Fraction(3, 8)):
        # both sides straight from the products, then compared to closed forms
        q = Poly({(0,): 1, (1,): -t}, 1)
        lhs = apolar_norm_sq(Poly({(0,): 1, (1,): t}, 1) * q)
        rhs = apolar_norm_sq(Poly.constant(1, 1) * q)
        v = check_monotonicity_counterexample(t)
        ok &= (lhs == 1 + 2 * t ** 4 and rhs == 1 + t ** 2 and lhs < rhs
               and v.holds and (v.lhs_sq, v.rhs_sq) == (lhs, rhs))
        parts.append(f"t={t}: {lhs} < {rhs}")
    record(3, "1 + 2t^4 < 1 + t^2 from the products", ok, "; ".join(parts))


# 4 and 5 share one instance set --------------------------------------------------


GRID_1 = grid_polys(1, 3)
GRID_2 = grid_polys(2, 3)


def _random_gaussian_polys(count=500):
    rng = rng_for("commutation")
    out = []
    for _ in range(count):
        d = rng.randint(1, 3)
        out.append((random_poly(rng, d, degree=rng.randint(0, 3)),
                    random_poly(rng, d, degree=rng.randint(0, 3))))
    return out


def _commutation_pairs():
    yield from ((p, q) for p in GRID_1 for q in GRID_1)
    # every arity-2 grid polynomial appears in two pairs: with its successor and predecessor
    yield from zip(GRID_2, GRID_2[1:] + GRID_2[:1])
    low = [p for p in GRID_2 if p.total_degree() <= 1]
    yield from ((p, q) for p in low for q in low)
    yield from _random_gaussian_polys()


def test_criterion_4_commutation():
    checked = failures = 0
    for p, q in _commutation_pairs():
        checked += 1
        if homogenize_one_var(p * q) != homogenize_one_var(p) * homogenize_one_var(q):
            failures += 1
    even_1 = [p for p in GRID_1 if p.has_only_even_exponents()]
    even_2 = [p for p in GRID_2 if p.has_only_even_exponents()]
    for p, q in [(p, q) for p in even_1 for q in even_1] + [(p, q) for p in even_2 for q in even_2]:
        checked += 1
        if homogenize_even_two_var(p * q) != homogenize_even_two_var(p) * homogenize_even_two_var(q):
            failures += 1
    record(4, "(PQ)_hom = P_hom Q_hom", failures == 0, f"{checked} pairs, {failures} failures")


def test_criterion_5_norm_sandwich():
    polys = GRID_1 + GRID_2 + [p for pair in _random_gaussian_polys() for p in pair]
    failures = 0
    for p in polys:
        k = p.total_degree()
        n = apolar_norm_sq(p)
        h = apolar_norm_sq(homogenize_one_var(p))
        exact = sum(math.factorial(k - j) * apolar_norm_sq(c) for j, c in p.components().items())
        if not (n <= h <= math.factorial(k) * n and h == exact):
            failures += 1
    record(5, "||P||^2 <= ||P_hom||^2 <= k! ||P||^2 and the exact identity", failures == 0,
           f"{len(polys)} polynomials, {failures} failures")


# 6 -----------------------------------------------------------------------------


CHECKERS = {
    "main": check_theorem_main,
    "topband": check_theorem_topband,
    "nonneg": check_nonnegative,
    "even": check_even,
    "disjoint": check_disjoint_equality,
    "power": check_power,
    "bombieri": check_bombieri_homogeneous,
    "mixed": check_mixed_homogeneous,
}


def test_criterion_6_theorems_on_random_instances():
    start = time.perf_counter()
    failed = {}
    for name, checker in CHECKERS.items():
        rng = rng_for(name, 6)
        bad = sum(not checker(*theorem_instance(name, rng)).holds for _ in range(1000))
        if bad:
            failed[name] = bad
    elapsed = time.perf_counter() - start
    record(6, "8 checkers hold on 1000 random instances each", not failed and elapsed < 60,
           f"{elapsed:.1f} s, failures {failed or 'none'}")


# 7 -----------------------------------------------------------------------------


def test_criterion_7_bargmann_oracle():
    rng = random.Random("bargmann:7")
    ints = list(range(-3, 4))
    start = time.perf_counter()
    worst = 0.0
    certified = True
    for _ in range(200):
        d = rng.randint(1, 3)
        p = random_poly(rng, d, degree=rng.randint(0, 4), grid=ints)
        q = random_poly(rng, d, degree=rng.randint(0, 4), grid=ints)
        exact = complex(apolar_inner(p, q))
        est = inner_product_quadrature(p, q)
        certified &= est.certified
        worst = max(worst, abs(est.value - exact) / max(1.0, abs(exact)))
    elapsed = time.perf_counter() - start
    record(7, "certified quadrature matches the exact product", certified and worst <= 1e-9
           and elapsed < 30, f"max rel err {worst:.2e}, {elapsed:.1f} s")


# 8 -----------------------------------------------------------------------------


def test_criterion_8_power_growth():
    roots = power_root_sequence(Poly.variable(1, 1), 8).roots
    expected = [math.factorial(s) ** (1 / (2 * s)) for s in range(1, 9)]
    err = max(abs(r - e) / e for r, e in zip(roots, expected))
    increasing = all(a < b for a, b in zip(roots, roots[1:]))
    record(8, "(s!)^(1/2s) for s <= 8, strictly increasing", err <= 1e-9 and increasing,
           f"max rel err {err:.1e}")


# 9 -----------------------------------------------------------------------------


def test_criterion_9_search():
    config = SearchConfig(grid=(-1, 1), arity=1, degree=1, factors=2)
    reports = [search_min_ratio(config, workers=w) for w in (1, 2, 4)]
    witness = (parse("x1 - 1", 1), parse("x1 + 1", 1))
    ok = all(r.ratio == Fraction(3, 4) and r.witness == witness for r in reports)
    record(9, "minimum ratio 3/4 at (x1 - 1, x1 + 1) for workers 1, 2, 4", ok,
           f"mode {reports[0].mode}, {reports[0].evaluated} multisets")


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion"):
            try:
                fn()
            except AssertionError:
                pass
