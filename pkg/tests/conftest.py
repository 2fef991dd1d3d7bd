import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

from apolaris import GaussianRational, Poly, parse

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def P(text, arity=1, fresh=None):
    return parse(text, arity, fresh)


@pytest.fixture
def poly():
    return P


small_fracs = st.sampled_from([Fraction(v) for v in (-2, -1, 0, 1, 2)] + [Fraction(1, 2), Fraction(-3, 4)])
gaussians = st.builds(GaussianRational, small_fracs, small_fracs)


@st.composite
def polys(draw, arity=None, max_degree=5, max_terms=6, nonzero=False):
    d = draw(st.integers(1, 3)) if arity is None else arity
    exps = st.tuples(*[st.integers(0, max_degree) for _ in range(d)]).filter(
        lambda a: sum(a) <= max_degree)
    terms = draw(st.dictionaries(exps, gaussians, max_size=max_terms))
    p = Poly(terms, d)
    if nonzero and p.is_zero():
        p = Poly.constant(1, d)
    return p


@st.composite
def poly_pairs(draw, max_degree=5, max_terms=6, nonzero=False):
    d = draw(st.integers(1, 3))
    return (draw(polys(d, max_degree, max_terms, nonzero)),
            draw(polys(d, max_degree, max_terms, nonzero)))


@st.composite
def poly_triples(draw, max_degree=4, max_terms=5):
    d = draw(st.integers(1, 3))
    return tuple(draw(polys(d, max_degree, max_terms)) for _ in range(3))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
