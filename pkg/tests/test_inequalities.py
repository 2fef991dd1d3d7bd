import math
from fractions import Fraction

import pytest
from hypothesis import given

from apolaris import (
    HypothesisError,
    Poly,
    Theorem,
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
)
from apolaris.inequalities import (
    equality_example_values,
    find_equality_parameter,
    minimal_band,
    normalize_unit,
    power_root_sequence,
    theorem_main_chain,
)
from apolaris.poly import ZeroPolynomialError

from conftest import P, polys
from instances import rng_for, theorem_instance

X2 = lambda text: P(text, 2)  # noqa: E731

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


def sides(v):
    return v.constant, v.lhs_sq, v.rhs_sq, v.holds


class TestFailureExample:
    def test_constant_one_fails(self):
        v = check_constant_one([P("x1 - 1"), P("x1 + 1")])
        assert sides(v) == (1, 3, 4, False)
        assert v.ratio == Fraction(3, 4)

    def test_main_holds(self):
        v = check_theorem_main([P("x1 - 1"), P("x1 + 1")])
        assert sides(v) == (2, 3, 4, True)
        assert v.ratio == Fraction(3, 2)


class TestBombieri:
    def test_examples(self):
        assert sides(check_bombieri_homogeneous([P("x1"), P("x1")])) == (1, 2, 1, True)
        v = check_bombieri_homogeneous([X2("x1 + x2"), X2("x1 - x2")])
        assert sides(v) == (1, 4, 4, True)
        assert sides(check_bombieri_homogeneous([P("x1")] * 3)) == (1, 6, 1, True)

    def test_rejects_nonhomogeneous(self):
        with pytest.raises(HypothesisError):
            check_bombieri_homogeneous([P("x1 + 1")])


class TestMixed:
    def test_examples(self):
        assert sides(check_mixed_homogeneous(P("x1 - 1"), P("x1"))) == (1, 3, 2, True)
        v = check_mixed_homogeneous(P("x1^2 - 1"), P("x1^2"))
        assert sides(v) == (1, 26, 6, True)
        v = check_mixed_homogeneous(P("x1^3 - 2x1 + i"), P("1"))
        assert v.lhs_sq == v.rhs_sq

    def test_rejects_nonhomogeneous_factor(self):
        with pytest.raises(HypothesisError):
            check_mixed_homogeneous(P("x1"), P("x1 + 1"))


class TestMain:
    def test_constant(self):
        v = check_theorem_main([P("3")])
        assert sides(v) == (1, 9, 9, True)

    def test_cube(self):
        v = check_theorem_main([P("1 + x1")] * 3)
        # (1 + 1 + 1)! = 6
        assert sides(v) == (6, 34, 8, True)

    def test_zero_rejected(self):
        with pytest.raises(HypothesisError):
            check_theorem_main([P("x1"), Poly.zero(1)])

    def test_chain_on_failure_example(self):
        chain = theorem_main_chain([P("x1 - 1"), P("x1 + 1")])
        assert list(chain.values()) == [6, 4, 4, 4, 4]


class TestTopband:
    def test_homogeneous_reduces_to_bombieri(self):
        v = check_theorem_topband(P("x1^2"), P("x1"))
        assert v.constant == 1 and v.holds

    def test_failure_example(self):
        v = check_theorem_topband(P("x1 - 1"), P("x1 + 1"), 1, 1)
        assert sides(v) == (2, 3, 4, True)

    def test_narrow_band_example(self):
        v = check_theorem_topband(P("x1^2 + x1"), P("x1"), 1, 0)
        assert sides(v) == (1, 8, 3, True)

    def test_band_is_validated(self):
        with pytest.raises(HypothesisError):
            check_theorem_topband(P("x1^2 + 1"), P("x1"), 1, 0)
        v = check_theorem_topband(P("x1^2 + 1"), P("x1"))
        assert v.details["minimal_j"] == 2 and v.constant == 2

    def test_band_above_degree(self):
        with pytest.raises(HypothesisError):
            check_theorem_topband(P("x1"), P("x1"), 2, 0)


class TestNonnegative:
    def test_examples(self):
        assert sides(check_nonnegative(P("x1 + 1"), P("x1 + 1"))) == (1, 7, 4, True)
        v = check_nonnegative(P("1"), P("2x1^2 + 1/2"))
        assert v.lhs_sq == v.rhs_sq
        assert sides(check_nonnegative(X2("x1 + x2"), X2("x1*x2"))) == (1, 4, 2, True)

    @pytest.mark.parametrize("bad", ["x1 - 1", "i*x1"])
    def test_rejects(self, bad):
        with pytest.raises(HypothesisError):
            check_nonnegative(P(bad), P("x1"))


class TestEven:
    def test_examples(self):
        assert sides(check_even(P("x1^2 - 1"), P("x1^2 - 1"))) == (4, 33, 9, True)
        assert sides(check_even(P("x1^2"), P("x1^2"))) == (4, 24, 4, True)
        v = check_even(X2("1 + x1^2"), X2("1 + x2^2"))
        assert v.lhs_sq == 9 == v.rhs_sq and v.holds

    def test_rejects(self):
        with pytest.raises(HypothesisError):
            check_even(P("x1^2 + x1"), P("x1^2"))
        with pytest.raises(HypothesisError):
            check_even(P("4"), P("x1^2"))


class TestDisjoint:
    def test_examples(self):
        v = check_disjoint_equality(X2("x1^2 - 1"), X2("x2^2 - 1"))
        assert sides(v) == (1, 9, 9, True) and v.relation == "=="
        assert check_disjoint_equality(X2("5"), X2("x1 + x2")).ratio == 1
        assert sides(check_disjoint_equality(X2("x1 + 1"), X2("x2 + 1"))) == (1, 4, 4, True)

    def test_overlap_rejected(self):
        with pytest.raises(HypothesisError):
            check_disjoint_equality(X2("x1 + x2"), X2("x2"))


class TestEqualityExample:
    def test_boundary_values(self):
        assert equality_example_values(0) == (3, 2)
        assert equality_example_values(1) == (3, 4)

    def test_parameter(self):
        c = find_equality_parameter()
        assert c == Fraction(1, 2)
        f, g = equality_example_values(c)
        assert f == g


class TestMonotonicity:
    @pytest.mark.parametrize("t,lhs,rhs", [
        (Fraction(1, 8), Fraction(2049, 2048), Fraction(65, 64)),
        (Fraction(1, 4), Fraction(129, 128), Fraction(17, 16)),
        (Fraction(3, 8), Fraction(2129, 2048), Fraction(73, 64)),
    ])
    def test_confirmed(self, t, lhs, rhs):
        v = check_monotonicity_counterexample(t)
        assert (v.lhs_sq, v.rhs_sq, v.holds) == (lhs, rhs, True)
        assert v.lhs_sq == 1 + 2 * t ** 4 and v.rhs_sq == 1 + t ** 2

    def test_boundary_reported(self):
        v = check_monotonicity_counterexample(Fraction(1, 2))
        assert (v.lhs_sq, v.rhs_sq) == (Fraction(9, 8), Fraction(5, 4))
        assert not v.holds and v.details["strict_decrease"]

    def test_restored_at_one(self):
        v = check_monotonicity_counterexample(1)
        assert (v.lhs_sq, v.rhs_sq, v.holds) == (3, 2, False)


class TestPower:
    def test_examples(self):
        assert sides(check_power(P("1 + x1"), 2)) == (1, 7, 4, True)
        assert sides(check_power(P("x1"), 5)) == (1, 120, 1, True)
        assert sides(check_power(P("x1 - 1"), 2)) == (1, 7, 4, True)

    def test_zero_exponent(self):
        with pytest.raises(HypothesisError):
            check_power(P("x1"), 0)

    def test_root_sequence_monomial(self):
        g = power_root_sequence(P("x1"), 8)
        for s, r in enumerate(g.roots, start=1):
            assert r == pytest.approx(math.factorial(s) ** (1 / (2 * s)), rel=1e-12)
        assert g.grew

    def test_root_sequence_binomial(self):
        g = power_root_sequence(P("1 + x1"), 3)
        assert g.norms_sq == (2, 7, 34)
        assert g.roots == pytest.approx([1.41421356, 1.62657656, 1.79989216], rel=1e-8)

    def test_constant_rejected(self):
        with pytest.raises(HypothesisError):
            power_root_sequence(P("1"), 3)

    def test_term_cap(self):
        with pytest.raises(HypothesisError):
            power_root_sequence(P("x1 + x2 + x3", 3), 50, term_cap=1000)


@pytest.mark.parametrize("name", sorted(CHECKERS))
def test_random_instances_hold(name):
    rng = rng_for(name, 1)
    for _ in range(150):
        v = CHECKERS[name](*theorem_instance(name, rng))
        assert v.holds
        if v.rhs_sq:
            assert v.ratio >= 1


def test_main_ratio_dominates_bombieri_on_homogeneous_inputs():
    rng = rng_for("dominates")
    for _ in range(100):
        (fs,) = theorem_instance("bombieri", rng)
        assert check_theorem_main(fs).ratio >= check_bombieri_homogeneous(fs).ratio


def test_chain_is_monotone():
    rng = rng_for("chain")
    for _ in range(100):
        (ps,) = theorem_instance("main", rng)
        values = list(theorem_main_chain(ps).values())
        assert all(a >= b for a, b in zip(values, values[1:]))
        assert values[1] == values[2]


@given(polys(nonzero=True))
def test_minimal_band_spans_degrees(p):
    degs = p.degrees_present()
    assert minimal_band(p) == degs[-1] - degs[0]


@given(polys(nonzero=True))
def test_unit_normalization(p):
    n = normalize_unit(p)
    lead = n.sorted_terms()[0][1]
    assert lead.re > 0 and lead.im >= 0
    assert normalize_unit(n) == n


def test_verdict_json_shape():
    d = check_theorem_main([P("x1 - 1"), P("x1 + 1")]).to_dict()
    assert d["theorem"] == Theorem.MAIN.value
    assert (d["constant"], d["lhs_sq"], d["rhs_sq"], d["ratio"]) == ("2", "3", "4", "3/2")
    assert d["witness"] == ["x1 - 1", "x1 + 1"]
