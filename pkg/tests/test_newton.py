"""Weight LP and the Newton-polyhedron threshold bound."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pairlab.errors import DomainError, UnitAtOriginError, ZeroPolynomialError
from pairlab.newton import (
    EXACT_IF_NONDEGENERATE,
    WeightLP,
    lct_newton_bound,
    lp_minimize,
    vertex_enum_oracle,
    weight_lp_from_poly,
)
from pairlab.poly import SparsePoly, parse_poly
from pairlab.rational import Rat, rat


def test_cusp_bound():
    nb = lct_newton_bound(parse_poly("x^2 + y^3"))
    assert nb.bound == Rat(5, 6)
    assert nb.certificate == (Rat(1, 2), Rat(1, 3))
    assert nb.exactness == EXACT_IF_NONDEGENERATE


def test_degenerate_square_bound_overestimates():
    # (x + y^2)^2 has threshold 1/2; the polyhedron only sees 3/4
    nb = lct_newton_bound(parse_poly("x^2 + 2*x*y^2 + y^4"))
    assert nb.bound == Rat(3, 4)
    assert nb.certificate == (Rat(1, 2), Rat(1, 4))


def test_smooth_bound_is_capped():
    nb = lct_newton_bound(parse_poly("x + y"))
    assert nb.bound == 1


def test_monomial_bound():
    nb = lct_newton_bound(parse_poly("x^2*y^3"))
    assert nb.bound == Rat(1, 3)


def test_lp_uncapped_value():
    lp = weight_lp_from_poly(parse_poly("x + y"))
    assert lp_minimize(lp).value == 2


def test_rejects_zero_poly():
    with pytest.raises(ZeroPolynomialError):
        weight_lp_from_poly(SparsePoly.zero(2))


def test_rejects_unit():
    with pytest.raises(UnitAtOriginError):
        weight_lp_from_poly(parse_poly("1 + x"))


def test_lp_rejects_zero_support_vector():
    with pytest.raises(UnitAtOriginError):
        WeightLP(2, ((0, 0),))


def test_oracle_limited_to_three_vars():
    lp = WeightLP(4, ((1, 1, 1, 1),))
    with pytest.raises(DomainError):
        vertex_enum_oracle(lp)


def test_oracle_prefers_lex_smallest_tie():
    lp = WeightLP(2, ((3, 0), (1, 1), (0, 3)))
    res = vertex_enum_oracle(lp)
    assert res.value == 1
    assert res.w == (Rat(1, 3), Rat(2, 3))


def test_active_sets():
    lp = WeightLP(2, ((2, 0), (1, 1), (0, 2)))
    res = lp_minimize(lp)
    assert res.value == 1
    assert res.active == frozenset({0, 1, 2})


supports2 = st.lists(
    st.tuples(st.integers(0, 6), st.integers(0, 6)).filter(lambda m: any(m)),
    min_size=1,
    max_size=5,
)
supports3 = st.lists(
    st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4)).filter(
        lambda m: any(m)
    ),
    min_size=1,
    max_size=4,
)


@given(supports2)
def test_simplex_agrees_with_oracle_2vars(support):
    lp = WeightLP(2, tuple(support))
    assert lp_minimize(lp).value == vertex_enum_oracle(lp).value


@given(supports3)
def test_simplex_agrees_with_oracle_3vars(support):
    lp = WeightLP(3, tuple(support))
    assert lp_minimize(lp).value == vertex_enum_oracle(lp).value


@given(supports2)
def test_certificate_is_feasible(support):
    lp = WeightLP(2, tuple(support))
    res = lp_minimize(lp)
    assert all(w >= 0 for w in res.w)
    for m in lp.constraints:
        assert sum(w * e for w, e in zip(res.w, m)) >= 1
    assert sum(res.w, rat(0)) == res.value


@given(supports2, st.integers(2, 5))
def test_dilation_scales_value(support, k):
    lp = WeightLP(2, tuple(support))
    scaled = WeightLP(2, tuple(tuple(k * e for e in m) for m in support))
    assert lp_minimize(scaled).value == lp_minimize(lp).value / k


@given(supports2)
def test_bound_capped_at_one(support):
    f = SparsePoly.zero(2)
    for m in support:
        f = f + SparsePoly.monomial(2, m, rat(1))
    nb = lct_newton_bound(f)
    assert 0 < nb.bound <= 1
    assert nb.bound <= lp_minimize(weight_lp_from_poly(f)).value


@given(supports2)
def test_adding_a_term_never_lowers_the_lp(support):
    lp = WeightLP(2, tuple(support))
    bigger = WeightLP(2, tuple(support) + ((1, 1),))
    assert lp_minimize(bigger).value >= lp_minimize(lp).value
