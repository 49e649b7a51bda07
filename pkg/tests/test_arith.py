import pickle
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.polys.domains import QQ

from c2v.arith import (
    PoleError,
    PreconditionError,
    RatFuncK,
    ScalarDivisionError,
    ScalarMode,
    instantiate_k,
    scalar_arith,
)

k = RatFuncK.gen()

small_ints = st.integers(min_value=-6, max_value=6)


@st.composite
def ratfuncs(draw):
    """(a k^2 + b k + c) / (k + d) with d >= 0 so k0 >= 1 never hits a pole."""
    a, b, c = draw(small_ints), draw(small_ints), draw(small_ints)
    d = draw(st.integers(min_value=0, max_value=5))
    return (a * k**2 + b * k + c) / (k + d)


def test_canonical_form_cancels_common_factors():
    f = (k**2 - 1) / (k - 1)
    assert f == k + 1
    assert f.denom == RatFuncK(1).denom


def test_denominator_is_monic():
    f = RatFuncK(1) / (2 * k + 4)
    assert f == (RatFuncK(1) / 2) / (k + 2)
    assert f.denom.LC == QQ.one


def test_constants_compare_with_fractions():
    assert RatFuncK(Fraction(3, 4)) == Fraction(3, 4)
    assert RatFuncK(2).is_constant
    assert not k.is_constant
    assert RatFuncK(Fraction(3, 4)).constant() == Fraction(3, 4)
    with pytest.raises(PreconditionError):
        k.constant()


def test_division_by_zero_is_a_scalar_error():
    with pytest.raises(ScalarDivisionError):
        k / RatFuncK(0)
    with pytest.raises(ScalarDivisionError):
        scalar_arith(Fraction(1), Fraction(0), "div")


def test_instantiate_at_level_and_pole():
    f = (k - 1) / (k + 2)
    assert instantiate_k(f, 5) == Fraction(4, 7)
    with pytest.raises(PoleError):
        instantiate_k(RatFuncK(1) / (k - 3), 3)


@pytest.mark.parametrize("bad", [0, -2, Fraction(1, 2), True])
def test_instantiate_rejects_non_levels(bad):
    with pytest.raises(PreconditionError):
        instantiate_k(k, bad)


def test_scalar_arith_keeps_fractions_rational():
    assert scalar_arith(Fraction(1, 2), Fraction(1, 3), "add") == Fraction(5, 6)
    assert isinstance(scalar_arith(1, 2, "mul"), Fraction)
    with pytest.raises(PreconditionError):
        scalar_arith(1, 2, "pow")


def test_scalar_mode_coerces():
    concrete = ScalarMode.concrete(5)
    assert concrete.k == Fraction(5)
    assert concrete.coerce((k + 1) / 2) == 3
    symbolic = ScalarMode.symbolic()
    assert symbolic.coerce(3) == RatFuncK(3)
    assert symbolic.label() == "symbolic"
    assert concrete.label() == "k=5"
    with pytest.raises(PreconditionError):
        ScalarMode.concrete(0)


def test_pickle_round_trip():
    f = (3 * k**2 - 1) / (k + 7)
    assert pickle.loads(pickle.dumps(f)) == f


@settings(max_examples=60, deadline=None)
@given(ratfuncs(), ratfuncs(), st.integers(min_value=1, max_value=9))
def test_instantiation_is_a_ring_homomorphism(f, g, k0):
    assert instantiate_k(f + g, k0) == instantiate_k(f, k0) + instantiate_k(g, k0)
    assert instantiate_k(f * g, k0) == instantiate_k(f, k0) * instantiate_k(g, k0)


@settings(max_examples=60, deadline=None)
@given(ratfuncs(), ratfuncs())
def test_canonical_form_is_unique(f, g):
    assert (f + g) - g == f
    if g:
        assert (f * g) / g == f
