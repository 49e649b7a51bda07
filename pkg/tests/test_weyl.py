from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from c2v.arith import ScalarMode
from c2v.corpus import Corpus, y012_ring
from c2v.weyl import (
    EngineLimits,
    PBWMonomial,
    PBWVector,
    ResourceLimitError,
    WeylModule,
    W2,
    W3,
    current_state,
    e_power,
    from_yz,
    reduce_c2,
    singular_vector,
    state,
    to_yz,
    vacuum,
    zero_mode_oracle,
)
from c2v.weyl.states import RangeError


def test_pbw_monomial_blocks_are_ordered():
    with pytest.raises(ValueError):
        PBWMonomial(e_modes=(1, 2))
    with pytest.raises(ValueError):
        PBWMonomial(h_modes=(0,))
    mono = PBWMonomial((2,), (1, 1), ())
    assert mono.weight == 4
    assert mono.charge == 4
    assert mono.notation() == "h(-2)e(-1)^21"


def test_central_term(engine_sym, sym):
    v = engine_sym.current_mode("e", 1, current_state(sym, "f", 1))
    assert v == vacuum(sym).scale(sym.k)


def test_annihilation_below_vacuum(weyl2):
    mode = ScalarMode.concrete(2)
    assert not weyl2.current_mode("h", 0, vacuum(mode))
    assert not weyl2.current_mode("e", 3, e_power(mode, 2))


def test_straightening_of_f0_on_e_squared(weyl2):
    mode = weyl2.mode
    v = weyl2.current_mode("f", 0, e_power(mode, 2))
    expected = state(mode, [(-2, (1,), (1,), ()), (2, (), (2,), ())])
    assert v == expected


def test_charge_is_read_by_h0(weyl2):
    mode = weyl2.mode
    v = e_power(mode, 3)
    assert weyl2.current_mode("h", 0, v) == v.scale(6)


def test_vacuum_mode_is_identity(engine_sym, sym):
    v = W3(sym)
    assert engine_sym.vector_mode(vacuum(sym), -1, v) == v


def test_current_vector_modes_agree_with_current_modes(engine_sym, sym):
    v = e_power(sym, 2)
    for n in range(-2, 3):
        assert engine_sym.vector_mode(current_state(sym, "f", 1), n, v) == (
            engine_sym.current_mode("f", n, v)
        )


def test_weight_cap_raises():
    mode = ScalarMode.concrete(2)
    engine = WeylModule(mode, EngineLimits(max_weight=2))
    with pytest.raises(ResourceLimitError):
        engine.current_mode("e", -3, vacuum(mode))


def test_unknown_current_is_rejected(weyl2):
    with pytest.raises(ValueError):
        weyl2.current_mode("x", 0, vacuum(weyl2.mode))


@pytest.mark.parametrize(
    "n, s, expected",
    [
        (1, 0, {(0, 1, 0): 1}),
        (1, 1, {(1, 0, 0): -1}),
        (1, 2, {(0, 0, 1): -2}),
        (2, 2, {(2, 0, 0): 2, (0, 1, 1): -4}),
    ],
)
def test_zero_mode_oracle(weyl2, n, s, expected):
    result = zero_mode_oracle(n, s, weyl2.mode, weyl2)
    assert result.terms == {e: Fraction(c) for e, c in expected.items()}


def test_zero_mode_oracle_range(weyl2):
    with pytest.raises(RangeError):
        zero_mode_oracle(1, 3, weyl2.mode, weyl2)


def test_singular_vector_at_level_one():
    mode = ScalarMode.concrete(1)
    ring = y012_ring(mode)
    y0, y1, y2 = ring.gens()
    assert reduce_c2(singular_vector(1)) == 2 * y0**2 - 4 * y1 * y2


def test_singular_vector_respects_cap():
    with pytest.raises(ResourceLimitError):
        singular_vector(9, cap=8)


def test_generators_reduce_to_their_c2_images(sym):
    corpus = Corpus(sym)
    assert to_yz(reduce_c2(W3(sym))) == corpus["Wbar3"]
    assert to_yz(reduce_c2(W2(sym))) == corpus["Wbar2"]


def test_w3_is_charge_neutral(engine_sym, sym):
    w3 = W3(sym)
    assert not engine_sym.current_mode("h", 0, w3)
    assert not engine_sym.current_mode("h", 1, w3)
    assert engine_sym.cache_size() > 0


def test_to_yz_rejects_charged_terms(sym):
    y0, y1, y2 = y012_ring(sym).gens()
    with pytest.raises(ValueError):
        to_yz(y1)


def test_yz_coordinates_round_trip(sym):
    corpus = Corpus(sym)
    wbar3 = corpus["Wbar3"]
    assert to_yz(from_yz(wbar3)) == wbar3
    image = reduce_c2(W2(sym))
    assert from_yz(to_yz(image)) == image


MODES = [ScalarMode.symbolic(), ScalarMode.concrete(5)]
ENGINES = {mode: WeylModule(mode, validate=True) for mode in MODES}
F0_ACTIONS = {mode: Corpus(mode)["f0_op"] for mode in MODES}


@st.composite
def pbw_monomials(draw, max_weight=3):
    budget = max_weight
    blocks = ([], [], [])
    for _ in range(draw(st.integers(min_value=0, max_value=max_weight))):
        if not budget:
            break
        depth = draw(st.integers(min_value=1, max_value=budget))
        blocks[draw(st.integers(min_value=0, max_value=2))].append(depth)
        budget -= depth
    return PBWMonomial(*(tuple(sorted(b, reverse=True)) for b in blocks))


@st.composite
def pbw_vectors(draw, mode):
    terms = {}
    for _ in range(draw(st.integers(min_value=1, max_value=2))):
        terms[draw(pbw_monomials()).ops] = draw(st.integers(min_value=-3, max_value=3))
    return PBWVector(mode, terms)


def vector_pairs():
    return st.sampled_from(MODES).flatmap(
        lambda mode: st.tuples(pbw_vectors(mode), pbw_vectors(mode))
    )


@settings(max_examples=25, deadline=None)
@given(vector_pairs())
def test_minus_one_product_reduces_to_polynomial_product(pair):
    u, v = pair
    engine = ENGINES[u.mode]
    assert reduce_c2(engine.vector_mode(u, -1, v)) == reduce_c2(u) * reduce_c2(v)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(MODES).flatmap(pbw_vectors))
def test_f_zero_acts_as_derivation_on_the_c2_image(v):
    engine = ENGINES[v.mode]
    lhs = reduce_c2(engine.current_mode("f", 0, v))
    assert lhs == F0_ACTIONS[v.mode](reduce_c2(v))
