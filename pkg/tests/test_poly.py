import pickle
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement

from c2v.arith import K_DOMAIN, RatFuncK, ScalarMode
from c2v.corpus import Corpus, t_ring, yz_ring
from c2v.poly import (
    ArityError,
    DerivationError,
    DerivationSpec,
    RingMismatchError,
    WPoly,
    derive,
    homogeneous_parts,
    jacobian,
    monomials_of_weight,
    poly_arith,
    product_of_powers,
    substitute,
    transport_derivation,
    weight_component,
)

K5 = ScalarMode.concrete(5)
SYM = ScalarMode.symbolic()
YZ5 = yz_ring(K5)
MODES = [K5, SYM]
CORPORA = {mode: Corpus(mode) for mode in MODES}

k = RatFuncK.gen()
coefficients = st.integers(min_value=-4, max_value=4)
SCALARS = {
    K5: coefficients,
    SYM: st.builds(lambda a, b, c: (a + b * k) / (k + c), coefficients, coefficients, st.integers(1, 3)),
}


@st.composite
def yz_polys(draw, max_weight=4, mode=K5):
    """Random polynomials in y, z of weight at most ``max_weight``."""
    ring = yz_ring(mode)
    terms = {}
    for n in range(max_weight + 1):
        for exps in monomials_of_weight(ring, n):
            terms[exps] = draw(SCALARS[mode])
    return WPoly(ring, terms)


@st.composite
def homogeneous_yz_polys(draw, mode):
    ring = yz_ring(mode)
    n = draw(st.integers(min_value=0, max_value=5))
    monomials = monomials_of_weight(ring, n)
    coeffs = draw(
        st.lists(SCALARS[mode], min_size=len(monomials), max_size=len(monomials)).filter(any)
    )
    return WPoly(ring, dict(zip(monomials, coeffs))), n


def poly_pairs(max_weight):
    return st.sampled_from(MODES).flatmap(
        lambda mode: st.tuples(yz_polys(max_weight, mode), yz_polys(max_weight, mode))
    )


def test_zero_coefficients_are_dropped():
    p = WPoly(YZ5, {(1, 0): 0, (0, 1): 2})
    assert len(p) == 1
    assert p.coefficient((1, 0)) == 0
    assert p.coefficient((0, 1)) == 2


def test_iteration_is_lex_descending():
    y, z = YZ5.gens()
    p = z + y**2 + 3 * y * z
    assert [exps for exps, _ in p] == [(2, 0), (1, 1), (0, 1)]


def test_weights_and_homogeneity():
    y, z = YZ5.gens()
    assert (y**2 - 10 * z).weight() == 2
    assert YZ5.zero().weight() is None
    with pytest.raises(ValueError):
        (y + z).weight()
    parts = homogeneous_parts(y + z + y * z)
    assert sorted(parts) == [1, 2, 3]
    assert weight_component(y + z + y * z, 3) == y * z


def test_monomials_of_weight():
    assert monomials_of_weight(YZ5, 4) == [(4, 0), (2, 1), (0, 2)]
    assert monomials_of_weight(YZ5, -1) == []
    assert len(monomials_of_weight(t_ring(K5), 10)) == 7


def test_poly_arith_dispatches_ring_operations():
    y, z = YZ5.gens()
    assert poly_arith(y, z, "add") == y + z
    assert poly_arith(y, z, "sub") == y - z
    assert poly_arith(y, z, "mul") == y * z
    with pytest.raises(ValueError):
        poly_arith(y, z, "div")
    with pytest.raises(RingMismatchError):
        poly_arith(y, t_ring(K5).gens()[0], "add")


@pytest.mark.parametrize("mode, domain", [(K5, QQ), (SYM, K_DOMAIN)])
def test_polynomials_live_in_sympy_rings(mode, domain):
    ring = yz_ring(mode)
    y, z = ring.gens()
    p = 3 * y**2 - z / 2
    assert isinstance(p.poly, PolyElement)
    assert p.poly.ring.domain == domain
    assert p.partial("y") == 6 * y
    assert pickle.loads(pickle.dumps(p)) == p


def test_ring_mismatch_is_rejected():
    y5, _ = YZ5.gens()
    ysym, _ = yz_ring(ScalarMode.symbolic()).gens()
    with pytest.raises(RingMismatchError):
        y5 + ysym


def test_partial_and_evaluate():
    y, z = YZ5.gens()
    p = y**3 * z - 2 * z**2
    assert p.partial("y") == 3 * y**2 * z
    assert p.partial("z") == y**3 - 4 * z
    assert p.evaluate([Fraction(1), Fraction(2)]) == Fraction(-6)
    with pytest.raises(ArityError):
        p.evaluate([1])


def test_jacobian_of_generators():
    y, z = YZ5.gens()
    assert jacobian(y, z, "y", "z") == 1
    assert jacobian(y**2, z, "y", "z") == 2 * y


def test_derivation_maps_g2_to_multiple_of_g3(sym):
    corpus = Corpus(sym)
    d = corpus["D"]
    g2, g3 = corpus.polys("g2", "g3")
    assert d(g2) == 2 * (sym.k + 2) * g3


def test_derivation_images_must_have_shifted_weight():
    y, z = YZ5.gens()
    with pytest.raises(DerivationError):
        DerivationSpec(YZ5, (y, z), 1, "bad")
    with pytest.raises(ArityError):
        DerivationSpec(YZ5, (y,), 0, "short")


def test_scaled_derivation():
    d = Corpus(K5)["D"]
    y, z = YZ5.gens()
    assert d.scaled(-30)(z) == -30 * 19 * y * z


def test_substitute_into_other_ring():
    y, z = YZ5.gens()
    t = t_ring(K5)
    t2, t3, t4, t5 = t.gens()
    g = t2**2 + t5
    assert substitute(g, (y**2, y**3, z**2, y * z**2)) == y**4 + y * z**2


def test_identity_transport_is_trivial():
    d = Corpus(K5)["D"]
    y, z = YZ5.gens()
    moved = transport_derivation(d, (y, z), (y, z), "same")
    assert moved.images == d.images
    assert moved.name == "same"


def test_product_of_powers():
    y, z = YZ5.gens()
    assert product_of_powers([y, z], [2, 1]) == y**2 * z
    assert product_of_powers([y, z], [0, 0]) == YZ5.one()


@settings(max_examples=30, deadline=None)
@given(poly_pairs(4))
def test_derivation_obeys_leibniz(pair):
    f, g = pair
    d = CORPORA[f.ring.mode]["D"]
    assert derive(d, f * g) == derive(d, f) * g + f * derive(d, g)


@settings(max_examples=30, deadline=None)
@given(poly_pairs(3))
def test_substitution_is_multiplicative(pair):
    f, g = pair
    y, z = f.ring.gens()
    images = (y + z, y**2 - 3 * z)
    assert substitute(f * g, images) == substitute(f, images) * substitute(g, images)


@settings(max_examples=30, deadline=None)
@given(
    st.sampled_from(MODES).flatmap(
        lambda mode: st.tuples(homogeneous_yz_polys(mode), homogeneous_yz_polys(mode))
    )
)
def test_weights_add_and_derivations_shift_weight(pair):
    (f, n), (g, m) = pair
    assert f.weight() == n
    assert (f * g).weight() == n + m
    for name in ("D", "E"):
        d = CORPORA[f.ring.mode][name]
        image = derive(d, f)
        assert image.weight() in (None, n + d.weight_shift)
