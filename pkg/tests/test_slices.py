import pytest

from c2v.corpus import t_ring, yz_ring
from c2v.formulas import CODIM_FORMULAS, DIMENSION_FORMULAS, dim_syzygy
from c2v.slices import (
    StabilizationError,
    WeightMismatchError,
    contains,
    contains_slice,
    full_slice,
    kernel_slice,
    monomial_slice,
    span_slice,
)

K = 5
CAP = 2 * K + 6


@pytest.mark.parametrize("space", sorted(DIMENSION_FORMULAS))
def test_slice_dimensions_match_formulas(ideals5, space):
    formula = DIMENSION_FORMULAS[space]
    assert ideals5.dims(space, CAP) == [formula(K, n) for n in range(CAP + 1)]


@pytest.mark.parametrize("sub, ambient", sorted(CODIM_FORMULAS))
def test_codimensions_match_formulas(ideals5, sub, ambient):
    result = ideals5.codim(sub, ambient, CAP)
    assert result.total == CODIM_FORMULAS[(sub, ambient)](K)
    assert result.window == (CAP - 2, CAP)


def test_codimension_needs_a_stable_window(ideals5):
    with pytest.raises(StabilizationError):
        ideals5.codim("J", "C[y,z]", K + 3)


def test_membership_certificate_and_witness(ideals5, corpus5):
    g2 = corpus5["g2"]
    found = contains(ideals5.algebra(2), g2)
    assert found.member
    assert len(found.coefficients) == 1

    y, z = ideals5.ring.gens()
    missing = contains(ideals5.algebra(2), y**2)
    assert not missing.member
    assert missing.witness == ((0, 1), 10)


def test_membership_rejects_wrong_weight(ideals5):
    y, _ = ideals5.ring.gens()
    with pytest.raises(WeightMismatchError):
        contains(ideals5.algebra(2), y**3)


def test_generators_of_j_lie_in_j(ideals5):
    assert contains(ideals5.J(K + 1), ideals5.f(0)).member
    assert contains(ideals5.J(K + 2), ideals5.f(1)).member
    assert contains_slice(ideals5.I(2, 12), ideals5.J_cap_A(12))


def test_intersection_at_lowest_weight(ideals5):
    cap = ideals5.J_cap_A(K + 1)
    assert cap.dim == 1
    assert cap.same_space(span_slice([ideals5.f(0)]))


def test_syzygies_start_above_twice_the_level(ideals5):
    assert ideals5.syzygies(2 * K + 2).dim == 0
    for n in range(2 * K + 3, 2 * K + 7):
        assert ideals5.syzygies(n).dim == dim_syzygy(K, n)
    ((a0, a1),) = ideals5.syzygies(2 * K + 3).pairs()
    assert a0 * ideals5.f(0) + a1 * ideals5.f(1) == ideals5.ring.zero()


def test_relation_kernel_weights(k5, corpus5):
    images = corpus5.polys("g2", "g3", "g4", "g5")
    domain = t_ring(k5)
    assert kernel_slice(domain, images, 7).dim == 0
    assert kernel_slice(domain, images, 8).dim == 1
    assert kernel_slice(domain, images, 10).dim == 2


def test_full_slice_is_whole_space(yz5):
    assert full_slice(yz5, 6).dim == 4
    assert full_slice(yz5, -1).dim == 0


def test_monomial_slice_is_lex_descending(k5):
    assert monomial_slice(yz_ring(k5), 5) == [(5, 0), (3, 1), (1, 2)]
    assert monomial_slice(yz_ring(k5), 0) == [(0, 0)]
