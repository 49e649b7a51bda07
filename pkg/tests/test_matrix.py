from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from c2v.arith import PoleError, RatFuncK
from c2v.matrix import (
    DimensionMismatchError,
    ExactMatrix,
    charpoly,
    determinant,
    exceptional_levels,
    left_kernel,
    rref,
    solve_in_span,
)

k = RatFuncK.gen()


def test_rref_rank_and_pivots():
    m = ExactMatrix.from_rows([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    result = rref(m)
    assert result.rank == 2
    assert result.pivot_columns == (0, 1)
    assert result.basis().rows == 2
    assert result.reduced.row(0) == (1, 0, 1)
    assert result.reduced.row(1) == (0, 1, 1)


def test_empty_matrix_has_rank_zero():
    assert rref(ExactMatrix(0, 3, ())).rank == 0


def test_ragged_rows_are_rejected():
    with pytest.raises(DimensionMismatchError):
        ExactMatrix.from_rows([[1, 2], [3]])


def test_left_kernel_annihilates():
    m = ExactMatrix.from_rows([[1, 2], [2, 4], [1, 0]])
    kernel = left_kernel(m)
    assert kernel.rows == 1
    assert m.combine(kernel.row(0)) == (0, 0)


def test_left_kernel_of_independent_rows_is_empty():
    kernel = left_kernel(ExactMatrix.identity(3))
    assert kernel.rows == 0


def test_solve_in_span_returns_certificate():
    rows = ExactMatrix.from_rows([[1, 0, 1], [0, 1, 1]])
    found = solve_in_span([2, 3, 5], rows)
    assert found.member
    assert found.coefficients == (2, 3)
    assert rows.combine(found.coefficients) == (2, 3, 5)


def test_solve_in_span_reports_witness():
    rows = ExactMatrix.from_rows([[1, 0, 1], [0, 1, 1]])
    found = solve_in_span([1, 1, 3], rows)
    assert not found.member
    column, value = found.witness
    assert column == 2
    assert value == 1


def test_solve_in_span_symbolic():
    rows = ExactMatrix.from_rows([[k, 1], [1, k]], symbolic=True)
    found = solve_in_span([k**2 - 1, 0], rows)
    assert found.member
    assert rows.combine(found.coefficients) == (k**2 - 1, RatFuncK(0))
    assert found.coefficients == (k, RatFuncK(-1))


def test_charpoly_and_determinant():
    m = ExactMatrix.from_rows([[2, 1], [1, 2]])
    assert charpoly(m) == [1, -4, 3]
    assert determinant(m) == 3
    assert determinant(ExactMatrix(0, 0, ())) == 1


def test_symbolic_determinant():
    m = ExactMatrix.from_rows([[k, 1], [1, k]], symbolic=True)
    assert determinant(m) == k**2 - 1
    assert determinant(m.instantiate(3)) == Fraction(8)


def test_exceptional_levels_find_rank_drops_and_poles():
    m = ExactMatrix.from_rows([[k - 2, 1], [0, RatFuncK(1) / (k - 4)]], symbolic=True)
    assert exceptional_levels(m, range(1, 7)) == {2, 4}
    assert rref(m.instantiate(2)).rank == 1


def test_square_operations_reject_rectangles():
    m = ExactMatrix.from_rows([[1, 2, 3]])
    with pytest.raises(DimensionMismatchError):
        determinant(m)
    with pytest.raises(DimensionMismatchError):
        charpoly(m)


small_matrices = st.integers(min_value=1, max_value=4).flatmap(
    lambda cols: st.lists(
        st.lists(st.integers(min_value=-3, max_value=3), min_size=cols, max_size=cols),
        min_size=1,
        max_size=4,
    )
)


@settings(max_examples=60, deadline=None)
@given(small_matrices)
def test_rref_is_idempotent_and_rank_is_transpose_invariant(rows):
    m = ExactMatrix.from_rows(rows)
    once = rref(m)
    assert rref(once.reduced).reduced == once.reduced
    assert rref(m.transpose()).rank == once.rank
    assert left_kernel(m).rows == m.rows - once.rank


small_ints = st.integers(min_value=-3, max_value=3)
rational_functions = st.one_of(
    small_ints.map(RatFuncK),
    st.builds(lambda a, b: a + b * k, small_ints, small_ints),
    st.builds(lambda a, b, c: (a + b * k) / (k + c), small_ints, small_ints, small_ints),
)
symbolic_matrices = st.integers(min_value=1, max_value=3).flatmap(
    lambda cols: st.lists(
        st.lists(rational_functions, min_size=cols, max_size=cols),
        min_size=1,
        max_size=3,
    )
)


any_matrices = st.one_of(
    small_matrices.map(ExactMatrix.from_rows),
    symbolic_matrices.map(lambda rows: ExactMatrix.from_rows(rows, symbolic=True)),
)


@settings(max_examples=40, deadline=None)
@given(any_matrices, st.data())
def test_rank_is_invariant_under_row_permutation(m, data):
    order = data.draw(st.permutations(range(m.rows)))
    assert rref(m.take_rows(order)).rank == rref(m).rank


@settings(max_examples=30, deadline=None)
@given(symbolic_matrices, st.integers(min_value=1, max_value=8))
def test_instantiation_commutes_with_rank_off_exceptional_levels(rows, k0):
    m = ExactMatrix.from_rows(rows, symbolic=True)
    generic = rref(m).rank
    if k0 in exceptional_levels(m, [k0]):
        try:
            concrete = m.instantiate(k0)
        except PoleError:
            return
        assert rref(concrete).rank <= generic
    else:
        assert rref(m.instantiate(k0)).rank == generic


@settings(max_examples=40, deadline=None)
@given(small_matrices, st.data())
def test_solve_in_span_certificates_are_sound(rows, data):
    m = ExactMatrix.from_rows(rows)
    weights = data.draw(st.lists(small_ints, min_size=m.rows, max_size=m.rows))
    inside = m.combine([Fraction(w) for w in weights])
    found = solve_in_span(inside, m)
    assert found.member
    assert m.combine(found.coefficients) == inside

    target = data.draw(st.lists(small_ints, min_size=m.cols, max_size=m.cols))
    found = solve_in_span(target, m)
    if found.member:
        assert m.combine(found.coefficients) == tuple(Fraction(x) for x in target)
    else:
        column, value = found.witness
        assert value != 0
        assert 0 <= column < m.cols
        stacked = m.stack(ExactMatrix.from_rows([target]))
        assert rref(stacked).rank == rref(m).rank + 1
