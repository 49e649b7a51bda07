"""Dense exact matrices over ℚ or ℚ(k), eliminated with sympy's DomainMatrix."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Set, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from c2v.arith import (
    K_DOMAIN,
    PoleError,
    RatFuncK,
    Scalar,
    ScalarMode,
    fraction_to_qq,
    instantiate_k,
    qq_to_fraction,
)

logger = logging.getLogger(__name__)


class DimensionMismatchError(ValueError):
    """Raised when matrix or vector shapes do not agree."""


@dataclass(frozen=True)
class ExactMatrix:
    """Rectangular grid of canonical scalars; ``symbolic`` selects ℚ(k) over ℚ."""

    rows: int
    cols: int
    entries: Tuple[Tuple[Scalar, ...], ...]
    symbolic: bool = False

    @classmethod
    def from_rows(
        cls,
        rows: Sequence[Sequence],
        cols: Optional[int] = None,
        symbolic: bool = False,
    ) -> "ExactMatrix":
        coerce = ScalarMode.symbolic().coerce if symbolic else _as_fraction
        grid = []
        for row in rows:
            if cols is None:
                cols = len(row)
            if len(row) != cols:
                raise DimensionMismatchError(
                    f"ragged matrix: expected {cols} columns, got {len(row)}"
                )
            grid.append(tuple(coerce(x) for x in row))
        return cls(len(grid), cols or 0, tuple(grid), symbolic)

    @classmethod
    def identity(cls, n: int, symbolic: bool = False) -> "ExactMatrix":
        return cls.from_rows(
            [[1 if i == j else 0 for j in range(n)] for i in range(n)], n, symbolic
        )

    @property
    def domain(self):
        return K_DOMAIN if self.symbolic else QQ

    def row(self, i: int) -> Tuple[Scalar, ...]:
        return self.entries[i]

    def to_domain_matrix(self) -> DomainMatrix:
        if self.symbolic:
            data = [[x.to_field() for x in row] for row in self.entries]
        else:
            data = [[fraction_to_qq(x) for x in row] for row in self.entries]
        return DomainMatrix(data, (self.rows, self.cols), self.domain)

    @classmethod
    def from_domain_matrix(cls, dm: DomainMatrix, symbolic: bool) -> "ExactMatrix":
        rows, cols = dm.shape
        convert = RatFuncK.from_field if symbolic else qq_to_fraction
        grid = tuple(tuple(convert(x) for x in row) for row in dm.to_list())
        return cls(rows, cols, grid, symbolic)

    def instantiate(self, k0: int) -> "ExactMatrix":
        if not self.symbolic:
            return self
        grid = tuple(tuple(instantiate_k(x, k0) for x in row) for row in self.entries)
        return ExactMatrix(self.rows, self.cols, grid, False)

    def stack(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.cols or self.symbolic != other.symbolic:
            raise DimensionMismatchError(
                f"cannot stack {self.rows}x{self.cols} on {other.rows}x{other.cols}"
            )
        return ExactMatrix(
            self.rows + other.rows, self.cols, self.entries + other.entries, self.symbolic
        )

    def take_rows(self, indices: Iterable[int]) -> "ExactMatrix":
        picked = tuple(self.entries[i] for i in indices)
        return ExactMatrix(len(picked), self.cols, picked, self.symbolic)

    def take_cols(self, indices: Sequence[int]) -> "ExactMatrix":
        picked = tuple(tuple(row[j] for j in indices) for row in self.entries)
        return ExactMatrix(self.rows, len(indices), picked, self.symbolic)

    def transpose(self) -> "ExactMatrix":
        grid = tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols))
        return ExactMatrix(self.cols, self.rows, grid, self.symbolic)

    def combine(self, coefficients: Sequence[Scalar]) -> Tuple[Scalar, ...]:
        """Return ``coefficients · self`` as a row vector."""
        if len(coefficients) != self.rows:
            raise DimensionMismatchError(
                f"{len(coefficients)} coefficients for {self.rows} rows"
            )
        zero = RatFuncK() if self.symbolic else Fraction(0)
        out = [zero] * self.cols
        for c, row in zip(coefficients, self.entries):
            if not c:
                continue
            for j, x in enumerate(row):
                if x:
                    out[j] = out[j] + c * x
        return tuple(out)


def _as_fraction(x) -> Fraction:
    if isinstance(x, RatFuncK):
        return x.constant()
    return Fraction(x)


@dataclass(frozen=True)
class RrefResult:
    rank: int
    pivot_columns: Tuple[int, ...]
    reduced: ExactMatrix

    def basis(self) -> ExactMatrix:
        """The nonzero rows of the reduced matrix."""
        return self.reduced.take_rows(range(self.rank))


def rref(m: ExactMatrix) -> RrefResult:
    """Reduced row echelon form, rank and pivot columns of ``m``.

    Rational matrices are eliminated fraction-free; ℚ(k) matrices by
    Gauss-Jordan over the field.
    """
    if m.rows == 0 or m.cols == 0:
        zero = RatFuncK() if m.symbolic else Fraction(0)
        grid = tuple((zero,) * m.cols for _ in range(m.rows))
        return RrefResult(0, (), ExactMatrix(m.rows, m.cols, grid, m.symbolic))
    method = "GJ" if m.symbolic else "CD"
    reduced, pivots = m.to_domain_matrix().rref(method=method)
    result = ExactMatrix.from_domain_matrix(reduced, m.symbolic)
    logger.debug(f"rref {m.rows}x{m.cols} -> rank {len(pivots)}")
    return RrefResult(len(pivots), tuple(pivots), result)


def left_kernel(m: ExactMatrix) -> ExactMatrix:
    """Rows spanning ``{x : x · m = 0}`` (a ``k x m.rows`` matrix)."""
    if m.rows == 0:
        return ExactMatrix(0, 0, (), m.symbolic)
    if m.cols == 0:
        return ExactMatrix.identity(m.rows, m.symbolic)
    null = m.to_domain_matrix().transpose().nullspace()
    kernel = ExactMatrix.from_domain_matrix(null, m.symbolic)
    if kernel.cols != m.rows:
        return ExactMatrix(0, m.rows, (), m.symbolic)
    return kernel


@dataclass(frozen=True)
class SpanMembership:
    """Outcome of :func:`solve_in_span`.

    ``coefficients`` expresses the target in the original rows when it lies in
    their span. Otherwise ``witness`` holds ``(column, value)``: the first
    coordinate of the target left over after reduction by the row space.
    """

    member: bool
    coefficients: Optional[Tuple[Scalar, ...]] = None
    witness: Optional[Tuple[int, Scalar]] = None


def solve_in_span(target: Sequence[Scalar], rows: ExactMatrix) -> SpanMembership:
    """Find ``x`` with ``x · rows = target`` or prove there is none."""
    if len(target) != rows.cols:
        raise DimensionMismatchError(
            f"target has length {len(target)}, rows have {rows.cols} columns"
        )
    coerce = ScalarMode.symbolic().coerce if rows.symbolic else _as_fraction
    target = tuple(coerce(x) for x in target)
    zero = RatFuncK() if rows.symbolic else Fraction(0)
    if not any(target):
        return SpanMembership(True, (zero,) * rows.rows)
    if rows.rows == 0:
        first = next(j for j, x in enumerate(target) if x)
        return SpanMembership(False, witness=(first, target[first]))

    system = rows.transpose()
    augmented = ExactMatrix(
        system.rows,
        system.cols + 1,
        tuple(row + (target[j],) for j, row in enumerate(system.entries)),
        rows.symbolic,
    )
    result = rref(augmented)
    if rows.rows in result.pivot_columns:
        residual = _residual(target, rref(rows))
        first = next(j for j, x in enumerate(residual) if x)
        return SpanMembership(False, witness=(first, residual[first]))

    solution: List[Scalar] = [zero] * rows.rows
    for i, col in enumerate(result.pivot_columns):
        solution[col] = result.reduced.entries[i][-1]
    if rows.combine(solution) != target:
        raise ArithmeticError("span certificate does not reproduce the target")
    return SpanMembership(True, tuple(solution))


def _residual(target: Sequence[Scalar], reduced: RrefResult) -> List[Scalar]:
    out = list(target)
    for i, col in enumerate(reduced.pivot_columns):
        c = out[col]
        if not c:
            continue
        for j, x in enumerate(reduced.reduced.entries[i]):
            if x:
                out[j] = out[j] - c * x
    return out


def charpoly(m: ExactMatrix) -> List[Scalar]:
    """Characteristic polynomial coefficients of a square matrix, leading first."""
    if m.rows != m.cols:
        raise DimensionMismatchError(f"charpoly of a {m.rows}x{m.cols} matrix")
    coeffs = m.to_domain_matrix().charpoly()
    convert = RatFuncK.from_field if m.symbolic else qq_to_fraction
    return [convert(c) for c in coeffs]


def determinant(m: ExactMatrix) -> Scalar:
    if m.rows != m.cols:
        raise DimensionMismatchError(f"determinant of a {m.rows}x{m.cols} matrix")
    if m.rows == 0:
        return RatFuncK(1) if m.symbolic else Fraction(1)
    value = m.to_domain_matrix().det()
    return RatFuncK.from_field(value) if m.symbolic else qq_to_fraction(value)


def exceptional_levels(m: ExactMatrix, candidates: Iterable[int]) -> Set[int]:
    """Levels among ``candidates`` at which instantiating ``m`` may lose rank.

    These are the poles of the entries together with the roots of a
    nonsingular maximal minor found by the symbolic elimination.
    """
    candidates = list(candidates)
    if not m.symbolic:
        return set()
    bad: Set[int] = set()
    for k0 in candidates:
        for row in m.entries:
            try:
                for x in row:
                    instantiate_k(x, k0)
            except PoleError:
                bad.add(k0)
                break
    cols = rref(m).pivot_columns
    rows = rref(m.transpose()).pivot_columns
    if cols:
        minor = determinant(m.take_rows(rows).take_cols(cols))
        for k0 in candidates:
            if k0 in bad:
                continue
            try:
                if instantiate_k(minor, k0) == 0:
                    bad.add(k0)
            except PoleError:
                bad.add(k0)
    return bad


__all__ = [
    "DimensionMismatchError",
    "ExactMatrix",
    "RrefResult",
    "SpanMembership",
    "charpoly",
    "determinant",
    "exceptional_levels",
    "left_kernel",
    "rref",
    "solve_in_span",
]
