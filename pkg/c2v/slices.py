"""Weight-slice linear algebra in weighted polynomial rings.

A slice is the weight-n homogeneous part of a graded subspace, stored as the
row-reduced coordinate matrix over the weight-n monomials of the ambient ring.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from c2v.arith import RatFuncK, Scalar
from c2v.matrix import ExactMatrix, left_kernel, rref, solve_in_span
from c2v.poly import Exponent, WPoly, WRing, monomials_of_weight, substitute

logger = logging.getLogger(__name__)


class WeightMismatchError(ValueError):
    """Raised when a polynomial does not have the weight a slice expects."""


class NonContainmentError(ValueError):
    """Raised when a sub-slice is not contained in its ambient slice."""


class StabilizationError(ValueError):
    """Raised when a graded codimension has not stabilized below the cap."""


def monomial_slice(ring: WRing, n: int) -> List[Exponent]:
    """Monomials of weighted degree ``n`` in lexicographically descending order."""
    return monomials_of_weight(ring, n)


def _zero(ring: WRing) -> Scalar:
    return RatFuncK() if ring.mode.is_symbolic else Fraction(0)


def coordinates(p: WPoly, ambient: Sequence[Exponent], n: int) -> Tuple[Scalar, ...]:
    """Coordinates of a weight-``n`` polynomial over ``ambient``."""
    ring = p.ring
    index = {e: i for i, e in enumerate(ambient)}
    out = [_zero(ring)] * len(ambient)
    for exps, c in p.terms.items():
        if ring.weight_of(exps) != n:
            raise WeightMismatchError(
                f"term of weight {ring.weight_of(exps)} in a weight-{n} slice"
            )
        out[index[exps]] = c
    return tuple(out)


@dataclass(frozen=True)
class SliceBasis:
    """Row-reduced basis of a weight-n slice.

    ``ambient_monomials`` indexes the columns. For slices of pairs (syzygies)
    the columns are ``(slot, exponent)`` labels and ``slots`` is 2.
    """

    ring: WRing
    weight: int
    ambient_monomials: Tuple
    rows: ExactMatrix
    slots: int = 1

    @property
    def dim(self) -> int:
        return self.rows.rows

    def polys(self) -> List[WPoly]:
        if self.slots != 1:
            raise ValueError("slice of pairs has no single-polynomial rows")
        return [self._poly(row, self.ambient_monomials) for row in self.rows.entries]

    def pairs(self) -> List[Tuple[WPoly, ...]]:
        out = []
        for row in self.rows.entries:
            parts = []
            for slot in range(self.slots):
                cols = [i for i, (s, _) in enumerate(self.ambient_monomials) if s == slot]
                parts.append(
                    WPoly(
                        self.ring,
                        {self.ambient_monomials[i][1]: row[i] for i in cols},
                    )
                )
            out.append(tuple(parts))
        return out

    def _poly(self, row, monomials) -> WPoly:
        return WPoly(self.ring, {e: c for e, c in zip(monomials, row)})

    def coordinates(self, p: WPoly) -> Tuple[Scalar, ...]:
        return coordinates(p, self.ambient_monomials, self.weight)

    def same_space(self, other: "SliceBasis") -> bool:
        return self.ambient_monomials == other.ambient_monomials and self.rows == other.rows


def _basis_from_vectors(
    ring: WRing, n: int, ambient: Tuple, vectors: List[Tuple[Scalar, ...]], slots: int = 1
) -> SliceBasis:
    symbolic = ring.mode.is_symbolic
    matrix = ExactMatrix.from_rows(vectors, len(ambient), symbolic=symbolic)
    reduced = rref(matrix).basis()
    return SliceBasis(ring, n, ambient, reduced, slots)


def span_slice(
    polys: Sequence[WPoly], n: Optional[int] = None, ring: Optional[WRing] = None
) -> SliceBasis:
    """Row-reduced basis of the span of weight-``n`` polynomials."""
    if ring is None:
        if not polys:
            raise ValueError("span_slice of no polynomials needs a ring")
        ring = polys[0].ring
    if n is None:
        weights = {w for p in polys for w in p.weights()}
        if len(weights) > 1:
            raise WeightMismatchError(f"mixed weights {sorted(weights)}")
        if not weights:
            raise ValueError("span_slice of zero polynomials needs a weight")
        n = weights.pop()
    ambient = tuple(monomial_slice(ring, n))
    vectors = []
    for p in polys:
        if p.ring != ring:
            raise WeightMismatchError("span_slice inputs live in different rings")
        vectors.append(coordinates(p, ambient, n))
    return _basis_from_vectors(ring, n, ambient, vectors)


def full_slice(ring: WRing, n: int) -> SliceBasis:
    ambient = tuple(monomial_slice(ring, n))
    return SliceBasis(ring, n, ambient, ExactMatrix.identity(len(ambient), ring.mode.is_symbolic))


class ProductCache:
    """Products of generator powers, each built from a cached smaller product."""

    def __init__(self, generators: Sequence[WPoly]) -> None:
        self.generators = tuple(generators)
        self._products: Dict[Exponent, WPoly] = {}

    def product(self, exps: Exponent) -> WPoly:
        if exps in self._products:
            return self._products[exps]
        if not any(exps):
            value = self.generators[0].ring.one()
        else:
            i = next(i for i, e in enumerate(exps) if e)
            lowered = exps[:i] + (exps[i] - 1,) + exps[i + 1 :]
            value = self.product(lowered) * self.generators[i]
        self._products[exps] = value
        return value


def subalgebra_slice(
    generators: Sequence[WPoly], n: int, cache: Optional[ProductCache] = None
) -> SliceBasis:
    """Weight-``n`` part of the subalgebra generated by homogeneous ``generators``."""
    if not generators:
        raise ValueError("subalgebra_slice needs generators")
    ring = generators[0].ring
    weights = []
    for g in generators:
        if g.ring != ring:
            raise WeightMismatchError("generators live in different rings")
        w = g.weight()
        if w is None or w < 1:
            raise WeightMismatchError(f"generator {g} is not homogeneous of positive weight")
        weights.append(w)
    cache = cache or ProductCache(generators)
    index_ring = WRing(tuple(f"g{i}" for i in range(len(weights))), tuple(weights), ring.mode)
    products = [cache.product(e) for e in monomial_slice(index_ring, n)]
    basis = span_slice(products, n, ring)
    logger.debug(f"subalgebra slice n={n}: {len(products)} products, dim {basis.dim}")
    return basis


def module_slice(
    multiplier_slices: Sequence[SliceBasis], anchors: Sequence[WPoly], n: int
) -> SliceBasis:
    """Weight-``n`` part of ``Σ_i (multiplier_slices[i]) · anchors[i]``."""
    if len(multiplier_slices) != len(anchors):
        raise ValueError("one multiplier slice per anchor is required")
    ring: Optional[WRing] = None
    products: List[WPoly] = []
    for basis, anchor in zip(multiplier_slices, anchors):
        ring = ring or anchor.ring
        w = anchor.weight()
        if w is None:
            continue
        if basis.weight + w != n:
            raise WeightMismatchError(
                f"multiplier weight {basis.weight} + anchor weight {w} != {n}"
            )
        products.extend(p * anchor for p in basis.polys())
    if ring is None:
        raise ValueError("module_slice needs at least one anchor")
    return span_slice(products, n, ring)


@dataclass(frozen=True)
class Membership:
    member: bool
    coefficients: Optional[Tuple[Scalar, ...]] = None
    witness: Optional[Tuple[Exponent, Scalar]] = None


def contains(basis: SliceBasis, p: WPoly) -> Membership:
    """Whether ``p`` lies in the slice, with coefficient certificate or pivot witness."""
    if p and p.weight() != basis.weight:
        raise WeightMismatchError(f"weight {p.weight()} polynomial vs slice weight {basis.weight}")
    target = basis.coordinates(p)
    found = solve_in_span(target, basis.rows)
    if found.member:
        return Membership(True, found.coefficients)
    column, value = found.witness
    return Membership(False, witness=(basis.ambient_monomials[column], value))


def contains_slice(sub: SliceBasis, ambient: SliceBasis) -> bool:
    return all(contains(ambient, p).member for p in sub.polys())


def intersect(a: SliceBasis, b: SliceBasis) -> SliceBasis:
    """Intersection of two slices of the same ring and weight."""
    if a.ambient_monomials != b.ambient_monomials:
        raise WeightMismatchError("intersect needs slices over the same monomials")
    if a.dim == 0 or b.dim == 0:
        return SliceBasis(a.ring, a.weight, a.ambient_monomials, a.rows.take_rows(()))
    kernel = left_kernel(a.rows.stack(b.rows))
    vectors = [a.rows.combine(row[: a.dim]) for row in kernel.entries]
    return _basis_from_vectors(a.ring, a.weight, a.ambient_monomials, vectors)


def syzygy_slice(anchors: Sequence[WPoly], n: int) -> SliceBasis:
    """Relation tuples ``(a_0, a_1, ...)`` with ``Σ a_i anchors[i] = 0`` in weight ``n``.

    ``a_i`` has weight ``n - wt(anchors[i])``; the result is a slice of
    tuples whose columns are labelled ``(slot, monomial)``.
    """
    if not anchors:
        raise ValueError("syzygy_slice needs anchors")
    ring = anchors[0].ring
    labels: List[Tuple[int, Exponent]] = []
    images: List[Tuple[Scalar, ...]] = []
    target = tuple(monomial_slice(ring, n))
    for slot, anchor in enumerate(anchors):
        w = anchor.weight()
        for mono in monomial_slice(ring, n - w):
            labels.append((slot, mono))
            images.append(coordinates(ring.monomial(mono) * anchor, target, n))
    ambient = tuple(labels)
    if not labels:
        return SliceBasis(ring, n, ambient, ExactMatrix(0, 0, (), ring.mode.is_symbolic), len(anchors))
    image_matrix = ExactMatrix.from_rows(images, len(target), symbolic=ring.mode.is_symbolic)
    kernel = left_kernel(image_matrix)
    return _basis_from_vectors(ring, n, ambient, list(kernel.entries), slots=len(anchors))


def pair_span_slice(pairs: Sequence[Tuple[WPoly, ...]], template: SliceBasis) -> SliceBasis:
    """Span of explicit tuples, laid out over the columns of a tuple slice."""
    index = {label: i for i, label in enumerate(template.ambient_monomials)}
    vectors = []
    for pair in pairs:
        row = [_zero(template.ring)] * len(index)
        for slot, p in enumerate(pair):
            for exps, c in p.terms.items():
                try:
                    row[index[(slot, exps)]] = c
                except KeyError:
                    raise WeightMismatchError(f"slot {slot} term {exps} outside the slice") from None
        vectors.append(tuple(row))
    return _basis_from_vectors(
        template.ring, template.weight, template.ambient_monomials, vectors, template.slots
    )


def kernel_slice(domain: WRing, images: Sequence[WPoly], n: int) -> SliceBasis:
    """Weight-``n`` kernel of the homomorphism sending variable i to ``images[i]``."""
    if len(images) != domain.ngens:
        raise ValueError(f"{len(images)} images for {domain.ngens} variables")
    target_ring = images[0].ring
    for var, w, image in zip(domain.variables, domain.weights, images):
        if image and image.weights() != [w]:
            raise WeightMismatchError(f"image of {var} is not homogeneous of weight {w}")
    monomials = tuple(monomial_slice(domain, n))
    target = tuple(monomial_slice(target_ring, n))
    if not monomials:
        return SliceBasis(domain, n, monomials, ExactMatrix(0, 0, (), domain.mode.is_symbolic))
    values = [coordinates(substitute(domain.monomial(m), images), target, n) for m in monomials]
    kernel = left_kernel(ExactMatrix.from_rows(values, len(target), symbolic=domain.mode.is_symbolic))
    return _basis_from_vectors(domain, n, monomials, list(kernel.entries))


def ideal_slice(ring: WRing, generators: Sequence[WPoly], n: int) -> SliceBasis:
    """Weight-``n`` part of the ideal of ``ring`` generated by homogeneous polynomials."""
    products = []
    for g in generators:
        w = g.weight()
        if w is None:
            continue
        for mono in monomial_slice(ring, n - w):
            products.append(ring.monomial(mono) * g)
    return span_slice(products, n, ring)


@dataclass(frozen=True)
class CodimResult:
    total: int
    per_weight: Dict[int, int]
    cap: int
    window: Tuple[int, int]


def graded_codim(
    sub_slices: Mapping[int, SliceBasis],
    ambient_slices: Mapping[int, SliceBasis],
    cap: int,
) -> CodimResult:
    """Σ_{n ≤ cap} (dim ambient_n − dim sub_n), requiring equality on [cap−2, cap]."""
    per_weight: Dict[int, int] = {}
    for n in range(cap + 1):
        sub, amb = sub_slices[n], ambient_slices[n]
        if sub.dim and not contains_slice(sub, amb):
            raise NonContainmentError(f"sub-slice not contained in ambient at weight {n}")
        per_weight[n] = amb.dim - sub.dim
    low = max(cap - 2, 0)
    for n in range(low, cap + 1):
        if per_weight[n] != 0:
            raise StabilizationError(
                f"codimension {per_weight[n]} at weight {n} inside the top window [{low}, {cap}]"
            )
    return CodimResult(sum(per_weight.values()), per_weight, cap, (low, cap))


__all__ = [
    "CodimResult",
    "Membership",
    "NonContainmentError",
    "ProductCache",
    "SliceBasis",
    "StabilizationError",
    "WeightMismatchError",
    "contains",
    "contains_slice",
    "coordinates",
    "full_slice",
    "graded_codim",
    "ideal_slice",
    "intersect",
    "kernel_slice",
    "module_slice",
    "monomial_slice",
    "pair_span_slice",
    "span_slice",
    "subalgebra_slice",
    "syzygy_slice",
]
