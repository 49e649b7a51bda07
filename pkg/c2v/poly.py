"""Weighted-graded polynomial rings over ℚ or ℚ(k).

Arithmetic is done by sympy's sparse ``PolyRing``/``PolyElement`` over ``QQ``
(concrete level) or ``QQ(k)`` (symbolic level). This module adds the weight
grading, the scalar-mode bookkeeping and derivations given by the images of
the generators.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyElement, PolyRing

from c2v.arith import K_DOMAIN, RatFuncK, Scalar, ScalarMode, fraction_to_qq, qq_to_fraction

logger = logging.getLogger(__name__)

Exponent = Tuple[int, ...]


class RingMismatchError(ValueError):
    """Raised when polynomials from different rings are combined."""


class ArityError(ValueError):
    """Raised when the number of images does not match the number of variables."""


class DerivationError(ValueError):
    """Raised when a derivation's images violate its declared weight shift."""


@lru_cache(maxsize=None)
def _sympy_ring(variables: Tuple[str, ...], symbolic: bool) -> PolyRing:
    return PolyRing(variables, K_DOMAIN if symbolic else QQ, lex)


def _to_domain(mode: ScalarMode, c: Scalar):
    return c.to_field() if mode.is_symbolic else fraction_to_qq(c)


def _from_domain(mode: ScalarMode, c) -> Scalar:
    return RatFuncK.from_field(c) if mode.is_symbolic else qq_to_fraction(c)


@dataclass(frozen=True)
class WRing:
    """Polynomial ring with ordered variables, positive weights and a scalar mode."""

    variables: Tuple[str, ...]
    weights: Tuple[int, ...]
    mode: ScalarMode

    def __post_init__(self) -> None:
        if len(self.variables) != len(self.weights):
            raise ArityError(
                f"{len(self.variables)} variables but {len(self.weights)} weights"
            )
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")
        if any(w < 1 for w in self.weights):
            raise ValueError(f"weights must be positive, got {self.weights}")

    @property
    def ngens(self) -> int:
        return len(self.variables)

    @property
    def sympy_ring(self) -> PolyRing:
        """The underlying lex-ordered sympy ring over ``QQ`` or ``QQ(k)``."""
        return _sympy_ring(self.variables, self.mode.is_symbolic)

    def index(self, var: str) -> int:
        try:
            return self.variables.index(var)
        except ValueError:
            raise KeyError(f"{var} is not a variable of {self.variables}") from None

    def weight_of(self, exps: Exponent) -> int:
        return sum(e * w for e, w in zip(exps, self.weights))

    def zero(self) -> "WPoly":
        return WPoly.wrap(self, self.sympy_ring.zero)

    def one(self) -> "WPoly":
        return WPoly.wrap(self, self.sympy_ring.one)

    def const(self, c) -> "WPoly":
        return WPoly(self, {(0,) * self.ngens: c})

    def monomial(self, exps: Exponent, c=1) -> "WPoly":
        return WPoly(self, {tuple(exps): c})

    def gen(self, var: str) -> "WPoly":
        return WPoly.wrap(self, self.sympy_ring.gens[self.index(var)])

    def gens(self) -> Tuple["WPoly", ...]:
        return tuple(WPoly.wrap(self, g) for g in self.sympy_ring.gens)

    def with_mode(self, mode: ScalarMode) -> "WRing":
        return WRing(self.variables, self.weights, mode)


def _is_scalar(value) -> bool:
    return isinstance(value, (int, Fraction, RatFuncK)) and not isinstance(value, bool)


class WPoly:
    """A sympy ``PolyElement`` tagged with its weighted ring.

    ``terms`` exposes the polynomial as ``exponent tuple -> nonzero scalar``
    with ``Fraction`` coefficients at a concrete level and ``RatFuncK``
    coefficients in symbolic mode.
    """

    __slots__ = ("ring", "poly", "_terms")

    def __init__(self, ring: WRing, terms: Mapping[Exponent, object]) -> None:
        mode = ring.mode
        clean = {}
        for exps, c in terms.items():
            exps = tuple(exps)
            if len(exps) != ring.ngens:
                raise ArityError(f"exponent {exps} does not fit {ring.variables}")
            c = mode.coerce(c)
            if c:
                clean[exps] = _to_domain(mode, c)
        self.ring = ring
        self.poly = ring.sympy_ring.from_dict(clean)
        self._terms: Optional[Dict[Exponent, Scalar]] = None

    @classmethod
    def wrap(cls, ring: WRing, poly: PolyElement) -> "WPoly":
        if poly.ring != ring.sympy_ring:
            raise RingMismatchError(f"sympy element of {poly.ring} does not belong to {ring.variables}")
        out = cls.__new__(cls)
        out.ring = ring
        out.poly = poly
        out._terms = None
        return out

    # -- structure ----------------------------------------------------------

    @property
    def terms(self) -> Dict[Exponent, Scalar]:
        if self._terms is None:
            mode = self.ring.mode
            self._terms = {m: _from_domain(mode, c) for m, c in self.poly.iterterms()}
        return self._terms

    def __bool__(self) -> bool:
        return bool(self.poly)

    def __len__(self) -> int:
        return len(self.poly)

    def __iter__(self) -> Iterator[Tuple[Exponent, Scalar]]:
        mode = self.ring.mode
        return iter([(m, _from_domain(mode, c)) for m, c in self.poly.terms()])

    def coefficient(self, exps: Exponent) -> Scalar:
        return self.terms.get(tuple(exps), self.ring.mode.zero)

    def weights(self) -> List[int]:
        return sorted({self.ring.weight_of(m) for m in self.poly.itermonoms()})

    def is_homogeneous(self) -> bool:
        return len(self.weights()) <= 1

    def weight(self) -> Optional[int]:
        """Weight of a homogeneous polynomial; None for zero."""
        ws = self.weights()
        if not ws:
            return None
        if len(ws) > 1:
            raise ValueError(f"polynomial is not homogeneous (weights {ws})")
        return ws[0]

    def _check(self, other: "WPoly") -> None:
        if self.ring != other.ring:
            raise RingMismatchError(
                f"ring {self.ring.variables}/{self.ring.mode.label()} vs "
                f"{other.ring.variables}/{other.ring.mode.label()}"
            )

    def _lift(self, other) -> Optional["WPoly"]:
        if isinstance(other, WPoly):
            self._check(other)
            return other
        if _is_scalar(other):
            return self.ring.const(other)
        return None

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return WPoly.wrap(self.ring, self.poly + other.poly)

    __radd__ = __add__

    def __neg__(self) -> "WPoly":
        return WPoly.wrap(self.ring, -self.poly)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return WPoly.wrap(self.ring, self.poly - other.poly)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return WPoly.wrap(self.ring, other.poly - self.poly)

    def scale(self, c) -> "WPoly":
        mode = self.ring.mode
        c = mode.coerce(c)
        if not c:
            return self.ring.zero()
        return WPoly.wrap(self.ring, self.poly.mul_ground(_to_domain(mode, c)))

    def __mul__(self, other):
        if _is_scalar(other):
            return self.scale(other)
        if not isinstance(other, WPoly):
            return NotImplemented
        self._check(other)
        return WPoly.wrap(self.ring, self.poly * other.poly)

    def __rmul__(self, other):
        if _is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if _is_scalar(other):
            return self.scale(self.ring.mode.one / other)
        return NotImplemented

    def __pow__(self, exponent: int) -> "WPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"polynomials take nonnegative integer powers, got {exponent}")
        return WPoly.wrap(self.ring, self.poly**exponent)

    def __eq__(self, other) -> bool:
        other = self._lift(other) if not isinstance(other, WPoly) else other
        if other is None:
            return NotImplemented
        return self.ring == other.ring and not (self.poly - other.poly)

    __hash__ = None  # type: ignore[assignment]

    def __reduce__(self):
        return (WPoly, (self.ring, self.terms))

    # -- calculus and evaluation -------------------------------------------

    def partial(self, var: str) -> "WPoly":
        gen = self.ring.sympy_ring.gens[self.ring.index(var)]
        return WPoly.wrap(self.ring, self.poly.diff(gen))

    def evaluate(self, values: Sequence) -> Scalar:
        ring = self.ring
        if len(values) != ring.ngens:
            raise ArityError(f"{len(values)} values for {ring.ngens} variables")
        if not self.poly:
            return ring.mode.zero
        if not ring.ngens:
            return self.coefficient(())
        mode = ring.mode
        points = [(g, _to_domain(mode, mode.coerce(v))) for g, v in zip(ring.sympy_ring.gens, values)]
        return _from_domain(mode, self.poly.evaluate(points))

    def instantiate(self, k0: int) -> "WPoly":
        ring = self.ring.with_mode(ScalarMode.concrete(k0))
        return WPoly(ring, self.terms)

    def map_ring(self, ring: WRing) -> "WPoly":
        """Reinterpret the same terms in a ring with identical variables."""
        if ring.variables != self.ring.variables:
            raise RingMismatchError(f"{self.ring.variables} vs {ring.variables}")
        return WPoly(ring, self.terms)

    # -- printing -----------------------------------------------------------

    def __str__(self) -> str:
        if not self.poly:
            return "0"
        parts = []
        for exps, c in self:
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.ring.variables, exps) if e
            )
            coeff = str(c)
            if isinstance(c, RatFuncK) and not c.is_constant and mono:
                coeff = f"({coeff})"
            if not mono:
                parts.append(coeff)
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{coeff}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"WPoly({self})"


@dataclass(frozen=True)
class DerivationSpec:
    """Derivation determined by the images of the generators."""

    ring: WRing
    images: Tuple[WPoly, ...]
    weight_shift: int
    name: str = ""

    def __post_init__(self) -> None:
        if len(self.images) != self.ring.ngens:
            raise ArityError(
                f"derivation {self.name or '?'} has {len(self.images)} images "
                f"for {self.ring.ngens} variables"
            )
        for var, w, image in zip(self.ring.variables, self.ring.weights, self.images):
            if image.ring != self.ring:
                raise RingMismatchError(f"image of {var} lives in another ring")
            if not image:
                continue
            if image.weights() != [w + self.weight_shift]:
                raise DerivationError(
                    f"image of {var} has weights {image.weights()}, "
                    f"expected {w + self.weight_shift}"
                )

    def __call__(self, p: WPoly) -> WPoly:
        return derive(self, p)

    def scaled(self, c) -> "DerivationSpec":
        return DerivationSpec(
            self.ring, tuple(img.scale(c) for img in self.images), self.weight_shift, self.name
        )


# -- operations -------------------------------------------------------------


def poly_arith(a: WPoly, b: WPoly, op: str) -> WPoly:
    """Ring operation ``op`` in {add, sub, mul} on two polynomials of one ring."""
    if not isinstance(a, WPoly) or not isinstance(b, WPoly):
        raise TypeError("poly_arith expects two WPoly operands")
    a._check(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown polynomial operation: {op}")


def weight_component(p: WPoly, n: int) -> WPoly:
    ring = p.ring
    part = {m: c for m, c in p.poly.iterterms() if ring.weight_of(m) == n}
    return WPoly.wrap(ring, ring.sympy_ring.from_dict(part))


def derive(d: DerivationSpec, p: WPoly) -> WPoly:
    """Apply the derivation ``d`` to ``p`` (Leibniz extension of the images)."""
    if p.ring != d.ring:
        raise RingMismatchError(
            f"derivation {d.name or '?'} on {d.ring.variables} applied to "
            f"a polynomial of {p.ring.variables}"
        )
    result = d.ring.zero()
    for var, image in zip(d.ring.variables, d.images):
        if image:
            part = p.partial(var)
            if part:
                result = result + part * image
    return result


def substitute(p: WPoly, images: Sequence[WPoly]) -> WPoly:
    """Ring homomorphism sending the i-th variable of ``p`` to ``images[i]``."""
    if len(images) != p.ring.ngens:
        raise ArityError(f"{len(images)} images for {p.ring.ngens} variables")
    if not images:
        raise ArityError("substitution needs at least one image")
    target = images[0].ring
    for image in images[1:]:
        if image.ring != target:
            raise RingMismatchError("substitution images live in different rings")
    if target == p.ring:
        pairs = list(zip(target.sympy_ring.gens, (image.poly for image in images)))
        return WPoly.wrap(target, p.poly.compose(pairs))

    # Images in another ring: expand term by term with cached powers.
    R = target.sympy_ring
    convert = target.mode.coerce
    source_mode = p.ring.mode
    powers: List[Dict[int, PolyElement]] = [{0: R.one} for _ in images]

    def power(i: int, e: int) -> PolyElement:
        cache = powers[i]
        if e not in cache:
            cache[e] = power(i, e - 1) * images[i].poly
        return cache[e]

    result = R.zero
    for exps, c in p.poly.iterterms():
        term = R.ground_new(_to_domain(target.mode, convert(_from_domain(source_mode, c))))
        for i, e in enumerate(exps):
            if e:
                term = term * power(i, e)
        result = result + term
    logger.debug(
        f"substitute {p.ring.variables} -> {target.variables}: {len(p)} terms, "
        f"{sum(len(cache) for cache in powers)} cached powers"
    )
    return WPoly.wrap(target, result)


def jacobian(f: WPoly, g: WPoly, u: str, v: str) -> WPoly:
    """``∂f/∂u · ∂g/∂v − ∂f/∂v · ∂g/∂u``."""
    return f.partial(u) * g.partial(v) - f.partial(v) * g.partial(u)


def transport_derivation(
    d: DerivationSpec,
    forward: Sequence[WPoly],
    backward: Sequence[WPoly],
    name: str = "",
) -> DerivationSpec:
    """Move ``d`` along a change of generators.

    ``backward[i]`` writes the i-th target generator as a polynomial in the
    generators of ``d.ring``; ``forward[j]`` writes the j-th generator of
    ``d.ring`` in the target generators. The result acts on the target ring.
    """
    if len(forward) != d.ring.ngens:
        raise ArityError(f"{len(forward)} forward images for {d.ring.ngens} variables")
    target = forward[0].ring
    if len(backward) != target.ngens:
        raise ArityError(f"{len(backward)} backward images for {target.ngens} variables")
    images = tuple(substitute(derive(d, b), forward) for b in backward)
    return DerivationSpec(target, images, d.weight_shift, name or d.name)


def homogeneous_parts(p: WPoly) -> Dict[int, WPoly]:
    return {n: weight_component(p, n) for n in p.weights()}


def monomials_of_weight(ring: WRing, n: int) -> List[Exponent]:
    """All exponent vectors of weighted degree ``n``, lexicographically descending."""
    if n < 0:
        return []
    out: List[Exponent] = []

    def walk(i: int, remaining: int, prefix: Tuple[int, ...]) -> None:
        if i == ring.ngens - 1:
            w = ring.weights[i]
            if remaining % w == 0:
                out.append(prefix + (remaining // w,))
            return
        w = ring.weights[i]
        for e in range(remaining // w, -1, -1):
            walk(i + 1, remaining - e * w, prefix + (e,))

    if ring.ngens == 0:
        return [()] if n == 0 else []
    walk(0, n, ())
    return out


def product_of_powers(factors: Sequence[WPoly], exps: Iterable[int]) -> WPoly:
    result: Optional[WPoly] = None
    for f, e in zip(factors, exps):
        if e:
            term = f**e
            result = term if result is None else result * term
    if result is None:
        return factors[0].ring.one()
    return result


__all__ = [
    "ArityError",
    "DerivationError",
    "DerivationSpec",
    "Exponent",
    "RingMismatchError",
    "WPoly",
    "WRing",
    "derive",
    "homogeneous_parts",
    "jacobian",
    "monomials_of_weight",
    "poly_arith",
    "product_of_powers",
    "substitute",
    "transport_derivation",
    "weight_component",
]
