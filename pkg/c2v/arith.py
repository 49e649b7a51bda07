"""Exact scalars: rationals and reduced rational functions in the level k."""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Optional, Union

from sympy import Symbol
from sympy.polys.domains import QQ

K_SYMBOL = Symbol("k")
K_DOMAIN = QQ.frac_field(K_SYMBOL)
K_FIELD = K_DOMAIN.field
K_RING = K_FIELD.ring


class ScalarDivisionError(ZeroDivisionError):
    """Raised when a scalar is divided by zero."""


class PoleError(ValueError):
    """Raised when a rational function is evaluated at a root of its denominator."""


class PreconditionError(ValueError):
    """Raised when an operation is called outside its documented domain."""


def qq_to_fraction(value) -> Fraction:
    """Convert a sympy ``QQ`` element to :class:`fractions.Fraction`."""
    return Fraction(int(value.numerator), int(value.denominator))


def fraction_to_qq(value: Union[int, Fraction]):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def _as_poly(value):
    if isinstance(value, (int, Fraction)):
        return K_RING.ground_new(fraction_to_qq(value))
    if K_RING.is_element(value):
        return value
    raise TypeError(f"cannot interpret {value!r} as a polynomial in k")


class RatFuncK:
    """Element of ℚ(k) kept as ``numer/denom`` with gcd 1 and monic denominator.

    Two instances are equal exactly when their stored numerator and
    denominator coincide.
    """

    __slots__ = ("numer", "denom")

    def __init__(self, numer=0, denom=None) -> None:
        numer = _as_poly(numer)
        denom = K_RING.one if denom is None else _as_poly(denom)
        if not denom:
            raise ScalarDivisionError("rational function with zero denominator")
        if denom != K_RING.one:
            numer, denom = numer.cancel(denom)
            lead = denom.LC
            if lead != QQ.one:
                numer = numer.quo_ground(lead)
                denom = denom.monic()
        self.numer = numer
        self.denom = denom

    @classmethod
    def gen(cls) -> "RatFuncK":
        return cls(K_RING.gens[0])

    @classmethod
    def from_field(cls, element) -> "RatFuncK":
        """Build from an element of the sympy domain ``QQ(k)``."""
        return cls(element.numer, element.denom)

    def to_field(self):
        return K_FIELD.raw_new(self.numer, self.denom)

    # -- predicates ---------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.numer)

    @property
    def is_constant(self) -> bool:
        return self.numer.is_ground and self.denom == K_RING.one

    def constant(self) -> Fraction:
        if not self.is_constant:
            raise PreconditionError(f"{self} depends on k")
        return qq_to_fraction(self.numer.LC)

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _lift(other) -> Optional["RatFuncK"]:
        if isinstance(other, RatFuncK):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return RatFuncK(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if self.denom == other.denom:
            return RatFuncK(self.numer + other.numer, self.denom)
        return RatFuncK(
            self.numer * other.denom + other.numer * self.denom,
            self.denom * other.denom,
        )

    __radd__ = __add__

    def __neg__(self) -> "RatFuncK":
        result = RatFuncK.__new__(RatFuncK)
        result.numer = -self.numer
        result.denom = self.denom
        return result

    def __pos__(self) -> "RatFuncK":
        return self

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return RatFuncK(self.numer * other.numer, self.denom * other.denom)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if not other:
            raise ScalarDivisionError(f"division of {self} by zero")
        return RatFuncK(self.numer * other.denom, self.denom * other.numer)

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int) -> "RatFuncK":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            if not self:
                raise ScalarDivisionError("zero raised to a negative power")
            return RatFuncK(self.denom ** (-exponent), self.numer ** (-exponent))
        return RatFuncK(self.numer**exponent, self.denom**exponent)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.numer == other.numer and self.denom == other.denom

    def __hash__(self) -> int:
        if self.is_constant:
            return hash(self.constant())
        return hash((self.numer, self.denom))

    def __str__(self) -> str:
        numer = str(self.numer.as_expr())
        if self.denom == K_RING.one:
            return numer
        return f"({numer})/({self.denom.as_expr()})"

    def __repr__(self) -> str:
        return f"RatFuncK({self})"

    def __reduce__(self):
        return (_rebuild_ratfunc, (_coeff_dict(self.numer), _coeff_dict(self.denom)))


def _coeff_dict(poly) -> Dict[int, Fraction]:
    return {monom[0]: qq_to_fraction(coeff) for monom, coeff in poly.terms()}


def _rebuild_ratfunc(numer: Dict[int, Fraction], denom: Dict[int, Fraction]) -> RatFuncK:
    def build(coeffs):
        return K_RING.from_dict({(exp,): fraction_to_qq(c) for exp, c in coeffs.items()})

    return RatFuncK(build(numer), build(denom))


Scalar = Union[Fraction, RatFuncK]

_OPS: Dict[str, Callable] = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """Apply ``op`` (add, sub, mul, div) to two scalars.

    Args:
        a: left operand (int, Fraction or RatFuncK)
        b: right operand
        op: one of ``"add"``, ``"sub"``, ``"mul"``, ``"div"``

    Returns:
        The exact result, a Fraction when both inputs are rational.
    """
    try:
        fn = _OPS[op]
    except KeyError:
        raise PreconditionError(f"unknown scalar operation: {op}") from None
    if op == "div" and not b:
        raise ScalarDivisionError(f"division of {a} by zero")
    result = fn(a, b)
    if isinstance(result, int):
        return Fraction(result)
    return result


def _check_level(k0) -> int:
    if isinstance(k0, bool) or not isinstance(k0, int):
        if isinstance(k0, Fraction) and k0.denominator == 1 and k0 > 0:
            return int(k0)
        raise PreconditionError(f"level must be a positive integer, got {k0!r}")
    if k0 <= 0:
        raise PreconditionError(f"level must be a positive integer, got {k0}")
    return k0


def instantiate_k(f: Union[int, Fraction, RatFuncK], k0: int) -> Fraction:
    """Evaluate ``f`` at the positive integer level ``k0``."""
    k0 = _check_level(k0)
    if not isinstance(f, RatFuncK):
        return Fraction(f)
    denom = qq_to_fraction(f.denom(k0))
    if denom == 0:
        raise PoleError(f"{f} has a pole at k={k0}")
    return qq_to_fraction(f.numer(k0)) / denom


@dataclass(frozen=True)
class ScalarMode:
    """Concrete level ``k0`` or the symbolic field ℚ(k).

    ``level`` is None in symbolic mode.
    """

    level: Optional[int] = None

    def __post_init__(self) -> None:
        if self.level is not None:
            _check_level(self.level)

    @classmethod
    def concrete(cls, k0: int) -> "ScalarMode":
        return cls(_check_level(k0))

    @classmethod
    def symbolic(cls) -> "ScalarMode":
        return cls(None)

    @property
    def is_symbolic(self) -> bool:
        return self.level is None

    @property
    def k(self) -> Scalar:
        if self.level is None:
            return RatFuncK.gen()
        return Fraction(self.level)

    @property
    def zero(self) -> Scalar:
        return RatFuncK() if self.level is None else Fraction(0)

    @property
    def one(self) -> Scalar:
        return RatFuncK(1) if self.level is None else Fraction(1)

    def coerce(self, value) -> Scalar:
        if self.level is None:
            if isinstance(value, RatFuncK):
                return value
            return RatFuncK(Fraction(value))
        if isinstance(value, RatFuncK):
            return instantiate_k(value, self.level)
        return Fraction(value)

    def label(self) -> str:
        return "symbolic" if self.level is None else f"k={self.level}"


__all__ = [
    "K_DOMAIN",
    "K_FIELD",
    "K_RING",
    "PoleError",
    "PreconditionError",
    "RatFuncK",
    "Scalar",
    "ScalarDivisionError",
    "ScalarMode",
    "fraction_to_qq",
    "instantiate_k",
    "qq_to_fraction",
    "scalar_arith",
]
