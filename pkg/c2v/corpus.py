"""Named polynomials, derivations and matrices used by the checks.

Rings:
    yz     ℂ[y, z] with wt y = 1, wt z = 2 (the image of the charge-zero sector)
    y012   ℂ[y0, y1, y2], all weights 1 (the C₂-algebra of the Weyl module)
    t      ℂ[t2, t3, t4, t5], t_s of weight s, abstract stand-ins for g_s
    x      ℂ[x2, x3, x4, x5], x_s of weight s, abstract stand-ins for W̄^s
    ij     ℚ[i, j], module labels for the top-level eigenvalue formulas
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Dict, Iterable, List, Tuple, Union

from c2v.arith import ScalarMode
from c2v.matrix import ExactMatrix
from c2v.poly import DerivationSpec, WPoly, WRing, derive

logger = logging.getLogger(__name__)


class UnknownCorpusName(KeyError):
    """Raised for a corpus name that is not registered."""


class SymbolicUnavailableError(ValueError):
    """Raised when an object depending on (k+1)! is requested with symbolic k."""


CorpusObject = Union[WPoly, DerivationSpec, ExactMatrix]


def yz_ring(mode: ScalarMode) -> WRing:
    return WRing(("y", "z"), (1, 2), mode)


def y012_ring(mode: ScalarMode) -> WRing:
    return WRing(("y0", "y1", "y2"), (1, 1, 1), mode)


def t_ring(mode: ScalarMode) -> WRing:
    return WRing(("t2", "t3", "t4", "t5"), (2, 3, 4, 5), mode)


def x_ring(mode: ScalarMode) -> WRing:
    return WRing(("x2", "x3", "x4", "x5"), (2, 3, 4, 5), mode)


def ij_ring(mode: ScalarMode) -> WRing:
    return WRing(("i", "j"), (1, 1), mode)


@dataclass(frozen=True)
class Mutation:
    """Add ``delta`` to the coefficient of the ``index``-th term of ``name``."""

    name: str
    index: int
    delta: Fraction = Fraction(1)

    @classmethod
    def parse(cls, text: str) -> "Mutation":
        parts = text.split(":")
        if len(parts) not in (2, 3):
            raise ValueError(f"mutation must look like NAME:INDEX[:DELTA], got {text!r}")
        delta = Fraction(parts[2]) if len(parts) == 3 else Fraction(1)
        return cls(parts[0], int(parts[1]), delta)


_BUILDERS: Dict[str, Callable[["Corpus"], CorpusObject]] = {}
_CONCRETE_ONLY = {"f0"}
_F_FAMILY = re.compile(r"^f(\d+)$")


def _builder(name: str, concrete_only: bool = False):
    def wrap(fn):
        _BUILDERS[name] = fn
        if concrete_only:
            _CONCRETE_ONLY.add(name)
        return fn

    return wrap


class Corpus:
    """Cached registry of named objects for one scalar mode."""

    def __init__(self, mode: ScalarMode, mutations: Iterable[Mutation] = ()) -> None:
        self.mode = mode
        self.mutations = tuple(mutations)
        self._cache: Dict[str, CorpusObject] = {}
        for m in self.mutations:
            if not self.is_known(m.name):
                raise UnknownCorpusName(m.name)

    @property
    def k(self):
        return self.mode.k

    @staticmethod
    def is_known(name: str) -> bool:
        return name in _BUILDERS or bool(_F_FAMILY.match(name))

    @staticmethod
    def names() -> List[str]:
        return sorted(_BUILDERS) + ["f<r>"]

    def __getitem__(self, name: str) -> CorpusObject:
        return self.get(name)

    def get(self, name: str) -> CorpusObject:
        if name in self._cache:
            return self._cache[name]
        family = _F_FAMILY.match(name)
        if not family and name not in _BUILDERS:
            raise UnknownCorpusName(name)
        if self.mode.is_symbolic and (family or name in _CONCRETE_ONLY):
            raise SymbolicUnavailableError(
                f"{name} involves (k+1)! and needs a concrete level"
            )
        if family:
            value: CorpusObject = self._f_family(int(family.group(1)))
        else:
            value = _BUILDERS[name](self)
        value = self._mutate(name, value)
        self._cache[name] = value
        return value

    def _f_family(self, r: int) -> WPoly:
        if r == 0:
            return _f0(self)
        return derive(self.get("D"), self.get(f"f{r - 1}"))

    def _mutate(self, name: str, value: CorpusObject) -> CorpusObject:
        for m in self.mutations:
            if m.name != name:
                continue
            if not isinstance(value, WPoly):
                raise TypeError(f"only polynomials can be mutated, {name} is not one")
            terms = list(value)
            if not 0 <= m.index < len(terms):
                raise IndexError(f"{name} has {len(terms)} terms, no index {m.index}")
            exps, c = terms[m.index]
            logger.warning(f"corpus mutation: {name}[{m.index}] += {m.delta}")
            value = value + value.ring.monomial(exps, m.delta)
        return value

    def polys(self, *names: str) -> Tuple[WPoly, ...]:
        out = []
        for name in names:
            value = self.get(name)
            if not isinstance(value, WPoly):
                raise TypeError(f"{name} is not a polynomial")
            out.append(value)
        return tuple(out)


def corpus(k_mode: ScalarMode, name: str) -> CorpusObject:
    """Build the named object for the given scalar mode."""
    return Corpus(k_mode).get(name)


# -- ℂ[y, z] ----------------------------------------------------------------


@_builder("g2")
def _g2(c: Corpus) -> WPoly:
    y, z = yz_ring(c.mode).gens()
    return y**2 - 2 * c.k * z


@_builder("g3")
def _g3(c: Corpus) -> WPoly:
    y, z = yz_ring(c.mode).gens()
    return y**3 - 3 * c.k * y * z


@_builder("g4")
def _g4(c: Corpus) -> WPoly:
    y, z = yz_ring(c.mode).gens()
    return z**2


@_builder("g5")
def _g5(c: Corpus) -> WPoly:
    y, z = yz_ring(c.mode).gens()
    return y * z**2


@_builder("Wbar2")
def _wbar2(c: Corpus) -> WPoly:
    y, z = yz_ring(c.mode).gens()
    k = c.k
    return (y**2 - 2 * k * z) * (-1 / (2 * k * (k + 2)))


@_builder("Wbar3")
def _wbar3(c: Corpus) -> WPoly:
    y, z = yz_ring(c.mode).gens()
    return 2 * (y**3 - 3 * c.k * y * z)


@_builder("Wbar4")
def _wbar4(c: Corpus) -> WPoly:
    y, z = yz_ring(c.mode).gens()
    k = c.k
    return (
        -(11 * k + 6) * y**4
        + 4 * k * (11 * k + 6) * y**2 * z
        - 2 * k**2 * (6 * k - 5) * z**2
    )


@_builder("Wbar5")
def _wbar5(c: Corpus) -> WPoly:
    y, z = yz_ring(c.mode).gens()
    k = c.k
    return (
        -2 * (19 * k + 12) * y**5
        + 10 * k * (19 * k + 12) * y**3 * z
        - 10 * k**2 * (10 * k - 7) * y * z**2
    )


@_builder("D")
def _d(c: Corpus) -> DerivationSpec:
    ring = yz_ring(c.mode)
    y, z = ring.gens()
    k = c.k
    return DerivationSpec(ring, ((k + 2) * y**2 - 2 * k * z, (3 * k + 4) * y * z), 1, "D")


@_builder("E")
def _e(c: Corpus) -> DerivationSpec:
    ring = yz_ring(c.mode)
    y, z = ring.gens()
    return DerivationSpec(ring, (y, 2 * z), 0, "E")


def _f0(c: Corpus) -> WPoly:
    if c.mode.is_symbolic:
        raise SymbolicUnavailableError("f0 needs a concrete level")
    k = c.mode.level
    ring = yz_ring(c.mode)
    terms = {}
    for j in range((k + 1) // 2 + 1):
        coeff = factorial(k + 1) // (factorial(k + 1 - 2 * j) * factorial(j) ** 2)
        terms[(k + 1 - 2 * j, j)] = (-1) ** j * coeff
    return WPoly(ring, terms)


_BUILDERS["f0"] = lambda c: c._f_family(0)


@_builder("p")
def _p(c: Corpus) -> WPoly:
    y, z = yz_ring(c.mode).gens()
    k = c.k
    return -(k + 1) * (k + 2) ** 2 * ((k + 1) * y**2 + k * z)


@_builder("q")
def _q(c: Corpus) -> WPoly:
    y, _ = yz_ring(c.mode).gens()
    k = c.k
    return (k + 2) * (2 * k + 3) * y


# -- ℂ[y0, y1, y2] ------------------------------------------------------------


@_builder("f0_op")
def _f0_op(c: Corpus) -> DerivationSpec:
    ring = y012_ring(c.mode)
    y0, y1, y2 = ring.gens()
    return DerivationSpec(ring, (2 * y2, -y0, ring.zero()), 0, "f(0)")


# -- ℂ[t2..t5]: g-coordinates ---------------------------------------------


@_builder("Wbar2_g")
def _wbar2_g(c: Corpus) -> WPoly:
    t2, t3, t4, t5 = t_ring(c.mode).gens()
    k = c.k
    return t2 * (-1 / (2 * k * (k + 2)))


@_builder("Wbar3_g")
def _wbar3_g(c: Corpus) -> WPoly:
    t2, t3, t4, t5 = t_ring(c.mode).gens()
    return 2 * t3


@_builder("Wbar4_g")
def _wbar4_g(c: Corpus) -> WPoly:
    t2, t3, t4, t5 = t_ring(c.mode).gens()
    k = c.k
    return -(11 * k + 6) * t2**2 + 2 * k**2 * (16 * k + 17) * t4


@_builder("Wbar5_g")
def _wbar5_g(c: Corpus) -> WPoly:
    t2, t3, t4, t5 = t_ring(c.mode).gens()
    k = c.k
    return -2 * (19 * k + 12) * t2 * t3 + 2 * k**2 * (64 * k + 107) * t5


@_builder("rel1")
def _rel1(c: Corpus) -> WPoly:
    t2, t3, t4, t5 = t_ring(c.mode).gens()
    k = c.k
    return t2**4 - t2 * t3**2 - 5 * k**2 * t2**2 * t4 + 4 * k**4 * t4**2 + 2 * k**2 * t3 * t5


@_builder("rel2")
def _rel2(c: Corpus) -> WPoly:
    t2, t3, t4, t5 = t_ring(c.mode).gens()
    k = c.k
    return (
        t2**3 * t3
        - t3**3
        - 5 * k**2 * t2 * t3 * t4
        + 2 * k**2 * t2**2 * t5
        - 2 * k**4 * t4 * t5
    )


@_builder("rel3")
def _rel3(c: Corpus) -> WPoly:
    t2, t3, t4, t5 = t_ring(c.mode).gens()
    k = c.k
    return t2**3 * t4 - t3**2 * t4 - 4 * k**2 * t2 * t4**2 + k**2 * t5**2


@_builder("w3_on_g")
def _w3_on_g(c: Corpus) -> DerivationSpec:
    ring = t_ring(c.mode)
    t2, t3, t4, t5 = ring.gens()
    k = c.k
    images = (
        -12 * k * (k + 2) * t3,
        -18 * k * (k + 2) * t2**2 + 36 * k**3 * (2 * k + 3) * t4,
        -12 * k * (3 * k + 4) * t5,
        (6 * (7 * k + 9) / k) * (t2**3 - t3**2) - 6 * k * (28 * k + 37) * t2 * t4,
    )
    return DerivationSpec(ring, images, 1, "W3_1 on g")


# -- ℂ[x2..x5]: W̄-coordinates -----------------------------------------------


@_builder("g2_W")
def _g2_w(c: Corpus) -> WPoly:
    x2, x3, x4, x5 = x_ring(c.mode).gens()
    k = c.k
    return -2 * k * (k + 2) * x2


@_builder("g3_W")
def _g3_w(c: Corpus) -> WPoly:
    x2, x3, x4, x5 = x_ring(c.mode).gens()
    return x3 * Fraction(1, 2)


@_builder("g4_W")
def _g4_w(c: Corpus) -> WPoly:
    x2, x3, x4, x5 = x_ring(c.mode).gens()
    k = c.k
    return (2 * (k + 2) ** 2 * (11 * k + 6) / (16 * k + 17)) * x2**2 + (
        1 / (2 * k**2 * (16 * k + 17))
    ) * x4


@_builder("g5_W")
def _g5_w(c: Corpus) -> WPoly:
    x2, x3, x4, x5 = x_ring(c.mode).gens()
    k = c.k
    return (-(k + 2) * (19 * k + 12) / (k * (64 * k + 107))) * x2 * x3 + (
        1 / (2 * k**2 * (64 * k + 107))
    ) * x5


@_builder("w3_on_x")
def _w3_on_x(c: Corpus) -> DerivationSpec:
    ring = x_ring(c.mode)
    x2, x3, x4, x5 = ring.gens()
    k = c.k
    images = (
        3 * x3,
        (288 * k**3 * (k - 2) * (k + 2) ** 2 * (3 * k + 4) / (16 * k + 17)) * x2**2
        + (36 * k * (2 * k + 3) / (16 * k + 17)) * x4,
        (1248 * k**2 * (k - 3) * (k + 2) * (2 * k + 1) * (2 * k + 3) / (64 * k + 107)) * x2 * x3
        - (12 * k * (3 * k + 4) * (16 * k + 17) / (64 * k + 107)) * x5,
        (
            240 * k**4 * (k + 2) ** 3 * (2 * k + 3) * (3 * k + 4) * (202 * k - 169)
            / (16 * k + 17)
        )
        * x2**3
        - 15 * k * (2 * k + 3) * (41 * k + 61) * x3**2
        + (60 * k**2 * (k + 2) * (404 * k**2 + 1170 * k + 835) / (16 * k + 17)) * x2 * x4,
    )
    return DerivationSpec(ring, images, 1, "W3_1 on W-tilde")


# -- top-level eigenvalues and the weight-one matrix ------------------------


@_builder("eig_W2")
def _eig_w2(c: Corpus) -> WPoly:
    i, j = ij_ring(c.mode).gens()
    k = c.k
    d = i - 2 * j
    return (k * d - d**2 + 2 * k * (i - j + 1) * j) * (1 / (2 * k * (k + 2)))


@_builder("eig_W3")
def _eig_w3(c: Corpus) -> WPoly:
    i, j = ij_ring(c.mode).gens()
    k = c.k
    d = i - 2 * j
    return k**2 * d - 3 * k * d**2 + 2 * d**3 - 6 * k * d * (i - j + 1) * j


@_builder("a_rs")
def _a_rs(c: Corpus) -> ExactMatrix:
    k = c.k
    zero = c.mode.zero
    a = [[zero] * 4 for _ in range(4)]

    def put(r: int, s: int, value) -> None:
        a[r - 2][s - 2] = value

    put(2, 3, 2)
    put(3, 2, 54 * k**3 * (k - 2) * (k + 2) * (3 * k + 4) / (16 * k + 17))
    put(3, 4, 18 * k * (2 * k + 3) / (16 * k + 17))
    put(4, 3, 32 * k**2 * (k - 3) * (2 * k + 1) * (2 * k + 3) * (2 * k + 7) / (64 * k + 107))
    put(4, 5, -24 * k * (3 * k + 4) * (16 * k + 17) / (5 * (64 * k + 107)))
    put(
        5,
        2,
        120 * k**4 * (k + 2) * (2 * k + 1) * (2 * k + 3) * (3 * k + 4) * (8 * k**2 + 5 * k + 5)
        / (16 * k + 17),
    )
    put(5, 4, -15 * k**2 * (208 * k**3 + 649 * k**2 + 580 * k + 120) / (2 * (16 * k + 17)))
    return ExactMatrix.from_rows(a, 4, symbolic=c.mode.is_symbolic)


__all__ = [
    "Corpus",
    "CorpusObject",
    "Mutation",
    "SymbolicUnavailableError",
    "UnknownCorpusName",
    "corpus",
    "ij_ring",
    "t_ring",
    "x_ring",
    "y012_ring",
    "yz_ring",
]
