"""Named vectors of V(k,0) and the reduction to its C₂-algebra ℂ[y0, y1, y2]."""

from __future__ import annotations

import logging
from typing import Optional

from c2v.arith import ScalarMode
from c2v.corpus import y012_ring, yz_ring
from c2v.poly import WPoly
from c2v.weyl.engine import EngineLimits, ResourceLimitError, WeylModule
from c2v.weyl.pbw import PBWMonomial, PBWVector

logger = logging.getLogger(__name__)

SINGULAR_VECTOR_CAP = 8


class RangeError(ValueError):
    """Raised when (n, s) lies outside 1 <= n, 0 <= s <= 2n."""


def vacuum(mode: ScalarMode) -> PBWVector:
    return PBWVector.vacuum(mode)


def state(mode: ScalarMode, terms) -> PBWVector:
    """Build a vector from ``[(coefficient, h_modes, e_modes, f_modes), ...]``."""
    out = {}
    for c, hs, es, fs in terms:
        out[PBWMonomial(tuple(hs), tuple(es), tuple(fs)).ops] = c
    return PBWVector(mode, out)


def current_state(mode: ScalarMode, letter: str, depth: int) -> PBWVector:
    """The vector a(-depth)1."""
    blocks = {"h": ((depth,), (), ()), "e": ((), (depth,), ()), "f": ((), (), (depth,))}
    return state(mode, [(1, *blocks[letter])])


def omega_aff(mode: ScalarMode) -> PBWVector:
    k = mode.k
    v = state(
        mode,
        [
            (-1, (2,), (), ()),
            (mode.coerce(1) / 2, (1, 1), (), ()),
            (2, (), (1,), (1,)),
        ],
    )
    return v.scale(1 / (2 * (k + 2)))


def W2(mode: ScalarMode) -> PBWVector:
    k = mode.k
    v = state(
        mode,
        [
            (-k, (2,), (), ()),
            (-1, (1, 1), (), ()),
            (2 * k, (), (1,), (1,)),
        ],
    )
    return v.scale(1 / (2 * k * (k + 2)))


def W3(mode: ScalarMode) -> PBWVector:
    k = mode.k
    return state(
        mode,
        [
            (k**2, (3,), (), ()),
            (3 * k, (2, 1), (), ()),
            (2, (1, 1, 1), (), ()),
            (-6 * k, (1,), (1,), (1,)),
            (3 * k**2, (), (2,), (1,)),
            (-3 * k**2, (), (1,), (2,)),
        ],
    )


def e_power(mode: ScalarMode, n: int) -> PBWVector:
    """e(-1)^n 1."""
    return state(mode, [(1, (), (1,) * n, ())])


def singular_vector(
    k0: int, engine: Optional[WeylModule] = None, cap: int = SINGULAR_VECTOR_CAP
) -> PBWVector:
    """f(0)^{k0+1} e(-1)^{k0+1} 1 in V(k0, 0)."""
    if k0 > cap:
        raise ResourceLimitError(f"singular vector at k={k0} is above the level cap {cap}")
    mode = ScalarMode.concrete(k0)
    if engine is None:
        engine = WeylModule(mode, EngineLimits(max_weight=max(14, k0 + 1)))
    elif engine.mode != mode:
        raise ValueError(f"engine mode {engine.mode.label()} does not match k={k0}")
    u0 = engine.power("f", 0, k0 + 1, e_power(mode, k0 + 1))
    logger.debug(f"singular vector k={k0}: {len(u0)} terms")
    return u0


def reduce_c2(v: PBWVector) -> WPoly:
    """Image in ℂ[y0,y1,y2]; monomials with a mode of depth >= 2 vanish."""
    ring = y012_ring(v.mode)
    terms = {}
    for ops, c in v.terms.items():
        if all(d == 1 for _, d in ops):
            exps = [0, 0, 0]
            for a, _ in ops:
                exps[a] += 1
            terms[tuple(exps)] = c
    return WPoly(ring, terms)


def to_yz(p: WPoly) -> WPoly:
    """Rewrite a charge-zero polynomial in y0, y1, y2 through y = y0, z = y1 y2."""
    ring = yz_ring(p.ring.mode)
    terms = {}
    for (a, b, c), coeff in p.terms.items():
        if b != c:
            raise ValueError(f"term y0^{a} y1^{b} y2^{c} has nonzero charge")
        terms[(a, b)] = coeff
    return WPoly(ring, terms)


def from_yz(p: WPoly) -> WPoly:
    ring = y012_ring(p.ring.mode)
    return WPoly(ring, {(a, b, b): c for (a, b), c in p.terms.items()})


def zero_mode_oracle(
    n: int, s: int, k_mode: ScalarMode, engine: Optional[WeylModule] = None
) -> WPoly:
    """Reduction of f(0)^s e(-1)^n 1 computed by straightening."""
    if n < 1 or not 0 <= s <= 2 * n:
        raise RangeError(f"need 1 <= n and 0 <= s <= 2n, got n={n}, s={s}")
    engine = engine or WeylModule(k_mode)
    v = engine.power("f", 0, s, e_power(k_mode, n))
    return reduce_c2(v)


__all__ = [
    "RangeError",
    "SINGULAR_VECTOR_CAP",
    "W2",
    "W3",
    "current_state",
    "e_power",
    "from_yz",
    "omega_aff",
    "reduce_c2",
    "singular_vector",
    "state",
    "to_yz",
    "vacuum",
    "zero_mode_oracle",
]
