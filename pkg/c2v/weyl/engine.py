"""Straightening of current modes and modes of composite vectors on V(k,0).

A current mode ``a(n)`` is pushed to the right through a PBW monomial with

    [a(m), b(n)] = [a,b](m+n) + m <a,b> δ_{m+n,0} k,

and a composite vector ``u = a(-i)u'`` acts through the iterate formula

    (a(-i)u')_n = Σ_{j≥0} C(i+j-1, j) ( a(-i-j) u'_{n+j} - (-1)^i u'_{n-i-j} a(j) ),

whose two sums stop once the weight of the partial result would become
negative. Results are memoised per engine, so one engine serves one scalar
mode.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from c2v.arith import Scalar, ScalarMode
from c2v.formulas import binomial
from c2v.weyl.pbw import (
    E,
    F,
    H,
    LETTERS,
    Ops,
    PBWVector,
    letter_index,
    op_key,
    ops_charge,
    ops_weight,
)

logger = logging.getLogger(__name__)

Terms = Dict[Ops, Scalar]

# [a, b] = coefficient * letter
BRACKET: Dict[Tuple[int, int], Tuple[int, int]] = {
    (H, E): (2, E),
    (H, F): (-2, F),
    (E, F): (1, H),
    (E, H): (-2, E),
    (F, H): (2, F),
    (F, E): (-1, H),
}

FORM: Dict[Tuple[int, int], int] = {(H, H): 2, (E, F): 1, (F, E): 1}

CHARGE = {H: 0, E: 2, F: -2}


class ResourceLimitError(RuntimeError):
    """Raised when a computation would exceed the configured weight or size caps."""


class GradingError(ArithmeticError):
    """Raised when a result violates the weight or charge bookkeeping."""


@dataclass(frozen=True)
class EngineLimits:
    max_weight: int = 14
    max_terms: int = 2_000_000


class WeylModule:
    """The level-k vacuum Weyl module for one scalar mode.

    Args:
        mode: concrete level or symbolic k
        limits: weight and term caps enforced on every public call
        validate: assert weight and charge of every public result
    """

    def __init__(
        self,
        mode: ScalarMode,
        limits: Optional[EngineLimits] = None,
        validate: bool = False,
    ) -> None:
        self.mode = mode
        self.limits = limits or EngineLimits()
        self.validate = validate
        self.k = mode.k
        self._acts: Dict[Tuple[int, int, Ops], Terms] = {}
        self._modes: Dict[Tuple[Ops, int, Ops], Terms] = {}

    # -- bookkeeping --------------------------------------------------------

    def _guard(self, v: PBWVector, label: str) -> None:
        if v.mode != self.mode:
            raise ValueError(f"{label} lives in mode {v.mode.label()}, engine in {self.mode.label()}")
        for w in v.weights():
            if w > self.limits.max_weight:
                raise ResourceLimitError(
                    f"{label} has weight {w} above the cap {self.limits.max_weight}"
                )
        if len(v) > self.limits.max_terms:
            raise ResourceLimitError(f"{label} has {len(v)} terms, cap {self.limits.max_terms}")

    def _finish(self, terms: Terms, weight: Optional[int], charge: Optional[int], label: str) -> PBWVector:
        if len(terms) > self.limits.max_terms:
            raise ResourceLimitError(f"{label} produced {len(terms)} terms")
        result = PBWVector(self.mode, terms)
        if self.validate and result:
            if weight is not None and result.weights() != [weight]:
                raise GradingError(f"{label}: weights {result.weights()}, expected {weight}")
            if charge is not None and result.charges() != [charge]:
                raise GradingError(f"{label}: charges {result.charges()}, expected {charge}")
        return result

    def cache_size(self) -> int:
        return len(self._acts) + len(self._modes)

    # -- current modes ------------------------------------------------------

    def current_mode(self, a, n: int, v: PBWVector) -> PBWVector:
        """Apply ``a(n)`` for a in {h, e, f} to ``v``."""
        a = letter_index(a)
        self._guard(v, "current_mode input")
        if v.weights() and max(v.weights()) - n > self.limits.max_weight:
            raise ResourceLimitError(f"{LETTERS[a]}({n}) would exceed weight {self.limits.max_weight}")
        out: Terms = {}
        for ops, c in v.terms.items():
            _accumulate(out, self._act(a, n, ops), c)
        weight = v.weights()[0] - n if len(v.weights()) == 1 else None
        charge = v.charges()[0] + CHARGE[a] if len(v.charges()) == 1 else None
        return self._finish(out, weight, charge, f"{LETTERS[a]}({n})")

    def power(self, a, n: int, exponent: int, v: PBWVector) -> PBWVector:
        for step in range(exponent):
            v = self.current_mode(a, n, v)
            if not v:
                logger.debug(f"{LETTERS[letter_index(a)]}({n}) power vanished after {step + 1} steps")
                break
        logger.debug(f"power done: {len(v)} terms, {len(self._acts)} cached actions")
        return v

    def _act(self, a: int, n: int, ops: Ops) -> Terms:
        key = (a, n, ops)
        cached = self._acts.get(key)
        if cached is not None:
            return cached
        if n < 0 and (not ops or op_key((a, -n)) <= op_key(ops[0])):
            result: Terms = {((a, -n),) + ops: self.mode.one}
        elif n >= 0 and (not ops or n > ops_weight(ops)):
            result = {}
        else:
            result = self._commute(a, n, ops)
        self._acts[key] = result
        return result

    def _commute(self, a: int, n: int, ops: Ops) -> Terms:
        b, d = ops[0]
        rest = ops[1:]
        out: Terms = {}
        for tail, c in self._act(a, n, rest).items():
            _accumulate(out, self._act(b, -d, tail), c)
        bracket = BRACKET.get((a, b))
        if bracket is not None:
            coeff, letter = bracket
            _accumulate(out, self._act(letter, n - d, rest), self.mode.coerce(coeff))
        form = FORM.get((a, b))
        if form and n == d:
            _accumulate(out, {rest: self.mode.one}, n * form * self.k)
        return out

    # -- modes of composite vectors ------------------------------------------

    def vector_mode(self, u: PBWVector, n: int, v: PBWVector) -> PBWVector:
        """The n-th mode of the vertex operator of ``u`` applied to ``v``."""
        self._guard(u, "vector_mode operand")
        self._guard(v, "vector_mode input")
        out: Terms = {}
        for u_ops, cu in u.terms.items():
            for v_ops, cv in v.terms.items():
                target = ops_weight(u_ops) + ops_weight(v_ops) - n - 1
                if target > self.limits.max_weight:
                    raise ResourceLimitError(
                        f"mode {n} of a weight-{ops_weight(u_ops)} vector reaches weight {target}"
                    )
                _accumulate(out, self._vmode(u_ops, n, v_ops), cu * cv)
        weight = None
        if len(u.weights()) == 1 and len(v.weights()) == 1:
            weight = u.weights()[0] + v.weights()[0] - n - 1
        charge = None
        if len(u.charges()) == 1 and len(v.charges()) == 1:
            charge = u.charges()[0] + v.charges()[0]
        return self._finish(out, weight, charge, f"vector mode {n}")

    def _vmode(self, u_ops: Ops, n: int, v_ops: Ops) -> Terms:
        key = (u_ops, n, v_ops)
        cached = self._modes.get(key)
        if cached is not None:
            return cached
        wt_v = ops_weight(v_ops)
        if ops_weight(u_ops) + wt_v - n - 1 < 0:
            result: Terms = {}
        elif not u_ops:
            result = {v_ops: self.mode.one} if n == -1 else {}
        else:
            a, i = u_ops[0]
            rest = u_ops[1:]
            if not rest:
                result = self._derivative_mode(a, i, n, v_ops)
            else:
                result = self._iterate(a, i, rest, n, v_ops)
        self._modes[key] = result
        return result

    def _derivative_mode(self, a: int, i: int, n: int, v_ops: Ops) -> Terms:
        # a(-i)1 = L(-1)^{i-1} a(-1)1 / (i-1)!
        coeff = (-1) ** (i - 1) * binomial(n, i - 1)
        if not coeff:
            return {}
        out: Terms = {}
        _accumulate(out, self._act(a, n - i + 1, v_ops), self.mode.coerce(coeff))
        return out

    def _iterate(self, a: int, i: int, rest: Ops, n: int, v_ops: Ops) -> Terms:
        wt_rest = ops_weight(rest)
        wt_v = ops_weight(v_ops)
        out: Terms = {}
        for j in range(max(wt_rest + wt_v - n, 0)):
            inner = self._vmode(rest, n + j, v_ops)
            if not inner:
                continue
            c = self.mode.coerce(binomial(i + j - 1, j))
            for ops, x in inner.items():
                _accumulate(out, self._act(a, -i - j, ops), c * x)
        sign = -1 if i % 2 == 0 else 1
        for j in range(wt_v + 1):
            av = self._act(a, j, v_ops)
            if not av:
                continue
            c = self.mode.coerce(sign * binomial(i + j - 1, j))
            for ops, x in av.items():
                _accumulate(out, self._vmode(rest, n - i - j, ops), c * x)
        return out


def _accumulate(out: Terms, terms: Terms, scale: Scalar) -> None:
    if not scale:
        return
    for ops, c in terms.items():
        value = c * scale
        if ops in out:
            value = out[ops] + value
            if value:
                out[ops] = value
            else:
                del out[ops]
        elif value:
            out[ops] = value


__all__ = [
    "BRACKET",
    "EngineLimits",
    "FORM",
    "GradingError",
    "ResourceLimitError",
    "WeylModule",
]
