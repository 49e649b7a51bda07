"""Checks on the singular vector, its C₂-image f₀ and the f_r family."""

from __future__ import annotations

import logging
from math import factorial

from c2v.checks.base import Check, CheckContext, CheckOutcome, CheckSkipped
from c2v.corpus import y012_ring, yz_ring
from c2v.formulas import (
    f0_action_terms,
    f0_coefficient,
    q_brute,
    q_closed,
    singular_vector_normalisation,
)
from c2v.poly import WPoly, derive, jacobian, substitute
from c2v.slices import contains
from c2v.weyl.states import W3, e_power, reduce_c2, singular_vector, to_yz, zero_mode_oracle

logger = logging.getLogger(__name__)

Q_MAX_S = 16
Q_MAX_J = 8


def _require_weyl_level(ctx: CheckContext) -> None:
    cap = ctx.limits.weyl_level_cap
    if ctx.k > cap:
        raise CheckSkipped(f"Weyl straightening is limited to k <= {cap}, got k={ctx.k}")


class PathSum(Check):
    check_id = "C5"
    claim = "the weighted path sum Q(s, j) equals s!/(2^j (s-2j)! j!)"
    kind = "k-free"

    def run(self, ctx: CheckContext) -> CheckOutcome:
        count = 0
        for s in range(Q_MAX_S + 1):
            for j in range(min(Q_MAX_J, s // 2) + 1):
                brute, closed = q_brute(s, j), q_closed(s, j)
                if brute != closed:
                    return CheckOutcome(False, f"Q({s},{j}): summation {brute}, closed form {closed}")
                count += 1
        return CheckOutcome(True, f"{count} pairs (s <= {Q_MAX_S}, j <= {Q_MAX_J}) agree")


class ZeroModeAction(Check):
    check_id = "C6"
    claim = "f(0)^s e(-1)^n 1 reduces to the closed form; f(0)^(2n+1) e(-1)^n 1 = 0"
    min_k = 1

    def run(self, ctx: CheckContext) -> CheckOutcome:
        ring = y012_ring(ctx.mode)
        op = ctx.corpus["f0_op"]
        use_oracle = ctx.k <= ctx.limits.weyl_level_cap
        if not use_oracle:
            logger.info(f"C6 at k={ctx.k}: straightening skipped above level cap {ctx.limits.weyl_level_cap}")
        max_n = ctx.limits.oracle_max_n
        compared = 0
        for n in range(1, max_n + 1):
            iterated = ring.gen("y1") ** n
            for s in range(2 * n + 1):
                closed = WPoly(ring, f0_action_terms(n, s))
                if iterated != closed:
                    return CheckOutcome(
                        False, f"(n,s)=({n},{s}): operator gives {iterated}, closed form {closed}"
                    )
                if use_oracle:
                    oracle = zero_mode_oracle(n, s, ctx.mode, ctx.engine)
                    if oracle != closed:
                        return CheckOutcome(
                            False, f"(n,s)=({n},{s}): straightening gives {oracle}, closed form {closed}"
                        )
                compared += 1
                iterated = derive(op, iterated)
            if iterated:
                return CheckOutcome(False, f"n={n}: the operator power 2n+1 leaves {iterated}")
            if use_oracle:
                top = ctx.engine.power("f", 0, 2 * n + 1, e_power(ctx.mode, n))
                if top:
                    return CheckOutcome(False, f"f(0)^{2 * n + 1} e(-1)^{n} 1 = {top}")
        oracles = "closed form, operator and straightening" if use_oracle else "closed form and operator"
        return CheckOutcome(True, f"{compared} pairs with n <= {max_n} agree ({oracles})")


class SingularVectorImage(Check):
    check_id = "C7"
    claim = "f0 is the normalised C2-image of the singular vector"
    min_k = 1

    def run(self, ctx: CheckContext) -> CheckOutcome:
        _require_weyl_level(ctx)
        k = ctx.k
        f0 = ctx.corpus["f0"]
        for j in range((k + 1) // 2 + 1):
            got = f0.coefficient((k + 1 - 2 * j, j))
            if got != f0_coefficient(k, j):
                return CheckOutcome(False, f"coefficient of y^{k + 1 - 2 * j} z^{j} in f0 is {got}")
        u0 = singular_vector(k, ctx.engine, ctx.limits.singular_vector_cap)
        image = to_yz(reduce_c2(u0)).scale(singular_vector_normalisation(k))
        if image != f0:
            return CheckOutcome(False, f"normalised image {image} differs from f0 by {image - f0}")
        return CheckOutcome(True, f"(-1)^{k + 1}/{k + 1}! * reduced u0 = f0 ({len(u0)} PBW terms)")


class JacobianNonzero(Check):
    check_id = "C8"
    claim = "the Jacobian determinant of (f0, f1) is nonzero"

    def run(self, ctx: CheckContext) -> CheckOutcome:
        f0, f1 = ctx.corpus.polys("f0", "f1")
        jac = jacobian(f0, f1, "y", "z")
        if not jac:
            return CheckOutcome(False, "d(f0, f1)/d(y, z) = 0")
        exps, coeff = next(iter(jac))
        return CheckOutcome(
            True, f"Jacobian has {len(jac)} terms, leading y^{exps[0]} z^{exps[1]} with {coeff}"
        )


class LowRecursion(Check):
    check_id = "C9"
    claim = "f2 = p f0 + q f1, f3 = (Dp + pq) f0 + (p + Dq + q^2) f1, coefficients outside A"

    def run(self, ctx: CheckContext) -> CheckOutcome:
        c = ctx.corpus
        f0, f1, f2, f3, p, q = c.polys("f0", "f1", "f2", "f3", "p", "q")
        d = c["D"]
        if f2 != p * f0 + q * f1:
            return CheckOutcome(False, f"f2 - (p f0 + q f1) = {f2 - (p * f0 + q * f1)}")
        a3 = derive(d, p) + p * q
        b3 = p + derive(d, q) + q * q
        if f3 != a3 * f0 + b3 * f1:
            return CheckOutcome(False, f"f3 - (A f0 + B f1) = {f3 - (a3 * f0 + b3 * f1)}")
        for label, coeff in (("Dp + pq", a3), ("p + Dq + q^2", b3)):
            found = contains(ctx.ideals.algebra(coeff.weight()), coeff)
            if found.member:
                return CheckOutcome(False, f"{label} = {coeff} lies in A")
        return CheckOutcome(
            True, f"f2, f3 recursions hold; Dp + pq = {a3}; p + Dq + q^2 = {b3}; neither in A"
        )


class DerivationDeterminant(Check):
    check_id = "C10"
    claim = "det(D, E) = -k(y^2+4z)z, f0(y, -y^2/4) != 0, f0(y, 0) = y^(k+1)"

    def run(self, ctx: CheckContext) -> CheckOutcome:
        c = ctx.corpus
        ring = yz_ring(ctx.mode)
        y, z = ring.gens()
        k = ctx.mode.k
        d, e = c["D"], c["E"]
        det = d.images[0] * e.images[1] - d.images[1] * e.images[0]
        expected = -k * (y**2 + 4 * z) * z
        if det != expected:
            return CheckOutcome(False, f"determinant {det}, expected {expected}")
        f0 = c["f0"]
        on_parabola = substitute(f0, [y, y**2 * (ctx.mode.coerce(-1) / 4)])
        if not on_parabola:
            return CheckOutcome(False, "f0 vanishes on z = -y^2/4")
        for (a, b), coeff in f0:
            if (-1) ** b * coeff <= 0:
                return CheckOutcome(False, f"sign of the y^{a} z^{b} coefficient is {coeff}")
        on_axis = substitute(f0, [y, ring.zero()])
        if on_axis != y ** (ctx.k + 1):
            return CheckOutcome(False, f"f0(y, 0) = {on_axis}")
        return CheckOutcome(True, f"det = {det}; f0(y, -y^2/4) = {on_parabola}; f0(y, 0) = y^{ctx.k + 1}")


class SingularVectorBridge(Check):
    check_id = "C20"
    claim = "W3_1 u0 reduces to -6k (-1)^(k+1) (k+1)! f1"
    min_k = 1

    def run(self, ctx: CheckContext) -> CheckOutcome:
        _require_weyl_level(ctx)
        k = ctx.k
        u0 = singular_vector(k, ctx.engine, ctx.limits.singular_vector_cap)
        moved = ctx.engine.vector_mode(W3(ctx.mode), 1, u0)
        image = to_yz(reduce_c2(moved))
        constant = -6 * k * (-1) ** (k + 1) * factorial(k + 1)
        expected = ctx.corpus["f1"].scale(constant)
        if image != expected:
            return CheckOutcome(False, f"reduced W3_1 u0 differs from {constant}*f1 by {image - expected}")
        return CheckOutcome(True, f"reduced W3_1 u0 = {constant} * f1")


__all__ = [
    "DerivationDeterminant",
    "JacobianNonzero",
    "LowRecursion",
    "PathSum",
    "SingularVectorBridge",
    "SingularVectorImage",
    "ZeroModeAction",
]
