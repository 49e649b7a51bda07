"""Dimension tables of the graded spaces attached to f₀, f₁ and 𝒜."""

from __future__ import annotations

import logging
from typing import List

from c2v.checks.base import Check, CheckContext, CheckOutcome, TableRow, first_mismatch, table_rows
from c2v.formulas import (
    CODIM_FORMULAS,
    DIMENSION_FORMULAS,
    charge_zero_basis,
    dim_algebra,
    dim_module_free,
    dim_rl_charge_zero,
    dim_syzygy,
    dim_yz,
    gaussian_bracket_holds,
    rl_basis,
    rl_count,
)
from c2v.slices import (
    NonContainmentError,
    StabilizationError,
    contains,
    contains_slice,
    pair_span_slice,
    span_slice,
)

logger = logging.getLogger(__name__)

IDEAL_SPACES = ("J", "J∩A", "I2", "I3", "I4")


def _mismatch(rows: List[TableRow]) -> str:
    row = first_mismatch(rows)
    return f"dim {row.space}_({row.n}) = {row.dim_computed}, formula {row.dim_formula} (k={row.k})"


class AlgebraBasis(Check):
    check_id = "C2"
    claim = "dim A_(n) = [n/2] for n >= 2 with the explicit basis"

    def run(self, ctx: CheckContext) -> CheckOutcome:
        ideals = ctx.ideals
        k = ctx.k
        ring = ideals.ring
        y, z = ring.gens()
        rows = table_rows(k, "C[y,z]", ideals.dims("C[y,z]", ctx.cap), lambda k, n: dim_yz(n))
        rows += table_rows(k, "A", ideals.dims("A", ctx.cap), lambda k, n: dim_algebra(n))
        if first_mismatch(rows):
            return CheckOutcome(False, _mismatch(rows), rows)
        for n in range(ctx.cap + 1):
            if n == 0:
                basis = [ring.one()]
            elif n == 1:
                basis = []
            else:
                basis = [y**n - n * k * y ** (n - 2) * z]
                basis += [y ** (n - 2 * j) * z**j for j in range(2, n // 2 + 1)]
            explicit = span_slice(basis, n, ring)
            if explicit.dim != len(basis) or not explicit.same_space(ideals.algebra(n)):
                return CheckOutcome(False, f"explicit basis does not span A_({n})", rows)
        return CheckOutcome(True, f"A_(n) dims and explicit bases agree for n <= {ctx.cap}", rows)


class SyzygyModule(Check):
    check_id = "C11"
    claim = "relations a f0 + b f1 = 0 are multiples of (f1, -f0)"

    def run(self, ctx: CheckContext) -> CheckOutcome:
        ideals = ctx.ideals
        k = ctx.k
        top = ctx.cap + 4
        f0, f1 = ideals.f(0), ideals.f(1)
        computed = []
        for n in range(top + 1):
            syz = ideals.syzygies(n)
            computed.append(syz.dim)
            logger.debug(f"C11 k={k} n={n}: relation module dim {syz.dim}")
            multipliers = ideals.ambient(n - 2 * k - 3).polys()
            generated = pair_span_slice([(m * f1, -(m * f0)) for m in multipliers], syz)
            if not generated.same_space(syz):
                return CheckOutcome(
                    False, f"weight {n}: relations of dim {syz.dim}, multiples of (f1, -f0) span {generated.dim}"
                )
            free = dim_module_free(k, n)
            if ideals.J(n).dim != free - syz.dim:
                return CheckOutcome(
                    False, f"weight {n}: dim J = {ideals.J(n).dim} but {free} - {syz.dim} expected"
                )
        rows = table_rows(k, "Ker", computed, dim_syzygy)
        if first_mismatch(rows):
            return CheckOutcome(False, _mismatch(rows), rows)
        for n in range(2 * k + 3, top + 1):
            if not gaussian_bracket_holds(k, n):
                return CheckOutcome(False, f"bracket identity fails at n={n}", rows)
        return CheckOutcome(
            True, f"relation module generated by (f1, -f0) for n <= {top}; sequence exact", rows
        )


class IdealTables(Check):
    check_id = "C12"
    claim = "piecewise dimensions of J, J∩A, I2, I3, I4 and their codimensions"

    def run(self, ctx: CheckContext) -> CheckOutcome:
        ideals = ctx.ideals
        k = ctx.k
        rows: List[TableRow] = []
        for name in IDEAL_SPACES:
            rows += table_rows(k, name, ideals.dims(name, ctx.cap), DIMENSION_FORMULAS[name])
        if first_mismatch(rows):
            return CheckOutcome(False, _mismatch(rows), rows)
        for n in range(ctx.cap + 1):
            for small, big in (("I2", "I3"), ("I3", "I4")):
                if not contains_slice(ideals.space(small, n), ideals.space(big, n)):
                    return CheckOutcome(False, f"{small}_({n}) is not inside {big}_({n})", rows)
        parts = []
        for (sub, ambient), formula in CODIM_FORMULAS.items():
            try:
                total = ideals.codim(sub, ambient, ctx.cap).total
            except (NonContainmentError, StabilizationError) as exc:
                return CheckOutcome(False, f"{ambient}/{sub}: {exc}", rows)
            if total != formula(k):
                return CheckOutcome(False, f"dim {ambient}/{sub} = {total}, formula {formula(k)}", rows)
            parts.append(f"dim {ambient}/{sub} = {total}")
        return CheckOutcome(True, "; ".join(parts), rows)


class IdealsCoincide(Check):
    check_id = "C13"
    claim = "f4..f8 lie in I4 and J∩A = I4"

    def run(self, ctx: CheckContext) -> CheckOutcome:
        ideals = ctx.ideals
        k = ctx.k
        last = ctx.limits.c13_max_r
        for r in range(4, last + 1):
            found = contains(ideals.I(4, k + 1 + r), ideals.f(r))
            if not found.member:
                exps, value = found.witness
                return CheckOutcome(
                    False, f"f{r} not in I4_({k + 1 + r}): residual {value} at y^{exps[0]} z^{exps[1]}"
                )
        for s in (2, 3):
            if contains(ideals.I(s, k + 1 + s), ideals.f(s)).member:
                return CheckOutcome(False, f"f{s} already lies in I{s}")
        for n in range(ctx.cap + 1):
            if not ideals.J_cap_A(n).same_space(ideals.I(4, n)):
                return CheckOutcome(
                    False,
                    f"weight {n}: dim J∩A = {ideals.J_cap_A(n).dim}, dim I4 = {ideals.I(4, n).dim}",
                )
        return CheckOutcome(
            True, f"f4..f{last} in I4; f2 not in I2, f3 not in I3; J∩A = I4 for n <= {ctx.cap}"
        )


class QuotientDimension(Check):
    check_id = "C14"
    claim = "dim A/I4 = k(k+1)/2"

    def run(self, ctx: CheckContext) -> CheckOutcome:
        k = ctx.k
        try:
            result = ctx.ideals.codim("I4", "A", ctx.cap)
        except (NonContainmentError, StabilizationError) as exc:
            return CheckOutcome(False, str(exc))
        expected = k * (k + 1) // 2
        onset = ctx.cap
        while onset > 0 and result.per_weight[onset - 1] == 0:
            onset -= 1
        if result.total != expected:
            return CheckOutcome(False, f"dim R_W = {result.total}, expected {expected}")
        low, high = result.window
        return CheckOutcome(
            True, f"dim R_W = {result.total}; zero from n = {onset}, checked on [{low}, {high}]"
        )


class SimpleQuotientCounts(Check):
    check_id = "C15"
    claim = "R_L basis count and charge-zero slice dimensions; J slices from R_L"

    def run(self, ctx: CheckContext) -> CheckOutcome:
        k = ctx.k
        basis = list(rl_basis(k))
        if len(basis) != rl_count(k):
            return CheckOutcome(False, f"{len(basis)} basis monomials, formula {rl_count(k)}")
        charge_zero = []
        for n in range(ctx.cap + 1):
            from_basis = sum(1 for p, q, r in basis if q == r and p + 2 * q == n)
            listed = sum(1 for _ in charge_zero_basis(k, n))
            if from_basis != listed:
                return CheckOutcome(False, f"weight {n}: {from_basis} charge-zero monomials, listed {listed}")
            charge_zero.append(listed)
        rows = table_rows(k, "R_L^0", charge_zero, dim_rl_charge_zero)
        rows += table_rows(
            k, "J (from R_L)", ctx.ideals.dims("J", ctx.cap), lambda k, n: dim_yz(n) - dim_rl_charge_zero(k, n)
        )
        if first_mismatch(rows):
            return CheckOutcome(False, _mismatch(rows), rows)
        return CheckOutcome(
            True, f"{len(basis)} monomials; charge-zero dims {charge_zero}", rows
        )


__all__ = [
    "AlgebraBasis",
    "IdealTables",
    "IdealsCoincide",
    "QuotientDimension",
    "SimpleQuotientCounts",
    "SyzygyModule",
]
