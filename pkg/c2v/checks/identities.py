"""Polynomial identities among the generators g₂…g₅ of 𝒜 ⊂ ℂ[y,z]."""

from __future__ import annotations

import logging
from typing import List, Tuple

import numpy as np

from c2v.checks.base import Check, CheckContext, CheckOutcome
from c2v.corpus import t_ring, x_ring
from c2v.poly import DerivationSpec, WPoly, derive, substitute, transport_derivation
from c2v.slices import ideal_slice, kernel_slice

logger = logging.getLogger(__name__)

G_NAMES = ("g2", "g3", "g4", "g5")
WBAR_G = ("Wbar2_g", "Wbar3_g", "Wbar4_g", "Wbar5_g")
G_W = ("g2_W", "g3_W", "g4_W", "g5_W")


def transported_action(ctx: CheckContext) -> DerivationSpec:
    """The W̄-coordinate derivation rewritten on t₂…t₅ through the dictionary."""
    c = ctx.corpus
    return transport_derivation(c["w3_on_x"], c.polys(*WBAR_G), c.polys(*G_W), "transported")


class RelationsVanish(Check):
    check_id = "C1"
    claim = "the three relations among g2..g5 vanish identically"
    kind = "symbolic"

    def run(self, ctx: CheckContext) -> CheckOutcome:
        c = ctx.corpus
        gens = c.polys(*G_NAMES)
        for name in ("rel1", "rel2", "rel3"):
            value = substitute(c[name], gens)
            if value:
                return CheckOutcome(False, f"{name}(g2, g3, g4, g5) = {value}")
        return CheckOutcome(True, f"rel1, rel2, rel3 vanish at t = g ({ctx.mode.label()})")


class TransportedDerivation(Check):
    check_id = "C3"
    claim = "the W-coordinate derivation transported to g-coordinates is the displayed one"
    kind = "symbolic"

    def run(self, ctx: CheckContext) -> CheckOutcome:
        c = ctx.corpus
        xs = x_ring(ctx.mode).gens()
        gens = c.polys(*G_NAMES)
        forward = c.polys(*WBAR_G)
        backward = c.polys(*G_W)
        for s, fwd, wbar in zip(range(2, 6), forward, c.polys("Wbar2", "Wbar3", "Wbar4", "Wbar5")):
            round_trip = substitute(fwd, backward)
            if round_trip != xs[s - 2]:
                return CheckOutcome(False, f"Wbar{s}_g(g_W) = {round_trip}, expected x{s}")
            image = substitute(fwd, gens)
            if image != wbar:
                return CheckOutcome(False, f"Wbar{s}_g(g) - Wbar{s} = {image - wbar}")
        moved = transported_action(ctx)
        displayed = c["w3_on_g"]
        for s, got, want in zip(range(2, 6), moved.images, displayed.images):
            if got != want:
                return CheckOutcome(False, f"t{s}: transported {got}, displayed {want}")
        return CheckOutcome(
            True, f"dictionary round trips hold; transported action on t2..t5 matches ({ctx.mode.label()})"
        )


class ScaledDerivationAgrees(Check):
    check_id = "C4"
    claim = "-6k*D restricted to A agrees with the transported derivation"
    kind = "symbolic"

    def run(self, ctx: CheckContext) -> CheckOutcome:
        c = ctx.corpus
        gens = c.polys(*G_NAMES)
        d = c["D"].scaled(-6 * ctx.mode.k)
        moved = transported_action(ctx)
        tring = t_ring(ctx.mode)

        samples: List[Tuple[int, ...]] = [tuple(int(i == s) for i in range(4)) for s in range(4)]
        rng = np.random.default_rng(ctx.limits.seed)
        while len(samples) < 4 + ctx.limits.random_products:
            exps = tuple(int(e) for e in rng.integers(0, 3, size=4))
            if any(exps):
                samples.append(exps)

        for exps in samples:
            t_mono = tring.monomial(exps)
            lhs = derive(d, substitute(t_mono, gens))
            rhs = substitute(derive(moved, t_mono), gens)
            if lhs != rhs:
                return CheckOutcome(False, f"on {t_mono} at t = g: difference {lhs - rhs}")
        logger.debug(f"C4: {len(samples)} products agree")
        return CheckOutcome(
            True,
            f"agree on g2..g5 and {ctx.limits.random_products} random products "
            f"(seed {ctx.limits.seed}, {ctx.mode.label()})",
        )


def _identity_block(ctx: CheckContext) -> List[Tuple[str, WPoly, Tuple[int, int]]]:
    t2, t3, t4, t5 = t_ring(ctx.mode).gens()
    k = ctx.mode.k
    return [
        ("z^2", t4, (0, 2)),
        ("y*z^2", t5, (1, 2)),
        ("z^3", (3 / (2 * k)) * t2 * t4 - (1 / (2 * k**3)) * (t2**3 - t3**2), (0, 3)),
        ("y*z^3", (1 / k) * (t2 * t5 - t3 * t4), (1, 3)),
    ]


class IdentityBlock(Check):
    check_id = "C21"
    claim = "z^2, yz^2, z^3, yz^3 written in g2..g5"
    kind = "symbolic"

    def run(self, ctx: CheckContext) -> CheckOutcome:
        gens = ctx.corpus.polys(*G_NAMES)
        ring = gens[0].ring
        for label, expression, exps in _identity_block(ctx):
            value = substitute(expression, gens)
            if value != ring.monomial(exps):
                return CheckOutcome(False, f"{label}: expression evaluates to {value}")
        return CheckOutcome(True, f"z^2, y*z^2, z^3, y*z^3 identities hold ({ctx.mode.label()})")


class RelationKernel(Check):
    check_id = "C22"
    claim = "the kernel of t_s -> g_s is generated by rel1, rel2, rel3"
    kind = "concrete"

    def run(self, ctx: CheckContext) -> CheckOutcome:
        c = ctx.corpus
        gens = c.polys(*G_NAMES)
        rels = c.polys("rel1", "rel2", "rel3")
        ring = t_ring(ctx.mode)
        cap = ctx.limits.kernel_weight_cap
        dims = []
        for n in range(cap + 1):
            kernel = kernel_slice(ring, gens, n)
            if n <= 7 and kernel.dim:
                return CheckOutcome(False, f"weight {n}: kernel contains {kernel.polys()[0]}")
            relations = ideal_slice(ring, rels, n)
            if not kernel.same_space(relations):
                return CheckOutcome(
                    False,
                    f"weight {n}: kernel dim {kernel.dim}, relation ideal dim {relations.dim}",
                )
            dims.append(kernel.dim)
        return CheckOutcome(
            True,
            f"kernel = (rel1, rel2, rel3) for n <= {cap}; no relations below weight 8; "
            f"kernel dims {dims[8:]} from n = 8",
        )


__all__ = [
    "IdentityBlock",
    "RelationKernel",
    "RelationsVanish",
    "ScaledDerivationAgrees",
    "TransportedDerivation",
    "transported_action",
]
