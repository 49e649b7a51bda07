from __future__ import annotations

import logging
from typing import Callable, List, Tuple

from c2v.checks.base import Check, CheckContext, CheckOutcome
from c2v.weyl.pbw import PBWVector
from c2v.weyl.states import (
    W2,
    W3,
    current_state,
    omega_aff,
    reduce_c2,
    state,
    to_yz,
    vacuum,
)

logger = logging.getLogger(__name__)


def w3_on_e2(ctx: CheckContext) -> PBWVector:
    """The displayed value of W3_1 e(-2)1."""
    mode = ctx.mode
    k = mode.k
    return state(
        mode,
        [
            (-3 * (5 * k**2 - 6 * k - 16), (2,), (1,), ()),
            (-3 * (7 * k**2 - 2 * k - 8), (1,), (2,), ()),
            (6 * (k + 2), (1, 1), (1,), ()),
            (-12 * k, (), (1, 1), (1,)),
            (6 * k * (k - 2) * (5 * k + 8), (), (3,), ()),
        ],
    )


class ModeIdentities(Check):
    check_id = "C19"
    claim = "vertex-operator spot identities for W2, W3 and the affine conformal vector"
    kind = "symbolic"
    min_k = 1

    def run(self, ctx: CheckContext) -> CheckOutcome:
        mode = ctx.mode
        engine = ctx.engine
        k = mode.k
        w2, w3 = W2(mode), W3(mode)
        one = vacuum(mode)
        e1 = current_state(mode, "e", 1)

        cases: List[Tuple[str, Callable[[], PBWVector], PBWVector]] = [
            ("W3_1 e(-2)1", lambda: engine.vector_mode(w3, 1, current_state(mode, "e", 2)), w3_on_e2(ctx)),
            ("W2_1 W3", lambda: engine.vector_mode(w2, 1, w3), w3.scale(3)),
            ("W3_1 h(-1)1", lambda: engine.vector_mode(w3, 1, current_state(mode, "h", 1)), PBWVector(mode)),
            ("W2_3 W2", lambda: engine.vector_mode(w2, 3, w2), one.scale((k - 1) / (k + 2))),
            ("W2_2 W3", lambda: engine.vector_mode(w2, 2, w3), PBWVector(mode)),
            ("W2_0 W3", lambda: engine.vector_mode(w2, 0, w3), engine.vector_mode(w3, -2, one)),
            ("omega_1 e(-1)1", lambda: engine.vector_mode(omega_aff(mode), 1, e1), e1),
        ]
        cases += [
            (f"h({n}) W3", lambda n=n: engine.current_mode("h", n, w3), PBWVector(mode))
            for n in range(4)
        ]
        for label, compute, expected in cases:
            got = compute()
            if got != expected:
                return CheckOutcome(False, f"{label} = {got.notation()}, expected {expected.notation()}")

        corpus = ctx.corpus
        for name, vector in (("Wbar2", w2), ("Wbar3", w3)):
            image = to_yz(reduce_c2(vector))
            if image != corpus[name]:
                return CheckOutcome(False, f"C2-image of W{name[-1]} is {image}, corpus {corpus[name]}")
        logger.debug(f"C19: engine cache {engine.cache_size()} entries")
        return CheckOutcome(
            True, f"{len(cases)} mode identities and the C2-images of W2, W3 hold ({mode.label()})"
        )


__all__ = ["ModeIdentities", "w3_on_e2"]
