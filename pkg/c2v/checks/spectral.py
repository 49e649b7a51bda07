"""Top-level eigenvalue checks for the weight-one matrix and the module labels."""

from __future__ import annotations

import logging
from collections import defaultdict
from fractions import Fraction
from math import lcm
from typing import Dict, List, Tuple

import numpy as np

from c2v.checks.base import Check, CheckContext, CheckOutcome
from c2v.matrix import charpoly
from c2v.poly import WPoly

logger = logging.getLogger(__name__)

# level -> label pairs whose o(W2), o(W3) eigenvalues coincide
SHARED_LABELS: Dict[int, Tuple[Tuple[int, int], Tuple[int, int]]] = {
    16: ((2, 1), (8, 0)),
    100: ((12, 1), (12, 11)),
}


def eigenvalues(k) -> List:
    """±6k²(k+2), ±6k²(3k+4) for a scalar or symbolic k."""
    a = 6 * k**2 * (k + 2)
    b = 6 * k**2 * (3 * k + 4)
    return [a, -a, b, -b]


class WeightOneSpectrum(Check):
    check_id = "C16"
    claim = "the weight-one matrix has characteristic polynomial (x^2 - a^2)(x^2 - b^2)"
    kind = "symbolic"

    def run(self, ctx: CheckContext) -> CheckOutcome:
        mode = ctx.mode
        k = mode.k
        m = ctx.corpus["a_rs"]
        trace = sum((m.entries[i][i] for i in range(m.rows)), mode.zero)
        if trace:
            return CheckOutcome(False, f"trace is {trace}")
        a2 = 36 * k**4 * (k + 2) ** 2
        b2 = 36 * k**4 * (3 * k + 4) ** 2
        expected = [mode.one, mode.zero, -(a2 + b2), mode.zero, a2 * b2]
        got = charpoly(m)
        if got != [mode.coerce(c) for c in expected]:
            return CheckOutcome(False, f"characteristic polynomial coefficients {[str(c) for c in got]}")
        witness = f"charpoly = x^4 - ({a2 + b2}) x^2 + ({a2 * b2}); eigenvalues ±6k^2(k+2), ±6k^2(3k+4)"
        if ctx.levels:
            shown = []
            for k0 in ctx.levels[:3]:
                a, _, b, _ = eigenvalues(k0)
                shown.append(f"k={k0}: {{±{a}, ±{b}}}")
            witness += "; " + ", ".join(shown)
        return CheckOutcome(True, witness)


def _integer_form(p: WPoly) -> Tuple[int, List[Tuple[Tuple[int, int], int]]]:
    """Clear denominators: returns (scale, integer terms) with scale * p integral."""
    scale = 1
    for _, c in p:
        scale = lcm(scale, Fraction(c).denominator)
    return scale, [(exps, int(Fraction(c) * scale)) for exps, c in p]


def _evaluate_grid(terms, i: np.ndarray, j: np.ndarray) -> np.ndarray:
    total = np.zeros_like(i)
    for (a, b), c in terms:
        total += c * np.power(i, a) * np.power(j, b)
    return total


class NoWeightOneModule(Check):
    check_id = "C17"
    claim = "no label (i, j) has o(W2) = 1 and o(W3) in the weight-one spectrum"

    def run(self, ctx: CheckContext) -> CheckOutcome:
        k = ctx.k
        c = ctx.corpus
        scale2, w2 = _integer_form(c["eig_W2"])
        scale3, w3 = _integer_form(c["eig_W3"])
        bound = ctx.limits.c17_band_factor * k
        axis = np.arange(-bound, bound + 1, dtype=np.int64)
        i, j = np.meshgrid(axis, axis, indexing="ij")
        on_w2 = _evaluate_grid(w2, i, j) == scale2
        values3 = _evaluate_grid(w3, i, j)
        box = (j >= 0) & (j < i) & (i <= k)
        in_box: List[Tuple[int, int, int]] = []
        in_band: List[Tuple[int, int, int]] = []
        for lam in eigenvalues(k):
            hits = on_w2 & (values3 == lam * scale3)
            for a, b in zip(i[hits & box].tolist(), j[hits & box].tolist()):
                in_box.append((a, b, lam))
            for a, b in zip(i[hits & ~box].tolist(), j[hits & ~box].tolist()):
                in_band.append((a, b, lam))
        if in_box:
            a, b, lam = in_box[0]
            return CheckOutcome(False, f"(i, j) = ({a}, {b}) solves the system for lambda = {lam}")
        witness = f"no integer solutions in search box 0 <= j < i <= {k}"
        if in_band:
            logger.info(f"C17 k={k}: {len(in_band)} solutions outside the label box")
            sample = ", ".join(f"({a}, {b}; {lam})" for a, b, lam in in_band[:4])
            witness += f"; band |i|, |j| <= {bound} has {len(in_band)}: {sample}"
        else:
            witness += f" or band |i|, |j| <= {bound}"
        return CheckOutcome(True, witness)


def shared_labels(ctx: CheckContext, k0: int) -> List[List[Tuple[int, int]]]:
    """Groups of labels 0 <= j < i <= k0 with identical o(W2), o(W3) eigenvalues."""
    c = ctx.corpus_at(k0)
    w2, w3 = c["eig_W2"], c["eig_W3"]
    groups: Dict[Tuple[Fraction, Fraction], List[Tuple[int, int]]] = defaultdict(list)
    for i in range(k0 + 1):
        for j in range(i):
            point = [Fraction(i), Fraction(j)]
            groups[(w2.evaluate(point), w3.evaluate(point))].append((i, j))
    return [labels for labels in groups.values() if len(labels) > 1]


class SharedEigenvalues(Check):
    check_id = "C18"
    claim = "k=16: (2,1), (8,0) and k=100: (12,1), (12,11) share o(W2), o(W3) eigenvalues"
    kind = "k-free"

    def run(self, ctx: CheckContext) -> CheckOutcome:
        parts = []
        for k0, (first, second) in SHARED_LABELS.items():
            groups = shared_labels(ctx, k0)
            group = next((g for g in groups if first in g), None)
            if group is None or second not in group:
                return CheckOutcome(False, f"k={k0}: {first} and {second} have different eigenvalues")
            c = ctx.corpus_at(k0)
            point = [Fraction(first[0]), Fraction(first[1])]
            parts.append(
                f"k={k0}: {first}, {second} share W2 = {c['eig_W2'].evaluate(point)}, "
                f"W3 = {c['eig_W3'].evaluate(point)} ({len(groups)} coinciding groups)"
            )
        return CheckOutcome(True, "; ".join(parts))


__all__ = [
    "NoWeightOneModule",
    "SHARED_LABELS",
    "SharedEigenvalues",
    "WeightOneSpectrum",
    "eigenvalues",
    "shared_labels",
]
