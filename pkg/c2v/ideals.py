"""Cached weight slices of ℂ[y,z], 𝒜 = ℂ[g₂,…,g₅] and the ideals J, J∩𝒜, I_s."""

from __future__ import annotations

import logging
from typing import Callable, Dict, List, Tuple

from c2v.corpus import Corpus, yz_ring
from c2v.poly import WPoly
from c2v.slices import (
    CodimResult,
    ProductCache,
    SliceBasis,
    full_slice,
    graded_codim,
    intersect,
    module_slice,
    subalgebra_slice,
    syzygy_slice,
)

logger = logging.getLogger(__name__)


class ParafermionIdeals:
    """Weight slices of the graded objects attached to one concrete level.

    Every slice is computed on first use and kept for the lifetime of the
    instance.
    """

    def __init__(self, corpus: Corpus) -> None:
        if corpus.mode.is_symbolic:
            raise ValueError("ideal slices need a concrete level")
        self.corpus = corpus
        self.k = corpus.mode.level
        self.ring = yz_ring(corpus.mode)
        self.generators = corpus.polys("g2", "g3", "g4", "g5")
        self._products = ProductCache(self.generators)
        self._slices: Dict[Tuple[str, int], SliceBasis] = {}

    def _cached(self, key: Tuple[str, int], build: Callable[[], SliceBasis]) -> SliceBasis:
        if key not in self._slices:
            self._slices[key] = build()
            logger.debug(f"k={self.k} {key[0]}_({key[1]}) dim {self._slices[key].dim}")
        return self._slices[key]

    def f(self, r: int) -> WPoly:
        return self.corpus.get(f"f{r}")

    def ambient(self, n: int) -> SliceBasis:
        return self._cached(("C[y,z]", n), lambda: full_slice(self.ring, n))

    def algebra(self, n: int) -> SliceBasis:
        return self._cached(
            ("A", n), lambda: subalgebra_slice(self.generators, n, self._products)
        )

    def J(self, n: int) -> SliceBasis:
        k = self.k
        return self._cached(
            ("J", n),
            lambda: module_slice(
                [self.ambient(n - k - 1), self.ambient(n - k - 2)], [self.f(0), self.f(1)], n
            ),
        )

    def J_cap_A(self, n: int) -> SliceBasis:
        return self._cached(("J∩A", n), lambda: intersect(self.J(n), self.algebra(n)))

    def I(self, s: int, n: int) -> SliceBasis:
        """Weight-n slice of the ideal of 𝒜 generated by f_0, …, f_{s-1}."""
        if s < 1:
            raise ValueError(f"I_s needs s >= 1, got {s}")
        k = self.k
        return self._cached(
            (f"I{s}", n),
            lambda: module_slice(
                [self.algebra(n - k - 1 - r) for r in range(s)],
                [self.f(r) for r in range(s)],
                n,
            ),
        )

    def syzygies(self, n: int) -> SliceBasis:
        return self._cached(("Ker", n), lambda: syzygy_slice([self.f(0), self.f(1)], n))

    def space(self, name: str, n: int) -> SliceBasis:
        """Slice by table name: C[y,z], A, J, J∩A, I2, I3, I4."""
        if name == "C[y,z]":
            return self.ambient(n)
        if name == "A":
            return self.algebra(n)
        if name == "J":
            return self.J(n)
        if name == "J∩A":
            return self.J_cap_A(n)
        if name.startswith("I") and name[1:].isdigit():
            return self.I(int(name[1:]), n)
        raise KeyError(f"unknown graded space: {name}")

    def codim(self, sub: str, ambient: str, cap: int) -> CodimResult:
        weights = range(cap + 1)
        return graded_codim(
            {n: self.space(sub, n) for n in weights},
            {n: self.space(ambient, n) for n in weights},
            cap,
        )

    def dims(self, name: str, cap: int) -> List[int]:
        return [self.space(name, n).dim for n in range(cap + 1)]


__all__ = ["ParafermionIdeals"]
