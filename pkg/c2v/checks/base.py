from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from c2v.arith import ScalarMode
from c2v.config import Limits
from c2v.corpus import Corpus, Mutation
from c2v.ideals import ParafermionIdeals
from c2v.weyl.engine import EngineLimits, WeylModule

KINDS = ("symbolic", "concrete", "k-free")


class CheckSkipped(Exception):
    """Raised by a check body that cannot run at the given level."""

    def __init__(self, reason: str) -> None:
        super().__init__(reason)
        self.reason = reason


@dataclass(frozen=True)
class TableRow:
    k: int
    n: int
    space: str
    dim_computed: int
    dim_formula: int

    @property
    def match(self) -> bool:
        return self.dim_computed == self.dim_formula

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "space": self.space,
            "dim_computed": self.dim_computed,
            "dim_formula": self.dim_formula,
            "match": "match" if self.match else "mismatch",
        }


@dataclass
class CheckOutcome:
    passed: bool
    witness: str
    rows: List[TableRow] = field(default_factory=list)


class CheckContext:
    """Everything a check body may use for one (check, k) task.

    ``k`` is None for symbolic and k-free runs; ``levels`` are the levels of
    the whole suite, used by symbolic checks to print instantiated witnesses.
    """

    def __init__(
        self,
        k: Optional[int],
        limits: Optional[Limits] = None,
        weight_cap: Optional[int] = None,
        mutations: Sequence[str] = (),
        levels: Sequence[int] = (),
    ) -> None:
        self.k = k
        self.limits = limits or Limits()
        self.weight_cap = weight_cap
        self.mutations: Tuple[Mutation, ...] = tuple(Mutation.parse(m) for m in mutations)
        self.levels = tuple(levels) or ((k,) if k is not None else ())
        self._corpus: Optional[Corpus] = None
        self._ideals: Optional[ParafermionIdeals] = None
        self._engine: Optional[WeylModule] = None

    @property
    def mode(self) -> ScalarMode:
        return ScalarMode.symbolic() if self.k is None else ScalarMode.concrete(self.k)

    @property
    def cap(self) -> int:
        if self.weight_cap is not None:
            return self.weight_cap
        if self.k is None:
            raise ValueError("the automatic weight cap needs a concrete level")
        return 2 * self.k + 6

    @property
    def corpus(self) -> Corpus:
        if self._corpus is None:
            self._corpus = Corpus(self.mode, self.mutations)
        return self._corpus

    def corpus_at(self, k0: int) -> Corpus:
        """A concrete corpus carrying the same mutations."""
        if self.k == k0:
            return self.corpus
        return Corpus(ScalarMode.concrete(k0), self.mutations)

    @property
    def ideals(self) -> ParafermionIdeals:
        if self._ideals is None:
            self._ideals = ParafermionIdeals(self.corpus)
        return self._ideals

    @property
    def engine(self) -> WeylModule:
        if self._engine is None:
            self._engine = self.engine_at(self.mode)
        return self._engine

    def engine_at(self, mode: ScalarMode) -> WeylModule:
        limits = EngineLimits(self.limits.weyl_max_weight, self.limits.weyl_max_terms)
        return WeylModule(mode, limits)


class Check(ABC):
    """One named claim, runnable on its own."""

    check_id: str = ""
    claim: str = ""
    kind: str = "concrete"
    min_k: int = 5

    def admits(self, k: Optional[int]) -> Optional[str]:
        """Reason the level is inadmissible, or None."""
        if k is not None and k < self.min_k:
            return f"{self.check_id} needs k >= {self.min_k}, got k={k}"
        return None

    @abstractmethod
    def run(self, ctx: CheckContext) -> CheckOutcome:
        raise NotImplementedError

    def describe(self) -> str:
        return f"{self.check_id:<4} [{self.kind}] {self.claim}"


def table_rows(k: int, space: str, computed: Sequence[int], formula) -> List[TableRow]:
    return [TableRow(k, n, space, dim, formula(k, n)) for n, dim in enumerate(computed)]


def first_mismatch(rows: Sequence[TableRow]) -> Optional[TableRow]:
    return next((row for row in rows if not row.match), None)


__all__ = [
    "Check",
    "CheckContext",
    "CheckOutcome",
    "CheckSkipped",
    "KINDS",
    "TableRow",
    "first_mismatch",
    "table_rows",
]
