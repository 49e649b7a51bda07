"""PBW monomials and vectors of the vacuum Weyl module V(k,0)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterator, List, Mapping, Tuple

from c2v.arith import RatFuncK, Scalar, ScalarMode

H, E, F = 0, 1, 2
LETTERS = ("h", "e", "f")

# A creation mode a(-d) is stored as (letter, d); a monomial is the sorted
# tuple of its modes, h before e before f and deeper modes first in a block.
Op = Tuple[int, int]
Ops = Tuple[Op, ...]


def letter_index(a) -> int:
    if isinstance(a, int) and a in (H, E, F):
        return a
    try:
        return LETTERS.index(a)
    except ValueError:
        raise ValueError(f"current must be one of h, e, f; got {a!r}") from None


def op_key(op: Op) -> Tuple[int, int]:
    return op[0], -op[1]


def ops_weight(ops: Ops) -> int:
    return sum(d for _, d in ops)


def ops_charge(ops: Ops) -> int:
    return sum(2 if a == E else -2 if a == F else 0 for a, _ in ops)


@dataclass(frozen=True)
class PBWMonomial:
    """h(-i…)e(-j…)f(-m…)1 with each block non-increasing."""

    h_modes: Tuple[int, ...] = ()
    e_modes: Tuple[int, ...] = ()
    f_modes: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        for name, block in (("h", self.h_modes), ("e", self.e_modes), ("f", self.f_modes)):
            if any(d < 1 for d in block):
                raise ValueError(f"{name} modes must be positive, got {block}")
            if list(block) != sorted(block, reverse=True):
                raise ValueError(f"{name} modes must be non-increasing, got {block}")

    @classmethod
    def from_ops(cls, ops: Ops) -> "PBWMonomial":
        blocks: List[List[int]] = [[], [], []]
        for a, d in ops:
            blocks[a].append(d)
        return cls(*(tuple(b) for b in blocks))

    @property
    def ops(self) -> Ops:
        return (
            tuple((H, d) for d in self.h_modes)
            + tuple((E, d) for d in self.e_modes)
            + tuple((F, d) for d in self.f_modes)
        )

    @property
    def weight(self) -> int:
        return sum(self.h_modes) + sum(self.e_modes) + sum(self.f_modes)

    @property
    def charge(self) -> int:
        return 2 * (len(self.e_modes) - len(self.f_modes))

    def notation(self) -> str:
        return ops_notation(self.ops)


def ops_notation(ops: Ops) -> str:
    parts: List[str] = []
    i = 0
    while i < len(ops):
        j = i
        while j < len(ops) and ops[j] == ops[i]:
            j += 1
        a, d = ops[i]
        power = j - i
        parts.append(f"{LETTERS[a]}(-{d})" + (f"^{power}" if power > 1 else ""))
        i = j
    return "".join(parts) + "1"


class PBWVector:
    """Finite linear combination of PBW monomials with nonzero coefficients."""

    __slots__ = ("mode", "terms")

    def __init__(self, mode: ScalarMode, terms: Mapping[Ops, object] = None) -> None:
        self.mode = mode
        clean: Dict[Ops, Scalar] = {}
        for ops, c in (terms or {}).items():
            c = mode.coerce(c)
            if c:
                clean[tuple(ops)] = c
        self.terms = clean

    @classmethod
    def vacuum(cls, mode: ScalarMode) -> "PBWVector":
        return cls(mode, {(): 1})

    @classmethod
    def monomial(cls, mode: ScalarMode, monomial: PBWMonomial, c=1) -> "PBWVector":
        return cls(mode, {monomial.ops: c})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[PBWMonomial, Scalar]]:
        for ops in sorted(self.terms, key=_sort_key):
            yield PBWMonomial.from_ops(ops), self.terms[ops]

    def coefficient(self, monomial: PBWMonomial) -> Scalar:
        return self.terms.get(monomial.ops, self.mode.zero)

    def weights(self) -> List[int]:
        return sorted({ops_weight(ops) for ops in self.terms})

    def charges(self) -> List[int]:
        return sorted({ops_charge(ops) for ops in self.terms})

    def _check(self, other: "PBWVector") -> None:
        if self.mode != other.mode:
            raise ValueError(f"vectors in modes {self.mode.label()} and {other.mode.label()}")

    def __add__(self, other: "PBWVector") -> "PBWVector":
        if not isinstance(other, PBWVector):
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for ops, c in other.terms.items():
            terms[ops] = terms[ops] + c if ops in terms else c
        return PBWVector(self.mode, terms)

    def __neg__(self) -> "PBWVector":
        return PBWVector(self.mode, {ops: -c for ops, c in self.terms.items()})

    def __sub__(self, other: "PBWVector") -> "PBWVector":
        if not isinstance(other, PBWVector):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "PBWVector":
        c = self.mode.coerce(c)
        return PBWVector(self.mode, {ops: c * x for ops, x in self.terms.items()})

    def __rmul__(self, c) -> "PBWVector":
        if isinstance(c, PBWVector):
            return NotImplemented
        return self.scale(c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PBWVector):
            return NotImplemented
        return self.mode == other.mode and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def notation(self) -> str:
        """Print as e.g. ``6*(k + 2) h(-1)^2e(-1)1 - 12*k e(-1)^2f(-1)1``."""
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self:
            coeff = str(c)
            if isinstance(c, RatFuncK) and not c.is_constant:
                coeff = f"({coeff})"
            if c == 1:
                parts.append(mono.notation())
            elif c == -1:
                parts.append(f"-{mono.notation()}")
            else:
                parts.append(f"{coeff}*{mono.notation()}")
        return " + ".join(parts).replace("+ -", "- ")

    def __str__(self) -> str:
        return self.notation()

    def __repr__(self) -> str:
        return f"PBWVector({self.notation()})"


def _sort_key(ops: Ops):
    return (-ops_weight(ops), [op_key(op) for op in ops])


__all__ = [
    "E",
    "F",
    "H",
    "LETTERS",
    "Op",
    "Ops",
    "PBWMonomial",
    "PBWVector",
    "letter_index",
    "op_key",
    "ops_charge",
    "ops_notation",
    "ops_weight",
]
