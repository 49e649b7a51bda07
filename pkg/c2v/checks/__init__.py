"""Check catalogue: one named, independently runnable check per claim.

Modules:
    base        Check ABC, CheckContext, CheckOutcome, TableRow
    identities  C1 C3 C4 C21 C22  identities among g₂…g₅
    singular    C5–C10 C20        singular vector, f₀ and the f_r family
    dimensions  C2 C11–C15        dimension tables of 𝒜, J, J∩𝒜, I_s
    spectral    C16–C18           weight-one matrix and module labels
    modes       C19               vertex-operator spot identities
"""

from __future__ import annotations

from typing import Dict, List

from c2v.checks.base import (
    KINDS,
    Check,
    CheckContext,
    CheckOutcome,
    CheckSkipped,
    TableRow,
)
from c2v.checks.dimensions import (
    AlgebraBasis,
    IdealsCoincide,
    IdealTables,
    QuotientDimension,
    SimpleQuotientCounts,
    SyzygyModule,
)
from c2v.checks.identities import (
    IdentityBlock,
    RelationKernel,
    RelationsVanish,
    ScaledDerivationAgrees,
    TransportedDerivation,
)
from c2v.checks.modes import ModeIdentities
from c2v.checks.singular import (
    DerivationDeterminant,
    JacobianNonzero,
    LowRecursion,
    PathSum,
    SingularVectorBridge,
    SingularVectorImage,
    ZeroModeAction,
)
from c2v.checks.spectral import NoWeightOneModule, SharedEigenvalues, WeightOneSpectrum

CATALOG: Dict[str, Check] = {
    check.check_id: check
    for check in (
        RelationsVanish(),
        AlgebraBasis(),
        TransportedDerivation(),
        ScaledDerivationAgrees(),
        PathSum(),
        ZeroModeAction(),
        SingularVectorImage(),
        JacobianNonzero(),
        LowRecursion(),
        DerivationDeterminant(),
        SyzygyModule(),
        IdealTables(),
        IdealsCoincide(),
        QuotientDimension(),
        SimpleQuotientCounts(),
        WeightOneSpectrum(),
        NoWeightOneModule(),
        SharedEigenvalues(),
        ModeIdentities(),
        SingularVectorBridge(),
        IdentityBlock(),
        RelationKernel(),
    )
}


def get_check(check_id: str) -> Check:
    return CATALOG[check_id.upper()]


def check_ids() -> List[str]:
    return list(CATALOG)


__all__ = [
    "CATALOG",
    "KINDS",
    "Check",
    "CheckContext",
    "CheckOutcome",
    "CheckSkipped",
    "TableRow",
    "check_ids",
    "get_check",
]
