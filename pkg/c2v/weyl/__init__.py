"""Mode calculus on the level-k vacuum Weyl module of affine sl₂."""

from c2v.weyl.engine import (
    BRACKET,
    FORM,
    EngineLimits,
    GradingError,
    ResourceLimitError,
    WeylModule,
)
from c2v.weyl.pbw import E, F, H, LETTERS, PBWMonomial, PBWVector
from c2v.weyl.states import (
    SINGULAR_VECTOR_CAP,
    W2,
    W3,
    RangeError,
    current_state,
    e_power,
    from_yz,
    omega_aff,
    reduce_c2,
    singular_vector,
    state,
    to_yz,
    vacuum,
    zero_mode_oracle,
)

__all__ = [
    "BRACKET",
    "E",
    "EngineLimits",
    "F",
    "FORM",
    "GradingError",
    "H",
    "LETTERS",
    "PBWMonomial",
    "PBWVector",
    "RangeError",
    "ResourceLimitError",
    "SINGULAR_VECTOR_CAP",
    "W2",
    "W3",
    "WeylModule",
    "current_state",
    "e_power",
    "from_yz",
    "omega_aff",
    "reduce_c2",
    "singular_vector",
    "state",
    "to_yz",
    "vacuum",
    "zero_mode_oracle",
]
