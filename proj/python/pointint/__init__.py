"""Transfer matrices and scattering for one-dimensional point interactions."""

from ._core import (
    ConnectionParams,
    DegenerateModes,
    Error,
    InvalidParameter,
    ModePair,
    ModesRequireFreeSpace,
    NotConnectionForm,
    ScatteringResult,
    SingularProjection,
    SingularRenormalization,
    analysis,
    as_matrix,
    conserves_current,
    decompose,
    delta_connection,
    dirac,
    epsilon_connection,
    run_cli,
    scatter,
    schrodinger,
)

__all__ = [
    "ConnectionParams",
    "DegenerateModes",
    "Error",
    "InvalidParameter",
    "ModePair",
    "ModesRequireFreeSpace",
    "NotConnectionForm",
    "ScatteringResult",
    "SingularProjection",
    "SingularRenormalization",
    "analysis",
    "as_matrix",
    "conserves_current",
    "decompose",
    "delta_connection",
    "dirac",
    "epsilon_connection",
    "run_cli",
    "scatter",
    "schrodinger",
]
