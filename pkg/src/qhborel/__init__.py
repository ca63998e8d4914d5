"""Exact invariants of quasihereditary algebras and their regular exact Borel subalgebras."""

from .catalog import (
    FamilySpec,
    TiltingMultiplicities,
    generate,
    morita_twist,
    tilting_delta_multiplicities,
)
from .engine import (
    BorelDimensions,
    BorelProfile,
    ClassFlags,
    Good,
    LSequence,
    NotGood,
    VMatrix,
    borel_dimensions,
    borel_existence,
    borel_profile,
    class_flags,
    compute_l,
    compute_V,
    representative_multiplicities,
)
from .errors import *  # noqa: F401,F403
from .exactla import matvec_exact, unitriangular_solve
from .model import (
    FiltrationMatrices,
    QhData,
    Violation,
    filtration_matrices,
    from_json,
    to_json,
    validate,
)
from .poset import (
    Poset,
    PosetSpec,
    build_poset,
    immediate_predecessors,
    linear_extension,
    poset_stats,
)

__version__ = "0.1.0"
