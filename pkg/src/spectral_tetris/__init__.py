"""Sparse frame synthesis matrices with prescribed spectrum and vector
norms, constructed and verified in exact arithmetic."""

from .blocks import Block2x2, BlockSpec, block_exists, build_block
from .construct import (
    BlockKind,
    BlockRecord,
    SynthesisMatrix,
    UnitTightVerdict,
    equal_norm_frame,
    k_inequality_scan,
    pnstc,
    stc,
    unit_tight,
    unit_tight_feasible,
)
from .errors import (
    BlockInfeasibleError,
    ConstructionStuckError,
    DegenerateSpectrumError,
    FactorizationIncompleteError,
    InfeasibleError,
    InvalidDimsError,
    NotSortedError,
    OutOfRangeError,
    SpectralTetrisError,
    TraceMismatchError,
    ZeroRowError,
)
from .readiness import (
    FrameSpec,
    Partition,
    ReadinessReport,
    Violation,
    check_ready,
    easy_sufficient,
    forced_partition,
    majorizes,
    tight_ready,
    tight_sufficient,
    unit_ready,
)
from .scalar import (
    CanonicalRadical,
    RadicalScalar,
    Rational,
    canonicalize,
    format_rational,
    parse_rational,
    radical_mul,
    to_float,
)
from .search import SearchRequest, SearchResult, find_ready_orderings, is_any_ordering_ready
from .verify import VerificationReport, frame_bounds_float, sparsity, verify_matrix

__version__ = "0.1.0"

__all__ = [
    "Block2x2",
    "BlockInfeasibleError",
    "BlockKind",
    "BlockRecord",
    "BlockSpec",
    "CanonicalRadical",
    "ConstructionStuckError",
    "DegenerateSpectrumError",
    "FactorizationIncompleteError",
    "FrameSpec",
    "InfeasibleError",
    "InvalidDimsError",
    "NotSortedError",
    "OutOfRangeError",
    "Partition",
    "RadicalScalar",
    "Rational",
    "ReadinessReport",
    "SearchRequest",
    "SearchResult",
    "SpectralTetrisError",
    "SynthesisMatrix",
    "TraceMismatchError",
    "UnitTightVerdict",
    "VerificationReport",
    "Violation",
    "ZeroRowError",
    "block_exists",
    "build_block",
    "canonicalize",
    "check_ready",
    "easy_sufficient",
    "equal_norm_frame",
    "find_ready_orderings",
    "forced_partition",
    "format_rational",
    "frame_bounds_float",
    "is_any_ordering_ready",
    "k_inequality_scan",
    "majorizes",
    "parse_rational",
    "pnstc",
    "radical_mul",
    "sparsity",
    "stc",
    "tight_ready",
    "tight_sufficient",
    "to_float",
    "unit_ready",
    "unit_tight",
    "unit_tight_feasible",
    "verify_matrix",
]
