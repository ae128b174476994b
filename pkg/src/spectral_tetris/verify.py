"""Verification of synthesis matrices: exact where possible, float otherwise.

Row and column squared sums are always exact (sums of radicands).  Row
orthogonality is decided exactly by canonicalizing every cross-term
product to coefficient * sqrt(square-free) and requiring each group's
coefficients to cancel; in float mode the normalized inner product is
compared against a tolerance instead.  Frame bounds come from the row
sums when the frame operator is verified diagonal, and from a dense
symmetric eigensolver otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .construct import SynthesisMatrix
from .errors import FactorizationIncompleteError, ZeroRowError
from .readiness import FrameSpec
from .scalar import DEFAULT_FACTOR_BOUND, ZERO, RadicalScalar, canonicalize

DEFAULT_FLOAT_TOL = 1e-10


@dataclass(frozen=True)
class VerificationReport:
    """Exact sums, orthogonality verdict, sparsity and frame bounds.

    ``frame_bounds`` (min, max row sum) is populated only when the rows
    verified orthogonal, since only then is the frame operator diagonal.
    ``matches_spec`` is set when a target spec was supplied.
    """

    row_square_sums: tuple[Fraction, ...]
    col_square_sums: tuple[Fraction, ...]
    orthogonal: bool
    orthogonality_mode: str  # "exact" or "float(tol)"
    nnz: int
    frame_bounds: tuple[Fraction, Fraction] | None
    matches_spec: bool | None


def sparsity(matrix: SynthesisMatrix) -> tuple[int, int]:
    """(number of nonzero entries, maximum nonzeros in any column)."""
    per_column = [0] * matrix.count
    for (_, col) in matrix.entries:
        per_column[col] += 1
    return len(matrix.entries), max(per_column, default=0)


def _square_sums(matrix: SynthesisMatrix) -> tuple[list[Fraction], list[Fraction]]:
    rows = [ZERO] * matrix.dim
    cols = [ZERO] * matrix.count
    for (r, c), value in matrix.entries.items():
        rows[r] += value.square()
        cols[c] += value.square()
    return rows, cols


def _rows_orthogonal_exact(
    row_maps: list[dict[int, RadicalScalar]], factor_bound: int
) -> bool:
    for i in range(len(row_maps)):
        for j in range(i + 1, len(row_maps)):
            a, b = row_maps[i], row_maps[j]
            if len(b) < len(a):
                a, b = b, a
            groups: dict[int, Fraction] = {}
            for col, left in a.items():
                right = b.get(col)
                if right is None:
                    continue
                canon = canonicalize(left * right, factor_bound)
                key = canon.square_free
                groups[key] = groups.get(key, ZERO) + canon.coefficient
            if any(total != 0 for total in groups.values()):
                return False
    return True


def _rows_orthogonal_float(matrix: SynthesisMatrix, tol: float) -> bool:
    dense = matrix.to_float_rows()
    norms = [sum(x * x for x in row) ** 0.5 for row in dense]
    for i in range(matrix.dim):
        for j in range(i + 1, matrix.dim):
            inner = sum(x * y for x, y in zip(dense[i], dense[j]))
            if abs(inner) > tol * norms[i] * norms[j]:
                return False
    return True


def verify_matrix(
    matrix: SynthesisMatrix,
    spec: FrameSpec | None = None,
    mode: str = "exact",
    tol: float = DEFAULT_FLOAT_TOL,
    factor_bound: int = DEFAULT_FACTOR_BOUND,
) -> VerificationReport:
    """Full report; raises ZeroRowError when a row has no mass at all.

    In exact mode a FactorizationIncompleteError propagates so the caller
    can retry in float mode.
    """
    if mode not in ("exact", "float"):
        raise ValueError(f"mode must be 'exact' or 'float', got {mode!r}")
    row_sums, col_sums = _square_sums(matrix)
    for index, total in enumerate(row_sums):
        if total == 0:
            raise ZeroRowError(f"row {index} is zero; the lower frame bound fails")
    if mode == "exact":
        orthogonal = _rows_orthogonal_exact(matrix.row_entries(), factor_bound)
        mode_label = "exact"
    else:
        orthogonal = _rows_orthogonal_float(matrix, tol)
        mode_label = f"float({tol:g})"
    matches: bool | None = None
    if spec is not None:
        matches = (
            tuple(row_sums) == spec.eigenvalues
            and tuple(col_sums) == spec.norms_sq
            and orthogonal
        )
    return VerificationReport(
        row_square_sums=tuple(row_sums),
        col_square_sums=tuple(col_sums),
        orthogonal=orthogonal,
        orthogonality_mode=mode_label,
        nnz=len(matrix.entries),
        frame_bounds=(min(row_sums), max(row_sums)) if orthogonal else None,
        matches_spec=matches,
    )


def frame_bounds_float(
    matrix: SynthesisMatrix,
    tol: float = DEFAULT_FLOAT_TOL,
    factor_bound: int = DEFAULT_FACTOR_BOUND,
) -> tuple[float, float]:
    """Extreme eigenvalues of the frame operator as doubles.

    Exact row sums when the rows verify orthogonal (diagonal operator);
    otherwise a dense symmetric eigensolve at double precision (relative
    tolerance about 1e-9).
    """
    row_sums, _ = _square_sums(matrix)
    for index, total in enumerate(row_sums):
        if total == 0:
            raise ZeroRowError(f"row {index} is zero; the lower frame bound fails")
    try:
        orthogonal = _rows_orthogonal_exact(matrix.row_entries(), factor_bound)
    except FactorizationIncompleteError:
        orthogonal = _rows_orthogonal_float(matrix, tol)
    if orthogonal:
        return float(min(row_sums)), float(max(row_sums))
    import numpy as np

    dense = np.array(matrix.to_float_rows(), dtype=float)
    eigenvalues = np.linalg.eigvalsh(dense @ dense.T)
    return float(eigenvalues[0]), float(eigenvalues[-1])
