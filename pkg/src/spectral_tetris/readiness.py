"""Exact feasibility tests for ordered eigenvalue / squared-norm sequences.

The central predicate is :func:`check_ready`.  For fixed orderings the cut
indices m_k are forced: m_k is the unique index with
``A(m_k) <= L(k) < A(m_k + 1)`` where A and L are the prefix sums of the
squared norms and the eigenvalues.  Readiness then reduces to a single
scan: whenever row k has a positive deficit ``d_k = L(k) - A(m_k)`` it must
end with a 2x2 block over columns m_k+1, m_k+2, which requires

* the gap condition ``m_(k+1) >= m_k + 2`` (equivalently the block's
  second-row mass fits into eigenvalue k+1), and
* the norm bound ``a_(m_k+2)^2 >= d_k`` (the block exists).

Consecutive cuts may coincide when a row completes exactly and the next
row opens with an immediate block; that configuration constructs fine, so
the scan does not force strictly increasing cuts.

Also here: the quick sufficient screens for sorted sequences, the
constant-spectrum (tight) and unit-norm reformulations, and the
majorization existence test (which is constructor-independent).
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import accumulate

from .errors import NotSortedError, TraceMismatchError
from .scalar import ZERO, as_rational


def _rational_tuple(values) -> tuple[Fraction, ...]:
    return tuple(as_rational(v) for v in values)


@dataclass(frozen=True)
class FrameSpec:
    """Target eigenvalues (length N) and squared norms (length M).

    All values must be positive rationals.  The trace identity
    ``sum(norms_sq) == sum(eigenvalues)`` is *not* enforced here so that
    the readiness check can report a mismatch as a verdict; operations
    that need it check it themselves.
    """

    eigenvalues: tuple[Fraction, ...]
    norms_sq: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "eigenvalues", _rational_tuple(self.eigenvalues))
        object.__setattr__(self, "norms_sq", _rational_tuple(self.norms_sq))
        if not self.eigenvalues or not self.norms_sq:
            raise ValueError("eigenvalues and squared norms must be nonempty")
        if any(v <= 0 for v in self.eigenvalues):
            raise ValueError("eigenvalues must be positive")
        if any(v <= 0 for v in self.norms_sq):
            raise ValueError("squared norms must be positive")

    @property
    def dim(self) -> int:
        return len(self.eigenvalues)

    @property
    def count(self) -> int:
        return len(self.norms_sq)

    def trace_gap(self) -> Fraction:
        """sum(norms_sq) - sum(eigenvalues); zero iff the trace identity holds."""
        return sum(self.norms_sq, ZERO) - sum(self.eigenvalues, ZERO)


class Violation(Enum):
    TRACE_MISMATCH = "trace-mismatch"
    UPPER_BOUND_I = "upper-bound-i"
    GAP_II = "gap-ii"
    NORM_BOUND_II = "norm-bound-ii"


@dataclass(frozen=True)
class Partition:
    """Cut indices m_1 <= ... <= m_N = M (counts of consumed columns)."""

    cuts: tuple[int, ...]

    def __post_init__(self):
        if any(b < a for a, b in zip(self.cuts, self.cuts[1:])):
            raise ValueError("cuts must be nondecreasing")
        if self.cuts and self.cuts[0] < 0:
            raise ValueError("cuts must be nonnegative")


@dataclass(frozen=True)
class ReadinessReport:
    """Verdict plus the forced partition and the first violated condition.

    ``violation`` is ``(k, condition)`` with k the 1-based row index
    (k = 0 for a trace mismatch, which is not row-specific).
    """

    ready: bool
    partition: Partition | None
    violation: tuple[int, Violation] | None
    detail: str = ""


def _prefix_sums(values: tuple[Fraction, ...]) -> list[Fraction]:
    return list(accumulate(values, initial=ZERO))


def _forced_cuts(spec: FrameSpec) -> list[int]:
    norm_prefix = _prefix_sums(spec.norms_sq)
    eig_prefix = _prefix_sums(spec.eigenvalues)
    cuts = [bisect_right(norm_prefix, eig_prefix[k]) - 1 for k in range(1, spec.dim)]
    cuts.append(spec.count)
    return cuts


def forced_partition(spec: FrameSpec) -> Partition:
    """The unique cut indices satisfying the prefix-sum sandwich.

    Requires the trace identity (raises TraceMismatchError otherwise);
    existence and uniqueness of each cut then follow from positivity.
    """
    if spec.trace_gap() != 0:
        raise TraceMismatchError(
            f"squared norms sum to {sum(spec.norms_sq)}, eigenvalues to {sum(spec.eigenvalues)}"
        )
    return Partition(tuple(_forced_cuts(spec)))


def check_ready(spec: FrameSpec) -> ReadinessReport:
    """Decide whether the constructor succeeds on this exact ordering."""
    gap = spec.trace_gap()
    if gap != 0:
        return ReadinessReport(
            ready=False,
            partition=None,
            violation=(0, Violation.TRACE_MISMATCH),
            detail=f"squared norms exceed eigenvalues by {gap}",
        )
    norm_prefix = _prefix_sums(spec.norms_sq)
    eig_prefix = _prefix_sums(spec.eigenvalues)
    cuts = _forced_cuts(spec)
    partition = Partition(tuple(cuts))
    m_count = spec.count
    for k in range(1, spec.dim):
        m_k = cuts[k - 1]
        deficit = eig_prefix[k] - norm_prefix[m_k]
        if deficit == 0:
            continue
        if m_k + 2 > m_count:
            return ReadinessReport(
                ready=False,
                partition=partition,
                violation=(k, Violation.GAP_II),
                detail=f"row {k} needs a block over columns {m_k + 1}, {m_k + 2} "
                f"but only {m_count} columns exist",
            )
        second = spec.norms_sq[m_k + 1]
        if second < deficit:
            return ReadinessReport(
                ready=False,
                partition=partition,
                violation=(k, Violation.NORM_BOUND_II),
                detail=f"column {m_k + 2} squared norm {second} < deficit {deficit}",
            )
        if cuts[k] < m_k + 2:
            return ReadinessReport(
                ready=False,
                partition=partition,
                violation=(k, Violation.GAP_II),
                detail=f"cuts {m_k}, {cuts[k]} at rows {k}, {k + 1} leave no room "
                f"for the block",
            )
    return ReadinessReport(ready=True, partition=partition, violation=None)


def _require_sorted(values: tuple[Fraction, ...], *, increasing: bool, what: str) -> None:
    pairs = zip(values, values[1:])
    ok = all(a <= b for a, b in pairs) if increasing else all(a >= b for a, b in pairs)
    if not ok:
        direction = "increasing" if increasing else "decreasing"
        raise NotSortedError(f"{what} must be sorted {direction}")


def easy_sufficient(spec: FrameSpec) -> bool:
    """Quick screen for sorted-increasing sequences.

    True iff the trace identity holds and, for each l = 0..N-1,
    ``a_(M-2l-1)^2 + a_(M-2l)^2 <= lambda_(N-l)``.  When only the lower
    index falls off the front the surviving single term must still fit;
    the condition is skipped only when both indices do.  True implies
    :func:`check_ready` accepts the ordering.
    """
    _require_sorted(spec.eigenvalues, increasing=True, what="eigenvalues")
    _require_sorted(spec.norms_sq, increasing=True, what="squared norms")
    if spec.trace_gap() != 0:
        return False
    m_count, dim = spec.count, spec.dim
    for ell in range(dim):
        hi = m_count - 2 * ell  # 1-based index of the larger term
        if hi < 1:
            continue
        pair = spec.norms_sq[hi - 1]
        if hi - 1 >= 1:
            pair += spec.norms_sq[hi - 2]
        if pair > spec.eigenvalues[dim - ell - 1]:
            return False
    return True


def tight_bound(norms_sq, dim: int) -> Fraction:
    """The tight frame bound: total squared norm divided by the dimension."""
    values = _rational_tuple(norms_sq)
    if dim < 1:
        raise ValueError("dimension must be positive")
    return sum(values, ZERO) / dim


def tight_sufficient(norms_sq, dim: int) -> bool:
    """Pair screen for sorted-decreasing norms: a1^2 + a2^2 <= tight bound.

    This is the advertised quick test; it is not exact.  See
    ``tests/test_readiness.py`` for a pinned ordering it accepts that the
    exact scan rejects.
    """
    values = _rational_tuple(norms_sq)
    _require_sorted(values, increasing=False, what="squared norms")
    bound = tight_bound(values, dim)
    pair = values[0] + (values[1] if len(values) > 1 else ZERO)
    return pair <= bound


def tight_ready(norms_sq, dim: int) -> ReadinessReport:
    """Exact readiness of an ordering against the constant tight spectrum."""
    values = _rational_tuple(norms_sq)
    bound = tight_bound(values, dim)
    return check_ready(FrameSpec(eigenvalues=(bound,) * dim, norms_sq=values))


def unit_ready(eigenvalues, count: int) -> ReadinessReport:
    """Readiness with all squared norms equal to 1.

    Requires ``sum(eigenvalues) == count``.  With unit norms the block
    norm bound is automatic (every deficit is < 1), so only the prefix
    condition and the gap condition can fail.
    """
    values = _rational_tuple(eigenvalues)
    if sum(values, ZERO) != count:
        raise TraceMismatchError(
            f"eigenvalues sum to {sum(values)} but {count} unit vectors were requested"
        )
    return check_ready(FrameSpec(eigenvalues=values, norms_sq=(Fraction(1),) * count))


def majorizes(eigenvalues, norms_sq) -> bool:
    """Existence test for *some* frame with these parameters.

    True iff, with both sequences sorted decreasing, every partial sum of
    the eigenvalues dominates the corresponding partial sum of the squared
    norms and the totals agree.  Independent of any particular
    construction.
    """
    eig = sorted(_rational_tuple(eigenvalues), reverse=True)
    nsq = sorted(_rational_tuple(norms_sq), reverse=True)
    if sum(eig, ZERO) != sum(nsq, ZERO):
        return False
    eig_acc = ZERO
    nsq_acc = ZERO
    for n in range(len(eig)):
        eig_acc += eig[n]
        if n < len(nsq):
            nsq_acc += nsq[n]
        if nsq_acc > eig_acc:
            return False
    return True
