"""Search for ready orderings of eigenvalue and norm multisets.

The constructor's run is fully determined by the pair of orderings, so
the search enumerates orderings directly by simulating the cursor: within
a row, a remaining norm with mass <= the residual may be placed as a
singleton; a larger one opens a 2x2 block whose partner must carry at
least the residual; the block's second-row mass is charged against the
next eigenvalue.  A partial assignment is abandoned the moment any of
those constraints fails, which decides whole families of orderings at
once.  Values are drawn per distinct magnitude, so permutations that only
swap equal values are enumerated once.

Three cheap heuristic orderings are tried before the exhaustive walk:
norms decreasing with eigenvalues increasing, both decreasing, and both
increasing.  The walk itself is budgeted by node count (deterministic,
unlike wall time).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .readiness import FrameSpec, check_ready
from .scalar import ZERO, as_rational

DEFAULT_BUDGET = 1_000_000
DEFAULT_MAX_RESULTS = 16

Ordering = tuple[Fraction, ...]
OrderingPair = tuple[Ordering, Ordering]  # (norms_sq, eigenvalues)


@dataclass(frozen=True)
class SearchRequest:
    """Multisets to order, with result and work limits."""

    norms_sq: tuple[Fraction, ...]
    eigenvalues: tuple[Fraction, ...]
    max_results: int = DEFAULT_MAX_RESULTS
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        object.__setattr__(self, "norms_sq", tuple(as_rational(v) for v in self.norms_sq))
        object.__setattr__(
            self, "eigenvalues", tuple(as_rational(v) for v in self.eigenvalues)
        )
        if sum(self.norms_sq, ZERO) != sum(self.eigenvalues, ZERO):
            raise ValueError("norm and eigenvalue multisets must have equal sums")
        if self.max_results < 1:
            raise ValueError("max_results must be positive")
        if self.budget < 1:
            raise ValueError("budget must be positive")


@dataclass(frozen=True)
class SearchResult:
    """Ready ordering pairs in lexicographic (eigenvalues, norms) order.

    ``exhausted`` is True only when every distinct ordering pair was
    decided; ``budget_exhausted`` marks a walk stopped by the node budget
    (the orderings found so far are still returned).
    """

    orderings: tuple[OrderingPair, ...]
    exhausted: bool
    budget_exhausted: bool = False
    nodes_used: int = 0


class _StopSearch(Exception):
    pass


@dataclass
class _Walk:
    norms: Counter
    eigs: Counter
    budget: int
    max_results: int
    found: set[OrderingPair] = field(default_factory=set)
    nodes: int = 0
    budget_hit: bool = False

    def charge(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            self.budget_hit = True
            raise _StopSearch

    def record(self, norm_seq: list[Fraction], eig_seq: list[Fraction]) -> None:
        self.found.add((tuple(norm_seq), tuple(eig_seq)))
        if len(self.found) >= self.max_results:
            raise _StopSearch

    def next_row(self, carry: Fraction, norm_seq: list, eig_seq: list) -> None:
        self.charge()
        if not self.eigs:
            if carry == 0 and not self.norms:
                self.record(norm_seq, eig_seq)
            return
        for value in sorted(self.eigs, reverse=True):
            residual = value - carry
            if residual < 0:
                continue
            self._take(self.eigs, value)
            eig_seq.append(value)
            if residual == 0:
                self.next_row(ZERO, norm_seq, eig_seq)
            else:
                self.fill_row(residual, norm_seq, eig_seq)
            eig_seq.pop()
            self._put(self.eigs, value)

    def fill_row(self, residual: Fraction, norm_seq: list, eig_seq: list) -> None:
        self.charge()
        distinct = sorted(self.norms, reverse=True)
        for value in distinct:
            if value <= residual:
                self._take(self.norms, value)
                norm_seq.append(value)
                remaining = residual - value
                if remaining == 0:
                    self.next_row(ZERO, norm_seq, eig_seq)
                else:
                    self.fill_row(remaining, norm_seq, eig_seq)
                norm_seq.pop()
                self._put(self.norms, value)
            else:
                # block: partner must carry at least the residual, and a
                # next eigenvalue must exist to absorb the second row
                if not self.eigs:
                    continue
                self._take(self.norms, value)
                norm_seq.append(value)
                for partner in sorted(self.norms, reverse=True):
                    if partner < residual:
                        break
                    self._take(self.norms, partner)
                    norm_seq.append(partner)
                    self.next_row(value + partner - residual, norm_seq, eig_seq)
                    norm_seq.pop()
                    self._put(self.norms, partner)
                norm_seq.pop()
                self._put(self.norms, value)

    @staticmethod
    def _take(counter: Counter, value) -> None:
        count = counter[value]
        if count == 1:
            del counter[value]
        else:
            counter[value] = count - 1

    @staticmethod
    def _put(counter: Counter, value) -> None:
        counter[value] += 1


def _heuristic_pairs(req: SearchRequest) -> list[OrderingPair]:
    norms_dec = tuple(sorted(req.norms_sq, reverse=True))
    norms_inc = tuple(sorted(req.norms_sq))
    eigs_dec = tuple(sorted(req.eigenvalues, reverse=True))
    eigs_inc = tuple(sorted(req.eigenvalues))
    candidates = [
        (norms_dec, eigs_inc),
        (norms_dec, eigs_dec),
        (norms_inc, eigs_inc),
    ]
    seen: set[OrderingPair] = set()
    unique = []
    for pair in candidates:
        if pair not in seen:
            seen.add(pair)
            unique.append(pair)
    return unique


def find_ready_orderings(req: SearchRequest) -> SearchResult:
    """Enumerate ready ordering pairs, heuristics first, then exhaustively."""
    walk = _Walk(
        norms=Counter(req.norms_sq),
        eigs=Counter(req.eigenvalues),
        budget=req.budget,
        max_results=req.max_results,
    )
    stopped_early = False
    for norms, eigs in _heuristic_pairs(req):
        if check_ready(FrameSpec(eigenvalues=eigs, norms_sq=norms)).ready:
            walk.found.add((norms, eigs))
            if len(walk.found) >= req.max_results:
                stopped_early = True
                break
    if not stopped_early:
        try:
            walk.next_row(ZERO, [], [])
        except _StopSearch:
            stopped_early = True
    ordered = tuple(sorted(walk.found, key=lambda pair: (pair[1], pair[0])))
    return SearchResult(
        orderings=ordered,
        exhausted=not stopped_early and not walk.budget_hit,
        budget_exhausted=walk.budget_hit,
        nodes_used=walk.nodes,
    )


def is_any_ordering_ready(req: SearchRequest) -> bool | None:
    """True / False when decided; None when the budget ran out first."""
    result = find_ready_orderings(
        SearchRequest(
            norms_sq=req.norms_sq,
            eigenvalues=req.eigenvalues,
            max_results=1,
            budget=req.budget,
        )
    )
    if result.orderings:
        return True
    if result.exhausted:
        return False
    return None
