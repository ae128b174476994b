"""Existence test and exact construction of the 2x2 building blocks.

A block A(x, a1, a2) has orthogonal rows, column squared norms a1^2, a2^2
and first-row squared norm x; its second row then squares to
y = a1^2 + a2^2 - x.  It exists iff a1^2 + a2^2 >= x > 0 and both column
masses lie on the same side of x.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BlockInfeasibleError
from .scalar import RadicalScalar, as_rational


@dataclass(frozen=True)
class BlockSpec:
    """First-row mass x and the two column squared norms, all positive."""

    x: Fraction
    a1_sq: Fraction
    a2_sq: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", as_rational(self.x))
        object.__setattr__(self, "a1_sq", as_rational(self.a1_sq))
        object.__setattr__(self, "a2_sq", as_rational(self.a2_sq))
        if self.x <= 0 or self.a1_sq <= 0 or self.a2_sq <= 0:
            raise ValueError("block masses must be positive")

    @property
    def y(self) -> Fraction:
        return self.a1_sq + self.a2_sq - self.x


@dataclass(frozen=True)
class Block2x2:
    """The constructed block; rows exactly orthogonal by sign opposition.

    ``degenerate`` marks a zero entry (a column mass equal to x),
    ``zero_second_row`` the y = 0 boundary where the orthogonality
    coefficient collapses to zero and the second row vanishes.
    """

    entries: tuple[tuple[RadicalScalar, RadicalScalar], tuple[RadicalScalar, RadicalScalar]]
    degenerate: bool
    zero_second_row: bool

    def row_sums_sq(self) -> tuple[Fraction, Fraction]:
        return tuple(e[0].square() + e[1].square() for e in self.entries)  # type: ignore[return-value]

    def col_sums_sq(self) -> tuple[Fraction, Fraction]:
        return (
            self.entries[0][0].square() + self.entries[1][0].square(),
            self.entries[0][1].square() + self.entries[1][1].square(),
        )


def block_exists(spec: BlockSpec) -> bool:
    """Existence conditions: mass a1^2+a2^2 >= x > 0, columns same side of x."""
    if not (spec.a1_sq + spec.a2_sq >= spec.x > 0):
        return False
    above = spec.a1_sq >= spec.x and spec.a2_sq >= spec.x
    below = spec.a1_sq <= spec.x and spec.a2_sq <= spec.x
    return above or below


def build_block(spec: BlockSpec) -> Block2x2:
    """Construct the block with top row nonnegative and bottom row (+, -).

    For x = y all four squared entries are x/2; otherwise
    alpha^2 = x(a1^2-y)/(x-y), beta^2 = x(x-a1^2)/(x-y) and the second row
    carries the same squares scaled by y/x, giving exactly cancelling
    cross terms.
    """
    if not (spec.a1_sq + spec.a2_sq >= spec.x > 0):
        raise BlockInfeasibleError(
            f"first-row mass {spec.x} exceeds total column mass "
            f"{spec.a1_sq + spec.a2_sq}",
            condition="positive-mass",
        )
    if not block_exists(spec):
        raise BlockInfeasibleError(
            f"column masses {spec.a1_sq}, {spec.a2_sq} straddle the row mass {spec.x}",
            condition="same-side",
        )
    x, a1, y = spec.x, spec.a1_sq, spec.y
    if x == y:
        half = x / 2
        top = RadicalScalar.sqrt(half)
        return Block2x2(
            entries=((top, top), (top, -top)),
            degenerate=False,
            zero_second_row=False,
        )
    d = x - y
    alpha = RadicalScalar.sqrt(x * (a1 - y) / d)
    beta = RadicalScalar.sqrt(x * (x - a1) / d)
    c_beta = RadicalScalar.sqrt(y * (x - a1) / d)
    c_alpha = RadicalScalar.sqrt(y * (a1 - y) / d)
    cells = (alpha, beta, c_beta, c_alpha)
    return Block2x2(
        entries=((alpha, beta), (c_beta, -c_alpha)),
        degenerate=any(c.is_zero() for c in cells),
        zero_second_row=(y == 0),
    )
