"""Edge-count bounds for maximal graphs in beyond-planar classes.

All values are exact :class:`~fractions.Fraction` objects; nothing here
rounds.  Each bound is a linear function ``slope * n + offset`` defined for
n >= 5.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .classes import GraphClass
from .errors import Unsupported

__all__ = [
    "Column",
    "BoundKind",
    "LinearBound",
    "BoundsRow",
    "TABLE",
    "density_bound",
    "edge_ceiling",
]

MIN_ORDER = 5


class Column(enum.Enum):
    ONE_PLANAR = "1-planar"
    NIC_PLANAR = "NIC-planar"
    IC_PLANAR = "IC-planar"
    OUTER_ONE_PLANAR = "outer 1-planar"

    @classmethod
    def of(cls, value: Column | GraphClass) -> Column:
        if isinstance(value, Column):
            return value
        try:
            return _COLUMN_OF[value]
        except KeyError:
            raise Unsupported(f"no density bounds tabulated for {value.name}") from None


class BoundKind(enum.Enum):
    UPPER = "upper"
    UPPER_EXAMPLE = "upper_example"
    LOWER = "lower"
    LOWER_EXAMPLE = "lower_example"


@dataclass(frozen=True)
class LinearBound:
    slope: Fraction
    offset: Fraction

    def __call__(self, n: int) -> Fraction:
        return self.slope * n + self.offset

    def __str__(self) -> str:
        sign = "-" if self.offset < 0 else "+"
        return f"{self.slope}n {sign} {abs(self.offset)}"


def _lin(slope: str | int, offset: str | int) -> LinearBound:
    return LinearBound(Fraction(slope), Fraction(offset))


@dataclass(frozen=True)
class BoundsRow:
    """Upper bound, densest known example, lower bound, sparsest known example."""

    column: Column
    upper: LinearBound
    upper_example: LinearBound
    lower: LinearBound
    lower_example: LinearBound

    def formula(self, kind: BoundKind) -> LinearBound:
        return getattr(self, kind.value)

    def value(self, kind: BoundKind, n: int) -> Fraction:
        return self.formula(kind)(n)


TABLE: dict[Column, BoundsRow] = {
    Column.ONE_PLANAR: BoundsRow(
        Column.ONE_PLANAR,
        upper=_lin(4, -8),
        upper_example=_lin(4, -8),
        lower=_lin("20/9", "-10/3"),
        lower_example=_lin("45/17", "-84/17"),
    ),
    Column.NIC_PLANAR: BoundsRow(
        Column.NIC_PLANAR,
        upper=_lin("18/5", "-36/5"),
        upper_example=_lin("18/5", "-36/5"),
        lower=_lin("16/5", "-32/5"),
        lower_example=_lin("16/5", "-32/5"),
    ),
    Column.IC_PLANAR: BoundsRow(
        Column.IC_PLANAR,
        upper=_lin("13/4", -6),
        upper_example=_lin("13/4", -6),
        lower=_lin(3, -5),
        lower_example=_lin(3, -5),
    ),
    Column.OUTER_ONE_PLANAR: BoundsRow(
        Column.OUTER_ONE_PLANAR,
        upper=_lin("5/2", -2),
        upper_example=_lin("5/2", -2),
        lower=_lin("11/5", "-18/5"),
        lower_example=_lin("11/5", "-18/5"),
    ),
}

_COLUMN_OF = {
    GraphClass.ONE_PLANAR: Column.ONE_PLANAR,
    GraphClass.NIC_PLANAR: Column.NIC_PLANAR,
    GraphClass.IC_PLANAR: Column.IC_PLANAR,
}


def density_bound(cls: Column | GraphClass, kind: BoundKind, n: int) -> Fraction:
    """Exact value of one tabulated bound at order ``n`` (n >= 5)."""
    if n < MIN_ORDER:
        raise Unsupported(f"density bounds are tabulated for n >= {MIN_ORDER}, got {n}")
    if not isinstance(kind, BoundKind):
        raise Unsupported(f"unknown bound kind {kind!r}")
    return TABLE[Column.of(cls)].value(kind, n)


def edge_ceiling(cls: GraphClass, n: int) -> int | None:
    """Largest edge count any member of ``cls`` on ``n`` vertices can have.

    Used as a fast rejection before exhaustive search.  The upper-bound
    formulas hold for every n >= 3; below that no bound is returned.
    """
    if n < 3:
        return None
    if cls is GraphClass.PLANAR:
        return 3 * n - 6
    return math.floor(TABLE[Column.of(cls)].upper(n))
