"""Exact move-cost arithmetic and weight tables.

Costs are nonnegative rationals extended with an absorbing infinity that
marks forbidden moves.  All arithmetic is exact: finite values are Python
ints or ``fractions.Fraction``, never floats.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Callable, Iterable, Sequence, Union

CostLike = Union["Cost", int, str, Fraction]

PEGS = (0, 1, 2)


def validate_peg(peg: int) -> int:
    if peg not in (0, 1, 2):
        raise ValueError(f"peg must be 0, 1 or 2, got {peg!r}")
    return peg


def idle_peg(source: int, target: int) -> int:
    """The peg not involved in a move between ``source`` and ``target``."""
    validate_peg(source)
    validate_peg(target)
    if source == target:
        raise ValueError("source and target pegs must differ")
    return 3 - source - target


def other_pegs(idle: int) -> tuple[int, int]:
    """The two pegs taking part in a move with the given idle peg."""
    validate_peg(idle)
    i, j = (p for p in PEGS if p != idle)
    return i, j


class Cost:
    """An exact nonnegative cost, or INFINITY.

    Supports addition (infinity absorbing), multiplication by a nonnegative
    integer, and total-order comparison with infinity maximal.
    """

    __slots__ = ("_v",)

    def __init__(self, value: int | Fraction | None):
        # None encodes infinity; use Cost.of() for validated construction.
        self._v = value

    @classmethod
    def of(cls, value: CostLike) -> "Cost":
        """Build a cost from an int, Fraction, Cost, or string.

        Strings are exact rationals ("7", "3/2") or "inf".  Floats are
        rejected: there is no approximate path through this package.
        """
        if isinstance(value, Cost):
            return value
        if isinstance(value, float):
            raise TypeError("costs are exact; floats are not accepted")
        if isinstance(value, str):
            text = value.strip().lower()
            if text in ("inf", "infinity"):
                return INFINITY
            value = Fraction(text)
        if isinstance(value, Fraction):
            if value < 0:
                raise ValueError(f"costs must be nonnegative, got {value}")
            return cls(int(value) if value.denominator == 1 else value)
        if isinstance(value, int):
            if value < 0:
                raise ValueError(f"costs must be nonnegative, got {value}")
            return cls(value)
        raise TypeError(f"cannot build a Cost from {type(value).__name__}")

    @property
    def is_infinite(self) -> bool:
        return self._v is None

    @property
    def raw(self) -> int | Fraction | None:
        """Underlying exact value; None for infinity."""
        return self._v

    def as_fraction(self) -> Fraction:
        if self._v is None:
            raise ValueError("infinite cost has no rational value")
        return Fraction(self._v)

    def __add__(self, other: "Cost") -> "Cost":
        if not isinstance(other, Cost):
            return NotImplemented
        if self._v is None or other._v is None:
            return INFINITY
        return Cost(self._v + other._v)

    def __mul__(self, k: int) -> "Cost":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            raise ValueError("cost scaling factor must be nonnegative")
        if k == 0:
            return ZERO  # empty sum, even for infinity
        if self._v is None:
            return INFINITY
        return Cost(self._v * k)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Cost) and self._v == other._v

    def __lt__(self, other: "Cost") -> bool:
        if not isinstance(other, Cost):
            return NotImplemented
        if self._v is None:
            return False
        if other._v is None:
            return True
        return self._v < other._v

    def __le__(self, other: "Cost") -> bool:
        return self == other or self < other

    def __gt__(self, other: "Cost") -> bool:
        if not isinstance(other, Cost):
            return NotImplemented
        return other < self

    def __ge__(self, other: "Cost") -> bool:
        return self == other or other < self

    def __hash__(self) -> int:
        return hash(self._v)

    def __str__(self) -> str:
        return "inf" if self._v is None else str(self._v)

    def __repr__(self) -> str:
        return f"Cost({self})"


ZERO = Cost(0)
INFINITY = Cost(None)


class MinSide(enum.Enum):
    """Which argument of a two-way minimum was attained."""

    LEFT = "left"
    RIGHT = "right"
    TIE = "tie"


def cost_add(a: CostLike, b: CostLike) -> Cost:
    return Cost.of(a) + Cost.of(b)


def cost_min(a: CostLike, b: CostLike) -> tuple[Cost, MinSide]:
    """Exact minimum plus a witness of which side attained it."""
    ca, cb = Cost.of(a), Cost.of(b)
    if ca == cb:
        return ca, MinSide.TIE
    return (ca, MinSide.LEFT) if ca < cb else (cb, MinSide.RIGHT)


class WeightTable:
    """Move costs keyed by (disc index, idle peg).

    Entry (nu, k) is the cost of moving disc nu+1 between the two pegs other
    than k.  Keying on the idle peg alone makes costs direction-independent
    by construction.
    """

    def __init__(self, fn: Callable[[int, int], CostLike], max_disc: int | None = None):
        self._fn = fn
        self.max_disc = max_disc

    def weight(self, disc_index: int, idle: int) -> Cost:
        """Cost of one move of disc ``disc_index + 1`` with idle peg ``idle``."""
        if disc_index < 0:
            raise ValueError(f"disc index must be >= 0, got {disc_index}")
        if self.max_disc is not None and disc_index >= self.max_disc:
            raise ValueError(
                f"disc index {disc_index} out of range; table covers {self.max_disc} discs"
            )
        validate_peg(idle)
        return Cost.of(self._fn(disc_index, idle))

    def row(self, disc_index: int) -> tuple[Cost, Cost, Cost]:
        """The three per-idle-peg costs for one disc."""
        return tuple(self.weight(disc_index, k) for k in PEGS)  # type: ignore[return-value]

    @classmethod
    def constant(cls, w0: CostLike, w1: CostLike, w2: CostLike) -> "WeightTable":
        """Same cost triple for every disc."""
        triple = (Cost.of(w0), Cost.of(w1), Cost.of(w2))
        return cls(lambda nu, k: triple[k])

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[CostLike]]) -> "WeightTable":
        """Explicit per-disc rows; disc indices beyond the last row are errors."""
        table = [tuple(Cost.of(w) for w in row) for row in rows]
        for row in table:
            if len(row) != 3:
                raise ValueError("each weight row needs exactly three entries")
        return cls(lambda nu, k: table[nu][k], max_disc=len(table))

    @classmethod
    def from_function(
        cls, fn: Callable[[int, int], CostLike], max_disc: int | None = None
    ) -> "WeightTable":
        return cls(fn, max_disc=max_disc)

    def swap_sides(self) -> "WeightTable":
        """Table with the roles of pegs 0 and 2 interchanged.

        Swapping the pegs swaps the idle-peg-0 and idle-peg-2 columns.
        """
        swap = (2, 1, 0)
        return WeightTable(lambda nu, k: self._fn(nu, swap[k]), max_disc=self.max_disc)
