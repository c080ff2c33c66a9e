"""Exact 3x3 matrix machinery and the three pure-regime linear solvers.

The single-move regime is driven by the all-ones-minus-identity operator A,
the forbidden-middle regime by the operator B.  Both have closed-form powers
(Jacobsthal entries for A, half-power-of-three entries for B); the generic
binary-exponentiation power serves as an independent oracle for them.

The three solvers iterate their one-step recurrences without ever taking a
minimum.  They describe a regime, not the optimum; the dynamic program in
``engine`` decides which regime wins at each level.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cost import Cost, CostLike, WeightTable, other_pegs
from .errors import InfiniteWeightError
from .sequences import half3, jacobsthal, jacobsthal_diff, parity

Row = tuple[int, int, int]


@dataclass(frozen=True)
class Mat3:
    """Immutable 3x3 matrix with exact integer entries."""

    rows: tuple[Row, Row, Row]

    @classmethod
    def identity(cls) -> "Mat3":
        return cls(((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    def __matmul__(self, other: "Mat3") -> "Mat3":
        a, b = self.rows, other.rows
        return Mat3(
            tuple(
                tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
                for i in range(3)
            )  # type: ignore[arg-type]
        )

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]


ONE_LDM_OPERATOR = Mat3(((0, 1, 1), (1, 0, 1), (1, 1, 0)))
FORBIDDEN_OPERATOR = Mat3(((0, 1, 1), (0, 3, 0), (1, 1, 0)))


def mat_power_generic(m: Mat3, n: int) -> Mat3:
    """M^n by exact binary exponentiation."""
    if n < 0:
        raise ValueError(f"matrix power needs n >= 0, got {n}")
    result = Mat3.identity()
    base = m
    while n:
        if n & 1:
            result = result @ base
        base = base @ base
        n >>= 1
    return result


def mat_a_power(n: int) -> Mat3:
    """Closed form of the single-move operator's n-th power.

    Diagonal entries are the Jacobsthal forward differences, off-diagonal
    entries the Jacobsthal numbers.
    """
    if n < 0:
        raise ValueError(f"matrix power needs n >= 0, got {n}")
    d, o = jacobsthal_diff(n), jacobsthal(n)
    return Mat3(((d, o, o), (o, d, o), (o, o, d)))


def mat_b_power(n: int) -> Mat3:
    """Closed form of the forbidden-middle operator's n-th power."""
    if n < 0:
        raise ValueError(f"matrix power needs n >= 0, got {n}")
    c, nn = parity(n), half3(n)
    return Mat3(((1 - c, nn, c), (0, 3**n, 0), (c, nn, 1 - c)))


@dataclass(frozen=True)
class CostVector:
    """Transfer costs indexed by idle peg.

    Component k is the cost of moving the tower between the two pegs other
    than k.
    """

    d0: Cost
    d1: Cost
    d2: Cost

    def __post_init__(self):
        for c in (self.d0, self.d1, self.d2):
            if not isinstance(c, Cost):
                raise TypeError("CostVector components must be Cost values")

    @classmethod
    def zero(cls) -> "CostVector":
        return cls(Cost.of(0), Cost.of(0), Cost.of(0))

    @classmethod
    def of(cls, d0: CostLike, d1: CostLike, d2: CostLike) -> "CostVector":
        return cls(Cost.of(d0), Cost.of(d1), Cost.of(d2))

    def component(self, idle: int) -> Cost:
        return (self.d0, self.d1, self.d2)[idle]

    def as_tuple(self) -> tuple[Cost, Cost, Cost]:
        return (self.d0, self.d1, self.d2)

    def swap02(self) -> "CostVector":
        return CostVector(self.d2, self.d1, self.d0)

    def __str__(self) -> str:
        return f"({self.d0}, {self.d1}, {self.d2})"


_OTHERS = tuple(other_pegs(k) for k in (0, 1, 2))


def _finite_row(weights: WeightTable, nu: int, pegs=(0, 1, 2)) -> list[Cost]:
    row = [weights.weight(nu, k) for k in (0, 1, 2)]
    for k in pegs:
        if row[k].is_infinite:
            raise InfiniteWeightError(
                f"weight for disc {nu + 1}, idle peg {k} is infinite; "
                "the pure-regime closed form does not apply"
            )
    return row


def solve_one_ldm(d0: CostVector, weights: WeightTable, n: int) -> CostVector:
    """Pure single-largest-disc-move regime: iterate d' = A d + w.

    No minimization takes place; the result is the optimum only where that
    regime is optimal at every level.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    d = d0.as_tuple()
    for nu in range(n):
        w = _finite_row(weights, nu)
        d = (
            d[1] + d[2] + w[0],
            d[0] + d[2] + w[1],
            d[0] + d[1] + w[2],
        )
    return CostVector(*d)


def solve_two_ldm(d0: CostVector, weights: WeightTable, n: int) -> CostVector:
    """Pure double-largest-disc-move regime: d' = 3d + b, decoupled per peg.

    The inhomogeneous term b has component k equal to the sum of the other
    two weights of its level.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    d = d0.as_tuple()
    for nu in range(n):
        w = _finite_row(weights, nu)
        d = tuple(d[k] * 3 + w[i] + w[j] for k, (i, j) in enumerate(_OTHERS))
    return CostVector(*d)


def solve_forbidden(d0: CostVector, weights: WeightTable, n: int) -> CostVector:
    """Linear (forbidden-middle) regime: d' = B d + v.

    Only the two side columns of the weight table are read; the idle-peg-1
    column may be infinite.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    d = d0.as_tuple()
    for nu in range(n):
        w = _finite_row(weights, nu, pegs=(0, 2))
        d = (
            d[1] + d[2] + w[0],
            d[1] * 3 + w[0] + w[2],
            d[0] + d[1] + w[2],
        )
    return CostVector(*d)


def apply_matrix(m: Mat3, vec: tuple[Fraction, Fraction, Fraction]) -> tuple:
    """Exact matrix-vector product (integers or rationals)."""
    return tuple(sum(m[i, k] * vec[k] for k in range(3)) for i in range(3))
