"""General minimizing solver over the two-branch optimality recurrence.

At each level the cost of transferring one more disc is the minimum of two
strategies: move the new largest disc once (recursing on the two transfers
that clear and re-stack the smaller tower) or move it twice via the idle peg
(recursing three times on the same transfer).  The solver records which
branch wins at every (level, idle peg), reconstructs witnessing move plans
from that trace, and locates the levels where the winning branch changes.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .cost import Cost, MinSide, WeightTable, cost_min, idle_peg, other_pegs, validate_peg
from .errors import IllegalMoveError, PlanSizeError, UnsolvableError
from .linalg import CostVector

DEFAULT_PLAN_CAP = 2**20  # moves; the all-single-move plan for 20 discs


class BranchChoice(enum.Enum):
    ONE_LDM = "one-ldm"  # largest disc moves once
    TWO_LDM = "two-ldm"  # largest disc moves twice
    TIE = "tie"  # both strategies cost exactly the same


_SIDE_TO_BRANCH = {
    MinSide.LEFT: BranchChoice.ONE_LDM,
    MinSide.RIGHT: BranchChoice.TWO_LDM,
    MinSide.TIE: BranchChoice.TIE,
}

BranchRow = tuple[BranchChoice, BranchChoice, BranchChoice]


@dataclass(frozen=True)
class BranchTrace:
    """Winning branch per (level, idle peg); level nu decides disc nu+1."""

    rows: tuple[BranchRow, ...]

    @property
    def n_levels(self) -> int:
        return len(self.rows)

    def choice(self, level: int, idle: int) -> BranchChoice:
        return self.rows[level][idle]

    def all_one_ldm(self, allow_ties: bool = True) -> bool:
        """True when no level strictly prefers the double-move branch."""
        allowed = {BranchChoice.ONE_LDM}
        if allow_ties:
            allowed.add(BranchChoice.TIE)
        return all(choice in allowed for row in self.rows for choice in row)


class Move(NamedTuple):
    disc: int  # 1-based
    source: int
    target: int


@dataclass(frozen=True)
class MovePlan:
    """An explicit, ordered sequence of single-disc moves."""

    moves: tuple[Move, ...]

    def __len__(self) -> int:
        return len(self.moves)

    def __iter__(self):
        return iter(self.moves)


@dataclass(frozen=True)
class State:
    """Peg assignment of every disc; entry m holds the peg of disc m+1.

    Any assignment is a legal state: smaller discs always sit above larger
    ones on their peg, so an n-disc puzzle has exactly 3^n states.
    """

    pegs: tuple[int, ...]

    def __post_init__(self):
        for p in self.pegs:
            validate_peg(p)

    @classmethod
    def perfect(cls, peg: int, n: int) -> "State":
        validate_peg(peg)
        return cls((peg,) * n)

    @property
    def n_discs(self) -> int:
        return len(self.pegs)

    def peg_of(self, disc: int) -> int:
        """Peg holding the 1-based disc."""
        return self.pegs[disc - 1]

    def top_disc(self, peg: int) -> int | None:
        """Smallest (topmost) disc on a peg, or None if the peg is empty."""
        for m, p in enumerate(self.pegs):
            if p == peg:
                return m + 1
        return None

    def apply(self, move: Move) -> "State":
        pegs = list(self.pegs)
        pegs[move.disc - 1] = move.target
        return State(tuple(pegs))


def dp_solve(weights: WeightTable, n: int) -> tuple[list[CostVector], BranchTrace]:
    """Exact minimal transfer costs for every level 0..n and idle peg.

    Infinite weights are handled by min-plus arithmetic; a level offering
    fewer than two usable move types makes every transfer of two or more
    discs impossible, which is reported as UnsolvableError rather than as
    infinite cost components.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    d = CostVector.zero()
    vectors = [d]
    rows: list[BranchRow] = []
    for nu in range(n):
        w = [weights.weight(nu, k) for k in (0, 1, 2)]
        if n >= 2 and sum(c.is_infinite for c in w) >= 2:
            raise UnsolvableError(
                f"disc {nu + 1} has at most one usable move type; "
                "no tower of two or more discs can be transferred"
            )
        values = []
        choices = []
        for k in (0, 1, 2):
            i, j = other_pegs(k)
            once = d.component(i) + d.component(j) + w[k]
            twice = d.component(k) * 3 + w[i] + w[j]
            best, side = cost_min(once, twice)
            values.append(best)
            choices.append(_SIDE_TO_BRANCH[side])
        d = CostVector(*values)
        vectors.append(d)
        rows.append(tuple(choices))  # type: ignore[arg-type]
    return vectors, BranchTrace(tuple(rows))


def _resolve(choice: BranchChoice, tie_policy: BranchChoice) -> BranchChoice:
    return tie_policy if choice is BranchChoice.TIE else choice


def _plan_lengths(trace: BranchTrace, tie_policy: BranchChoice) -> list[list[int]]:
    """Exact move counts per (level, idle peg) under the given trace."""
    lengths = [[0, 0, 0]]
    for level in range(trace.n_levels):
        prev = lengths[-1]
        row = []
        for k in (0, 1, 2):
            i, j = other_pegs(k)
            if _resolve(trace.choice(level, k), tie_policy) is BranchChoice.ONE_LDM:
                row.append(prev[i] + prev[j] + 1)
            else:
                row.append(3 * prev[k] + 2)
        lengths.append(row)
    return lengths


def iter_moves(
    weights: WeightTable,
    n: int,
    source: int,
    target: int,
    tie_policy: BranchChoice = BranchChoice.ONE_LDM,
) -> Iterator[Move]:
    """Stream an optimal plan's moves without materializing the plan.

    Memory use is O(n) regardless of plan length.
    """
    if tie_policy not in (BranchChoice.ONE_LDM, BranchChoice.TWO_LDM):
        raise ValueError("tie_policy must be ONE_LDM or TWO_LDM")
    if source == target:
        raise ValueError("source and target pegs must differ")
    _, trace = dp_solve(weights, n)

    def emit(m: int, a: int, b: int) -> Iterator[Move]:
        if m == 0:
            return
        k = idle_peg(a, b)
        if _resolve(trace.choice(m - 1, k), tie_policy) is BranchChoice.ONE_LDM:
            yield from emit(m - 1, a, k)
            yield Move(m, a, b)
            yield from emit(m - 1, k, b)
        else:
            yield from emit(m - 1, a, b)
            yield Move(m, a, k)
            yield from emit(m - 1, b, a)
            yield Move(m, k, b)
            yield from emit(m - 1, a, b)

    return emit(n, source, target)


def reconstruct_plan(
    weights: WeightTable,
    n: int,
    source: int,
    target: int,
    tie_policy: BranchChoice = BranchChoice.ONE_LDM,
    max_moves: int = DEFAULT_PLAN_CAP,
) -> MovePlan:
    """Materialize an optimal move plan for an n-tower transfer.

    The plan realizes the traced branch at every level, following
    ``tie_policy`` where both branches cost the same.  Plans longer than
    ``max_moves`` raise PlanSizeError; use :func:`iter_moves` for those.
    """
    if tie_policy not in (BranchChoice.ONE_LDM, BranchChoice.TWO_LDM):
        raise ValueError("tie_policy must be ONE_LDM or TWO_LDM")
    if source == target:
        raise ValueError("source and target pegs must differ")
    _, trace = dp_solve(weights, n)
    length = _plan_lengths(trace, tie_policy)[n][idle_peg(source, target)]
    if length > max_moves:
        raise PlanSizeError(
            f"plan has {length} moves, above the cap of {max_moves}; "
            "use iter_moves() to stream it"
        )
    return MovePlan(tuple(iter_moves(weights, n, source, target, tie_policy)))


def plan_cost(weights: WeightTable, plan: MovePlan, start: State) -> tuple[Cost, State]:
    """Validate a plan step by step and total its exact cost.

    Raises IllegalMoveError (with the step index) if a move takes a disc
    that is not the top of its source peg or lands it on a smaller disc.
    Returns the total cost together with the final state.
    """
    state = start
    total = Cost.of(0)
    for step, move in enumerate(plan):
        if not 1 <= move.disc <= state.n_discs:
            raise IllegalMoveError(step, f"disc {move.disc} does not exist")
        if state.peg_of(move.disc) != move.source:
            raise IllegalMoveError(
                step, f"disc {move.disc} is not on peg {move.source}"
            )
        if move.source == move.target:
            raise IllegalMoveError(step, "source and target pegs are equal")
        if state.top_disc(move.source) != move.disc:
            raise IllegalMoveError(
                step, f"disc {move.disc} is not the top of peg {move.source}"
            )
        resident = state.top_disc(move.target)
        if resident is not None and resident < move.disc:
            raise IllegalMoveError(
                step,
                f"disc {move.disc} cannot land on smaller disc {resident}",
            )
        total = total + weights.weight(move.disc - 1, idle_peg(move.source, move.target))
        state = state.apply(move)
    return total, state


def ldm_counts(plan: MovePlan) -> Counter:
    """How often each disc moves; missing discs count as zero."""
    return Counter(move.disc for move in plan)


@dataclass(frozen=True)
class PhaseReport:
    """Branch classification per level plus the levels where it switches.

    ``transitions[k]`` lists the levels whose (non-tie) branch differs from
    the previous non-tie branch for idle peg k; ``ties[k]`` lists the levels
    where both branches cost exactly the same.
    """

    trace: BranchTrace
    transitions: tuple[tuple[int, ...], ...]
    ties: tuple[tuple[int, ...], ...]


def detect_phase(weights: WeightTable, n_max: int) -> PhaseReport:
    """Locate strategy switches in the first ``n_max`` levels."""
    _, trace = dp_solve(weights, n_max)
    transitions = []
    ties = []
    for k in (0, 1, 2):
        trans_k: list[int] = []
        ties_k: list[int] = []
        last: BranchChoice | None = None
        for level in range(trace.n_levels):
            choice = trace.choice(level, k)
            if choice is BranchChoice.TIE:
                ties_k.append(level)
                continue
            if last is not None and choice is not last:
                trans_k.append(level)
            last = choice
        transitions.append(tuple(trans_k))
        ties.append(tuple(ties_k))
    return PhaseReport(trace, tuple(transitions), tuple(ties))
