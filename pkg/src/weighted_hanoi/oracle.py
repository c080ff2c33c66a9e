"""Brute-force ground truth on the full state graph.

States are encoded as base-3 integers (digit m = peg of disc m+1), so an
n-disc puzzle has exactly 3^n vertices.  Distances come from a label-setting
search ordered by exact cost with state index as the deterministic
tie-breaker; optimal solutions are counted by accumulating over the
shortest-path DAG with arbitrary-precision integers.
"""

from __future__ import annotations

import csv
from heapq import heappop, heappush
from typing import IO, Iterator

from .cost import Cost, WeightTable
from .engine import Move, MovePlan, State
from .errors import OracleCapError, UnboundedCountError, UnsolvableError
from .linalg import CostVector

ORACLE_CAP_DEFAULT = 10  # 3^10 = 59049 states

_PAIRS = ((0, 1), (0, 2), (1, 2))


def state_index(state: State) -> int:
    """Base-3 encoding; digit m is the peg of disc m+1."""
    idx = 0
    for m, p in enumerate(state.pegs):
        idx += p * 3**m
    return idx


def index_to_state(idx: int, n: int) -> State:
    pegs = []
    for _ in range(n):
        pegs.append(idx % 3)
        idx //= 3
    return State(tuple(pegs))


def _raw_rows(weights: WeightTable, n: int) -> list[tuple]:
    """Per-disc raw costs (int/Fraction, None for forbidden moves)."""
    return [tuple(weights.weight(nu, k).raw for k in (0, 1, 2)) for nu in range(n)]


def _edges(s: int, n: int, pow3: list[int], raw: list[tuple]) -> Iterator[tuple]:
    """Yield (neighbor index, raw cost, Move) for every legal move from s."""
    tops: list[int | None] = [None, None, None]
    found = 0
    t = s
    for m in range(n):
        p = t % 3
        t //= 3
        if tops[p] is None:
            tops[p] = m
            found += 1
            if found == 3:
                break
    for i, j in _PAIRS:
        ti, tj = tops[i], tops[j]
        if ti is None and tj is None:
            continue
        if tj is None or (ti is not None and ti < tj):
            m, a, b = ti, i, j
        else:
            m, a, b = tj, j, i
        k = 3 - i - j
        w = raw[m][k]
        if w is None:
            continue
        yield s + (b - a) * pow3[m], w, Move(m + 1, a, b)


def neighbors(state: State, weights: WeightTable) -> list[tuple[State, Cost, Move]]:
    """All states one legal move away, with the move and its cost.

    Moves with infinite weight are omitted.
    """
    n = state.n_discs
    pow3 = [3**m for m in range(n)]
    raw = _raw_rows(weights, n)
    return [
        (index_to_state(v, n), Cost.of(w), move)
        for v, w, move in _edges(state_index(state), n, pow3, raw)
    ]


def _check_cap(n: int, max_discs: int) -> None:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n > max_discs:
        raise OracleCapError(
            f"{n} discs exceed the oracle cap of {max_discs} (3^{n} states); "
            "raise max_discs explicitly to override"
        )


def _search(
    weights: WeightTable,
    n: int,
    source_idx: int,
    target_idx: int | None,
    want_prev: bool,
) -> tuple[list, list]:
    """Label-setting search from source; stops early at target if given."""
    pow3 = [3**m for m in range(n)]
    raw = _raw_rows(weights, n)
    size = 3**n
    dist: list = [None] * size
    prev: list = [None] * size if want_prev else []
    dist[source_idx] = 0
    heap: list[tuple] = [(0, source_idx)]
    settled = bytearray(size)
    while heap:
        d, u = heappop(heap)
        if settled[u]:
            continue
        settled[u] = 1
        if u == target_idx:
            break
        for v, w, move in _edges(u, n, pow3, raw):
            nd = d + w
            if dist[v] is None or nd < dist[v]:
                dist[v] = nd
                if want_prev:
                    prev[v] = (u, move)
                heappush(heap, (nd, v))
    return dist, prev


def dijkstra(
    weights: WeightTable,
    n: int,
    source: State,
    target: State,
    max_discs: int = ORACLE_CAP_DEFAULT,
) -> tuple[Cost, MovePlan]:
    """Exact minimal cost between two states plus one witnessing plan."""
    _check_cap(n, max_discs)
    if source.n_discs != n or target.n_discs != n:
        raise ValueError("source and target states must have exactly n discs")
    s, t = state_index(source), state_index(target)
    if s == t:
        return Cost.of(0), MovePlan(())
    dist, prev = _search(weights, n, s, t, want_prev=True)
    if dist[t] is None:
        raise UnsolvableError(
            "no route between the given states; too many move types are forbidden"
        )
    moves = []
    u = t
    while u != s:
        u, move = prev[u]
        moves.append(move)
    moves.reverse()
    return Cost.of(dist[t]), MovePlan(tuple(moves))


def oracle_cost_vector(
    weights: WeightTable, n: int, max_discs: int = ORACLE_CAP_DEFAULT
) -> CostVector:
    """Perfect-state distances packaged like the solver output.

    Component k is the transfer between the two pegs other than k.
    """
    d = []
    for k in (0, 1, 2):
        i, j = (p for p in (0, 1, 2) if p != k)
        cost, _ = dijkstra(
            weights, n, State.perfect(i, n), State.perfect(j, n), max_discs
        )
        d.append(cost)
    return CostVector(*d)


def count_shortest_paths(
    weights: WeightTable,
    n: int,
    source: State,
    target: State,
    max_discs: int = ORACLE_CAP_DEFAULT,
) -> int:
    """The exact number of distinct minimum-cost move sequences.

    Counts walks in the state graph; these form a DAG ordered by distance
    whenever every optimal route uses only positive-cost moves.  A zero-cost
    move lying on an optimal route makes the count infinite, which raises
    UnboundedCountError.
    """
    _check_cap(n, max_discs)
    if source.n_discs != n or target.n_discs != n:
        raise ValueError("source and target states must have exactly n discs")
    s, t = state_index(source), state_index(target)
    if s == t:
        return 1
    pow3 = [3**m for m in range(n)]
    raw = _raw_rows(weights, n)
    dist_f, _ = _search(weights, n, s, None, want_prev=False)
    if dist_f[t] is None:
        raise UnsolvableError(
            "no route between the given states; too many move types are forbidden"
        )
    dist_t, _ = _search(weights, n, t, None, want_prev=False)
    total = dist_f[t]
    reachable = [u for u in range(3**n) if dist_f[u] is not None]
    for u in reachable:
        for v, w, _move in _edges(u, n, pow3, raw):
            if w == 0 and dist_t[v] is not None and dist_f[u] + dist_t[v] == total:
                raise UnboundedCountError(
                    "a zero-cost move lies on an optimal route; "
                    "minimum-cost move sequences can repeat it indefinitely"
                )
    counts = [0] * 3**n
    counts[s] = 1
    for u in sorted(reachable, key=lambda x: (dist_f[x], x)):
        cu = counts[u]
        if not cu:
            continue
        du = dist_f[u]
        for v, w, _move in _edges(u, n, pow3, raw):
            if dist_f[v] is not None and du + w == dist_f[v] and v != s:
                counts[v] += cu
    return counts[t]


def export_edges(
    weights: WeightTable, n: int, stream: IO[str], max_discs: int = ORACLE_CAP_DEFAULT
) -> int:
    """Write the weighted state graph as CSV (one row per undirected edge).

    Columns are the two state indices and the exact cost string; returns the
    number of edges written.
    """
    _check_cap(n, max_discs)
    pow3 = [3**m for m in range(n)]
    raw = _raw_rows(weights, n)
    writer = csv.writer(stream)
    writer.writerow(["source", "target", "cost"])
    written = 0
    for u in range(3**n):
        for v, w, _move in _edges(u, n, pow3, raw):
            if u < v:
                writer.writerow([u, v, str(Cost.of(w))])
                written += 1
    return written
