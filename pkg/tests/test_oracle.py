import io

import pytest

from weighted_hanoi import (
    Cost,
    CostVector,
    OracleCapError,
    State,
    UnboundedCountError,
    UnsolvableError,
    WeightTable,
    count_shortest_paths,
    dijkstra,
    dp_solve,
    export_edges,
    lower,
    neighbors,
    oracle_cost_vector,
    plan_cost,
    seq_eval,
)
from weighted_hanoi.oracle import index_to_state, state_index

UNIT = WeightTable.constant(1, 1, 1)
HEAVY = WeightTable.constant(1, 2, 1)
LTH = WeightTable.constant(1, "inf", 1)


def test_state_encoding_round_trip():
    for idx in range(3**4):
        assert state_index(index_to_state(idx, 4)) == idx
    assert state_index(State.perfect(2, 3)) == 26


def test_neighbors_of_perfect_state():
    result = neighbors(State.perfect(0, 3), UNIT)
    assert len(result) == 2
    targets = sorted(s.pegs for s, _, _ in result)
    assert targets == [(1, 0, 0), (2, 0, 0)]
    assert all(c == Cost.of(1) for _, c, _ in result)
    assert all(m.disc == 1 and m.source == 0 for _, _, m in result)


def test_neighbors_single_disc_always_two():
    for table in (UNIT, HEAVY, WeightTable.constant("1/2", 5, 100)):
        assert len(neighbors(State((0,)), table)) == 2


def test_neighbors_omit_forbidden_edges():
    result = neighbors(State.perfect(0, 2), LTH)
    assert len(result) == 1
    state, cost, move = result[0]
    assert state.pegs == (1, 0)
    assert cost == Cost.of(1)  # disc 1 moving 0 -> 1 pays the idle-peg-2 weight
    assert move == (1, 0, 1)


def test_neighbors_mid_game_has_three_moves():
    # discs 1 and 2 on different pegs: disc 1 has two moves, disc 2 one
    result = neighbors(State((1, 0)), UNIT)
    assert len(result) == 3
    movers = sorted(m.disc for _, _, m in result)
    assert movers == [1, 1, 2]


def test_dijkstra_classical():
    cost, plan = dijkstra(UNIT, 3, State.perfect(0, 3), State.perfect(2, 3))
    assert cost == Cost.of(7)
    assert len(plan) == 7
    total, final = plan_cost(UNIT, plan, State.perfect(0, 3))
    assert total == cost and final == State.perfect(2, 3)


def test_dijkstra_heavy_middle_example():
    cost, _ = dijkstra(HEAVY, 2, State.perfect(0, 2), State.perfect(1, 2))
    assert cost == Cost.of(4)  # 4 * ell_1 + c_2


def test_dijkstra_same_endpoints():
    cost, plan = dijkstra(HEAVY, 4, State.perfect(1, 4), State.perfect(1, 4))
    assert cost == Cost.of(0) and len(plan) == 0


def test_dijkstra_witness_cost_matches_distance():
    tables = [HEAVY, LTH, WeightTable.from_function(lambda nu, k: nu + k + 1)]
    for table in tables:
        for n in (1, 3, 5):
            cost, plan = dijkstra(table, n, State.perfect(0, n), State.perfect(2, n))
            total, final = plan_cost(table, plan, State.perfect(0, n))
            assert total == cost
            assert final == State.perfect(2, n)


def test_dijkstra_is_deterministic():
    a = dijkstra(HEAVY, 4, State.perfect(0, 4), State.perfect(1, 4))
    b = dijkstra(HEAVY, 4, State.perfect(0, 4), State.perfect(1, 4))
    assert a == b


def test_dijkstra_disconnected_endpoints():
    only_middle = WeightTable.constant("inf", 1, "inf")
    with pytest.raises(UnsolvableError):
        dijkstra(only_middle, 1, State((0,)), State((1,)))
    # the one allowed transfer still works
    cost, _ = dijkstra(only_middle, 1, State((0,)), State((2,)))
    assert cost == Cost.of(1)


def test_oracle_cap():
    with pytest.raises(OracleCapError):
        dijkstra(UNIT, 11, State.perfect(0, 11), State.perfect(2, 11))
    with pytest.raises(OracleCapError):
        oracle_cost_vector(UNIT, 12)
    # explicit override is honored
    cost, _ = dijkstra(UNIT, 3, State.perfect(0, 3), State.perfect(2, 3), max_discs=3)
    assert cost == Cost.of(7)
    with pytest.raises(OracleCapError):
        dijkstra(UNIT, 4, State.perfect(0, 4), State.perfect(2, 4), max_discs=3)


def test_oracle_cost_vector_examples():
    assert oracle_cost_vector(UNIT, 4) == CostVector.of(15, 15, 15)
    assert oracle_cost_vector(WeightTable.constant(1, 3, 1), 2) == CostVector.of(4, 5, 4)
    assert oracle_cost_vector(LTH, 2) == CostVector.of(4, 8, 4)
    assert oracle_cost_vector(UNIT, 0) == CostVector.zero()


def test_count_classical_is_unique():
    for n in range(7):
        assert count_shortest_paths(UNIT, n, State.perfect(0, n), State.perfect(2, n)) == 1


def test_count_heavy_middle_matches_powers_of_two():
    for n in range(6):
        towers = n + 1
        via_idle2 = count_shortest_paths(
            HEAVY, towers, State.perfect(0, towers), State.perfect(1, towers)
        )
        via_idle1 = count_shortest_paths(
            HEAVY, towers, State.perfect(0, towers), State.perfect(2, towers)
        )
        assert via_idle2 == 2 ** seq_eval("jacobsthal", n)
        assert via_idle1 == 2 ** seq_eval("jacobsthal_diff", n)


def test_count_same_endpoints():
    assert count_shortest_paths(HEAVY, 3, State.perfect(2, 3), State.perfect(2, 3)) == 1


def test_count_rejects_zero_cost_optimal_edges():
    free_middle = WeightTable.constant(1, 0, 1)
    with pytest.raises(UnboundedCountError):
        count_shortest_paths(free_middle, 1, State((0,)), State((2,)))


def test_count_tolerates_zero_edges_off_the_optimal_route():
    # disc 2 may shuttle 0<->2 for free, but no optimal 0->1 route touches that
    table = WeightTable.from_rows([(1, 1, 1), (1, 0, 1)])
    n = count_shortest_paths(table, 2, State.perfect(0, 2), State.perfect(1, 2))
    assert n == 1


def test_peg_swap_preserves_distances_and_counts():
    tables = [HEAVY, WeightTable.from_function(lambda nu, k: 2 * nu + k + 1)]
    for table in tables:
        swapped = table.swap_sides()
        for n in (2, 4):
            assert oracle_cost_vector(swapped, n) == oracle_cost_vector(table, n).swap02()
            direct = count_shortest_paths(
                table, n, State.perfect(0, n), State.perfect(2, n)
            )
            mirrored = count_shortest_paths(
                swapped, n, State.perfect(2, n), State.perfect(0, n)
            )
            assert direct == mirrored


def test_dp_matches_oracle_on_disc_varying_table():
    table = WeightTable.from_function(lambda nu, k: (nu + 1) * (k + 1))
    vectors, _ = dp_solve(table, 6)
    for n in range(7):
        assert oracle_cost_vector(table, n) == vectors[n]


def test_export_edges_csv():
    buf = io.StringIO()
    written = export_edges(UNIT, 2, buf)
    lines = buf.getvalue().strip().splitlines()
    assert lines[0] == "source,target,cost"
    assert len(lines) == written + 1
    rows = [line.split(",") for line in lines[1:]]
    assert all(int(u) < int(v) for u, v, _ in rows)
    assert ["0", "1", "1"] in rows
    # 1-disc graph is a weighted triangle
    buf1 = io.StringIO()
    assert export_edges(WeightTable.constant(1, "3/2", 2), 1, buf1) == 3
    assert "0,2,3/2" in buf1.getvalue().splitlines()


def test_export_edges_skips_forbidden():
    buf = io.StringIO()
    export_edges(LTH, 1, buf)
    lines = buf.getvalue().strip().splitlines()[1:]
    assert len(lines) == 2  # the 0<->2 edge is gone
