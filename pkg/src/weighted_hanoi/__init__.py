"""Exact solvers, closed forms, and a brute-force oracle for the weighted
three-peg Tower of Hanoi with symmetric nonnegative move costs."""

from .cost import (
    Cost,
    INFINITY,
    MinSide,
    WeightTable,
    cost_add,
    cost_min,
    idle_peg,
    other_pegs,
)
from .engine import (
    BranchChoice,
    BranchTrace,
    Move,
    MovePlan,
    PhaseReport,
    State,
    detect_phase,
    dp_solve,
    iter_moves,
    ldm_counts,
    plan_cost,
    reconstruct_plan,
)
from .errors import (
    IllegalMoveError,
    InfiniteWeightError,
    OracleCapError,
    PlanSizeError,
    UnboundedCountError,
    UnsolvableError,
    WeightedHanoiError,
)
from .linalg import (
    CostVector,
    FORBIDDEN_OPERATOR,
    Mat3,
    ONE_LDM_OPERATOR,
    mat_a_power,
    mat_b_power,
    mat_power_generic,
    solve_forbidden,
    solve_one_ldm,
    solve_two_ldm,
)
from .models import (
    Arithmetic,
    CheapIdleMassive,
    Constant,
    ConstantNonuniform,
    Consecutive,
    FastMiddle,
    ForbiddenMiddle,
    Geometric,
    MassiveSymmetric,
    Model,
    NamedSeqCosts,
    NaturalMasses,
    Polynomial,
    PolynomialCosts,
    SeqSpec,
    Table,
    arithmetic_closed,
    cheap_idle_massive_closed,
    closed_form_vector,
    consecutive_closed,
    constant_nonuniform_closed,
    fast_middle_closed,
    geometric_closed,
    lower,
    lth_closed,
    massive_closed,
    model_from_json,
    model_to_json,
    named_seq_cost_closed,
    nonmassive_closed,
    poly_closed,
    poly_q,
    seq_transform,
    threshold_index,
)
from .oracle import (
    ORACLE_CAP_DEFAULT,
    count_shortest_paths,
    dijkstra,
    export_edges,
    neighbors,
    oracle_cost_vector,
)
from .sequences import seq_eval

__version__ = "0.1.0"
