from fractions import Fraction

import pytest

from weighted_hanoi import (
    Arithmetic,
    BranchChoice,
    CheapIdleMassive,
    Consecutive,
    Constant,
    ConstantNonuniform,
    Cost,
    CostVector,
    FastMiddle,
    ForbiddenMiddle,
    Geometric,
    INFINITY,
    MassiveSymmetric,
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
    dp_solve,
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
    seq_eval,
    seq_transform,
)
from weighted_hanoi.models import NAMED_COST_SEQSPECS

from conftest import CUBIC, QUADRATIC, build_catalog


# ---------------------------------------------------------------------------
# lowering


def test_lower_constant_and_table():
    table = lower(Constant.of(1, 2, 1))
    assert table.row(0) == table.row(9) == (Cost.of(1), Cost.of(2), Cost.of(1))
    explicit = lower(Table.of([(1, 2, 3), (4, 5, 6)]))
    assert explicit.weight(1, 2) == Cost.of(6)
    with pytest.raises(ValueError):
        explicit.weight(2, 0)


def test_lower_disc_dependent_models():
    natural = lower(NaturalMasses())
    assert [natural.weight(nu, 1).raw for nu in range(4)] == [1, 2, 3, 4]
    geo = lower(Geometric.of(1, "3/2"))
    assert geo.weight(2, 0) == Cost.of("9/4")
    arith = lower(Arithmetic.of(2, 3))
    assert arith.weight(4, 2) == Cost.of(14)
    poly = lower(PolynomialCosts(QUADRATIC))
    assert poly.weight(3, 0) == Cost.of(16)
    cheap = lower(CheapIdleMassive())
    assert cheap.row(2) == (Cost.of(3), Cost.of(0), Cost.of(3))
    fast = lower(FastMiddle())
    assert fast.row(3) == (Cost.of(1), Cost.of(64), Cost.of(1))
    consec = lower(Consecutive(2))
    assert consec.row(5) == (Cost.of(2), Cost.of(3), Cost.of(4))
    nonuni = lower(ConstantNonuniform.of("7/2"))
    assert nonuni.row(1) == (Cost.of(1), Cost.of("7/2"), Cost.of(1))


def test_lower_forbidden_middle():
    unit = lower(ForbiddenMiddle("unit"))
    assert unit.weight(3, 1) is INFINITY
    assert unit.weight(3, 0) == Cost.of(1)
    massive = lower(ForbiddenMiddle("massive"))
    assert massive.weight(3, 2) == Cost.of(4)
    with pytest.raises(ValueError):
        ForbiddenMiddle("weird")


def test_lower_massive_from_seqspec_matches_named():
    spec_model = MassiveSymmetric(NAMED_COST_SEQSPECS["fibonacci"])
    named_model = MassiveSymmetric("fibonacci")
    a, b = lower(spec_model), lower(named_model)
    for nu in range(12):
        assert a.weight(nu, 0) == b.weight(nu, 0)


# ---------------------------------------------------------------------------
# closed forms against their printed values


def test_nonmassive_closed_examples():
    assert nonmassive_closed((1, 1, 1), 5) == CostVector.of(31, 31, 31)
    assert nonmassive_closed((1, 2, 1), 3) == CostVector.of(9, 10, 9)
    assert nonmassive_closed((1, 0, 1), 4) == CostVector.of(10, 10, 10)


def test_massive_closed_examples():
    assert massive_closed(lambda nu: 1, 4) == Cost.of(15)
    assert massive_closed(lambda nu: nu + 1, 3) == Cost.of(11)
    assert massive_closed(lambda nu: 2**nu, 4) == Cost.of(32)


def test_geometric_closed_examples():
    assert geometric_closed(1, 2, 5) == Cost.of(80)
    assert geometric_closed(3, 1, 3) == Cost.of(21)
    assert geometric_closed(1, 2, 0) == Cost.of(0)
    assert geometric_closed("1/2", "1/3", 2) == Cost.of(
        Fraction(1, 2) * (4 - Fraction(1, 9)) / (2 - Fraction(1, 3))
    )


def test_arithmetic_closed_examples():
    assert arithmetic_closed(1, 1, 4) == Cost.of(26)
    assert arithmetic_closed(0, 0, 7) == Cost.of(0)
    assert arithmetic_closed(3, 0, 3) == Cost.of(21)


def test_closed_forms_match_massive_sum():
    for n in range(15):
        assert geometric_closed(2, 3, n) == massive_closed(lambda nu: 2 * 3**nu, n)
        assert geometric_closed(1, 2, n) == massive_closed(lambda nu: 2**nu, n)
        assert arithmetic_closed(2, 5, n) == massive_closed(lambda nu: 2 + 5 * nu, n)
        assert poly_closed(QUADRATIC, n) == massive_closed(QUADRATIC, n)
        assert poly_closed(CUBIC, n) == massive_closed(CUBIC, n)


def test_cheap_idle_massive_closed_examples():
    assert cheap_idle_massive_closed(0) == CostVector.zero()
    assert cheap_idle_massive_closed(2) == CostVector.of(3, 2, 3)
    assert cheap_idle_massive_closed(3) == CostVector.of(8, 6, 8)


def test_poly_q_reproduces_printed_transforms():
    assert poly_q(Polynomial.of([1])) == Polynomial.of([1])
    assert poly_q(Polynomial.of([1, 1])) == Polynomial.of([2, 1])
    assert poly_q(QUADRATIC) == Polynomial.of([6, 4, 1])
    assert poly_q(CUBIC) == Polynomial.of([26, 18, 6, 1])
    with pytest.raises(ValueError):
        poly_q(Polynomial.of([]))


def test_poly_q_functional_equation():
    polys = [
        Polynomial.of([1]),
        Polynomial.of([1, 1]),
        QUADRATIC,
        CUBIC,
        Polynomial.of(["1/2", 0, "2/3", 5]),
        Polynomial.of([0, 0, 0, 0, 1]),
    ]
    for p in polys:
        q = poly_q(p)
        assert q.degree == p.degree
        for x in range(p.degree + 1):
            assert 2 * q(x) - q(x + 1) == p(x), p


def test_poly_closed_examples():
    assert poly_closed(QUADRATIC, 4) == Cost.of(58)
    assert poly_closed(CUBIC, 3) == Cost.of(47)
    assert poly_closed(Polynomial.of([1]), 6) == Cost.of(63)
    dipping = Polynomial.of([-1, 1])  # P(0) = -1
    with pytest.raises(ValueError):
        poly_closed(dipping, 3)


def test_seq_transform_examples():
    fib = seq_transform(SeqSpec.of([1, 1], [1, 1]), 0, 4)
    assert [int(v) for v in fib.values] == [0, 1, 3, 8, 19]
    assert fib.tau == (Fraction(-2), Fraction(-1), Fraction(3))
    assert fib.b == 0

    mers = seq_transform(SeqSpec.of([2], [1], b=1), 0, 4)
    assert [int(v) for v in mers.values] == [0, 1, 5, 17, 49]
    assert mers.tau == (Fraction(-4), Fraction(4))
    assert mers.b == 1

    geo = seq_transform(SeqSpec.of([2], [1]), 0, 4)
    assert [int(v) for v in geo.values] == [0, 1, 4, 12, 32]
    assert geo.tau == (Fraction(-4), Fraction(4))
    assert geo.b == 0


def test_seq_transform_values_satisfy_emitted_recurrence():
    specs = list(NAMED_COST_SEQSPECS.values()) + [
        SeqSpec.of(["1/2", 2], [1, "3/2"], b="1/3"),
        SeqSpec.of([1, 0, 2], [1, 2, 3], b=2),
    ]
    for spec in specs:
        result = seq_transform(spec, 0, 20)
        delta = spec.order
        for n in range(20 - delta):
            predicted = result.b + sum(
                result.tau[nu] * result.values[n + nu] for nu in range(delta + 1)
            )
            assert result.values[n + delta + 1] == predicted, spec


def test_seq_transform_requires_enough_terms():
    with pytest.raises(ValueError):
        seq_transform(SeqSpec.of([1, 1], [1, 1]), 0, 1)


def test_named_seq_cost_closed_examples():
    assert named_seq_cost_closed("pell", 2) == Cost.of(4)
    assert named_seq_cost_closed("jacobsthal", 3) == Cost.of(9)
    assert named_seq_cost_closed("lichtenberg", 3) == Cost.of(13)
    with pytest.raises(ValueError):
        named_seq_cost_closed("padovan", 3)


def test_named_seq_closed_matches_step_recurrence():
    for name, spec in NAMED_COST_SEQSPECS.items():
        alphas = spec.alpha_values(25)
        t = Fraction(0)
        for n in range(25):
            assert named_seq_cost_closed(name, n) == Cost.of(t), (name, n)
            t = 2 * t + alphas[n]


def test_lth_closed_examples():
    assert lth_closed("unit", 3) == CostVector.of(13, 26, 13)
    assert lth_closed("unit", 0) == CostVector.zero()
    assert lth_closed("massive", 3) == CostVector.of(18, 36, 18)
    with pytest.raises(ValueError):
        lth_closed("other", 2)


def test_constant_nonuniform_closed_examples():
    assert constant_nonuniform_closed(3, 2) == (CostVector.of(4, 5, 4), 1)
    assert constant_nonuniform_closed(3, 1) == (CostVector.of(1, 2, 1), 1)
    assert constant_nonuniform_closed(0, 4) == (CostVector.of(10, 10, 10), 0)
    # rational weights use the same threshold inequality
    assert constant_nonuniform_closed("13/2", 0)[1] == 2


def test_consecutive_closed_examples():
    assert [str(consecutive_closed(0, n + 1).d2) for n in range(6)] == [
        "1",
        "3",
        "6",
        "13",
        "26",
        "53",
    ]
    assert consecutive_closed(1, 3) == CostVector.of(13, 14, 15)
    assert consecutive_closed(2, 3) == CostVector.of(20, 21, 22)
    assert consecutive_closed(5, 0) == CostVector.zero()
    with pytest.raises(ValueError):
        consecutive_closed(-1, 3)


def test_fast_middle_closed_examples():
    assert fast_middle_closed(0) == CostVector.zero()
    assert fast_middle_closed(1) == CostVector.of(1, 1, 1)
    assert fast_middle_closed(3) == CostVector.of(9, 17, 9)


# ---------------------------------------------------------------------------
# closed forms against the dynamic program


def test_closed_forms_agree_with_dp_up_to_14():
    for name, model in build_catalog():
        table = lower(model)
        vectors, trace = dp_solve(table, 14)
        for n in range(15):
            closed = closed_form_vector(model, n)
            assert closed is not None, name
            if closed.conditional:
                from weighted_hanoi import BranchTrace

                if not BranchTrace(trace.rows[:n]).all_one_ldm():
                    continue
            assert closed.vector == vectors[n], (name, n)


def test_nonmassive_closed_requires_one_ldm_trace():
    # middle weight 7 leaves the single-move regime at low levels, where the
    # disc-independent formula must not be trusted
    table = lower(Constant.of(1, 7, 1))
    vectors, trace = dp_solve(table, 6)
    formula = nonmassive_closed((1, 7, 1), 2)
    assert formula != vectors[2]
    assert not trace.all_one_ldm()


def test_closed_form_vector_kinds():
    assert closed_form_vector(Table.of([(1, 1, 1)]), 1) is None
    assert closed_form_vector(Constant.of(1, "inf", 1), 2) is None
    generic = closed_form_vector(Constant.of(2, 3, 2), 4)
    assert generic is not None and generic.conditional
    assert generic.vector == nonmassive_closed((2, 3, 2), 4)
    nonuni = closed_form_vector(Constant.of(1, 7, 1), 4)
    assert nonuni is not None and not nonuni.conditional and nonuni.threshold == 2


# ---------------------------------------------------------------------------
# JSON round-trips


def test_model_json_round_trips():
    models = [m for _, m in build_catalog()] + [
        Table.of([(1, "inf", "3/2"), (0, 1, 2)]),
        MassiveSymmetric("lucas"),
        MassiveSymmetric(QUADRATIC),
        MassiveSymmetric(SeqSpec.of([1, 2], ["1/2", 1], b="2/3")),
        CheapIdleMassive(),
        ConstantNonuniform.of("7/2"),
    ]
    for model in models:
        data = model_to_json(model)
        assert model_from_json(data) == model, model


def test_model_json_diagnostics():
    with pytest.raises(ValueError):
        model_from_json({"kind": "mystery"})
    with pytest.raises(ValueError):
        model_from_json({"kind": "constant", "w": ["1", "2"]})
    with pytest.raises(ValueError):
        model_from_json({"kind": "geometric", "c": "1"})
    with pytest.raises(ValueError):
        model_from_json({"kind": "consecutive", "w": "2"})
    with pytest.raises(ValueError):
        model_from_json({"kind": "massive", "alpha": {"type": "odd"}})
    with pytest.raises(ValueError):
        model_from_json([1, 2, 3])


def test_branch_enum_values_are_stable():
    assert BranchChoice.ONE_LDM.value == "one-ldm"
    assert BranchChoice.TWO_LDM.value == "two-ldm"
    assert BranchChoice.TIE.value == "tie"
