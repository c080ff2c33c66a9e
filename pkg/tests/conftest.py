import pytest

from weighted_hanoi import (
    Arithmetic,
    Consecutive,
    Constant,
    FastMiddle,
    ForbiddenMiddle,
    Geometric,
    NamedSeqCosts,
    NaturalMasses,
    Polynomial,
    PolynomialCosts,
)
from weighted_hanoi.models import NAMED_COST_MODELS

QUADRATIC = Polynomial.of([1, 2, 1])  # (x+1)^2
CUBIC = Polynomial.of([1, 3, 3, 1])  # (x+1)^3

CONSTANT_TRIPLES = ((1, 1, 1), (1, 2, 1), (1, 0, 1), (1, 3, 1), (1, 7, 1), (1, 18, 1))


def build_catalog():
    """Every weight model exercised by the oracle-equivalence checks."""
    models = [
        (f"constant{tri}", Constant.of(*tri)) for tri in CONSTANT_TRIPLES
    ]
    models.append(("natural-masses", NaturalMasses()))
    models += [(f"geometric r={r}", Geometric.of(1, r)) for r in (1, 2, 3)]
    models += [
        (f"arithmetic a={a} b={b}", Arithmetic.of(a, b))
        for a in (0, 1, 2)
        for b in (0, 1, 2)
    ]
    models.append(("quadratic", PolynomialCosts(QUADRATIC)))
    models.append(("cubic", PolynomialCosts(CUBIC)))
    models += [(f"named {name}", NamedSeqCosts(name)) for name in NAMED_COST_MODELS]
    models.append(("lth unit", ForbiddenMiddle("unit")))
    models.append(("lth massive", ForbiddenMiddle("massive")))
    models += [(f"consecutive w={w}", Consecutive(w)) for w in (0, 1, 2)]
    models.append(("fast-middle", FastMiddle()))
    return models


@pytest.fixture(scope="session")
def catalog():
    return build_catalog()
