"""Weight models and their exact closed-form cost evaluators.

Every model lowers to a :class:`~weighted_hanoi.cost.WeightTable`, the common
input of the dynamic program and the brute-force oracle, and most carry a
closed form for the optimal transfer cost that the solvers can be checked
against.  Models round-trip through a small JSON schema (``{"kind": ...}``)
with costs serialized as exact strings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence, Union

from .cost import Cost, CostLike, INFINITY, WeightTable
from .linalg import CostVector
from . import sequences as seqs

FracLike = Union[int, str, Fraction]


def _frac(value: FracLike, name: str, nonnegative: bool = True) -> Fraction:
    if isinstance(value, float):
        raise TypeError(f"{name} must be exact (int, string, or Fraction), not float")
    f = Fraction(value)
    if nonnegative and f < 0:
        raise ValueError(f"{name} must be nonnegative, got {f}")
    return f


# ---------------------------------------------------------------------------
# polynomials


@dataclass(frozen=True)
class Polynomial:
    """Exact polynomial; ``coeffs[m]`` is the coefficient of x^m."""

    coeffs: tuple[Fraction, ...]

    @classmethod
    def of(cls, coeffs: Sequence[FracLike]) -> "Polynomial":
        cs = [_frac(c, "coefficient", nonnegative=False) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x: FracLike) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * Fraction(x) + c
        return acc

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for m in range(self.degree, -1, -1):
            c = self.coeffs[m]
            if c == 0:
                continue
            term = "x" if m == 1 else f"x^{m}" if m else ""
            if term and abs(c) == 1:
                coef = "-" if c < 0 else ""
            else:
                coef = str(c)
            parts.append(f"{coef}{term}" if term else str(c))
        out = " + ".join(parts).replace("+ -", "- ")
        return out


def poly_q(p: Polynomial) -> Polynomial:
    """The unique Q with 2Q(x) - Q(x+1) = P(x) and deg Q = deg P.

    Solved coefficient by coefficient from the top degree down; integer
    input coefficients yield integer output coefficients.
    """
    if p.is_zero:
        raise ValueError("the zero polynomial has no transform")
    delta = p.degree
    q: list[Fraction] = [Fraction(0)] * (delta + 1)
    for m in range(delta, -1, -1):
        q[m] = p.coeffs[m] + sum(
            math.comb(mu, m) * q[mu] for mu in range(m + 1, delta + 1)
        )
    return Polynomial(tuple(q))


def poly_closed(p: Polynomial, n: int) -> Cost:
    """Optimal cost under disc costs P(nu): Q(0) * 2^n - Q(n)."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    for nu in range(n):
        if p(nu) < 0:
            raise ValueError(f"disc cost P({nu}) = {p(nu)} is negative")
    q = poly_q(p)
    return Cost.of(q(0) * 2**n - q(n))


# ---------------------------------------------------------------------------
# linear-recurrence disc costs (the sequence transformer)


@dataclass(frozen=True)
class SeqSpec:
    """A linear recurrence with constant coefficients for disc costs.

    alpha_{n+order} = b + sum_nu coeffs[nu] * alpha_{n+nu}, from the seeds.
    """

    coeffs: tuple[Fraction, ...]
    seeds: tuple[Fraction, ...]
    b: Fraction = Fraction(0)

    @classmethod
    def of(
        cls, coeffs: Sequence[FracLike], seeds: Sequence[FracLike], b: FracLike = 0
    ) -> "SeqSpec":
        cs = tuple(_frac(c, "coefficient", nonnegative=False) for c in coeffs)
        sd = tuple(_frac(s, "seed", nonnegative=False) for s in seeds)
        if not cs:
            raise ValueError("recurrence order must be at least 1")
        if len(cs) != len(sd):
            raise ValueError(
                f"need as many seeds as coefficients, got {len(sd)} and {len(cs)}"
            )
        return cls(cs, sd, _frac(b, "b", nonnegative=False))

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def alpha_values(self, count: int) -> list[Fraction]:
        values = list(self.seeds[:count])
        while len(values) < count:
            nxt = self.b + sum(
                a * values[len(values) - self.order + nu]
                for nu, a in enumerate(self.coeffs)
            )
            values.append(nxt)
        return values


@dataclass(frozen=True)
class TransformResult:
    """Derived cost sequence plus the recurrence it provably satisfies.

    values[n] = t_n; t_{n+order+1} = b + sum_nu tau[nu] * t_{n+nu}.
    """

    values: tuple[Fraction, ...]
    tau: tuple[Fraction, ...]
    b: Fraction

    def recurrence_text(self) -> str:
        delta = len(self.tau) - 1
        parts: list[str] = []
        for nu in range(delta, -1, -1):
            c = self.tau[nu]
            if c == 0:
                continue
            idx = f"t[n+{nu}]" if nu else "t[n]"
            body = idx if abs(c) == 1 else f"{abs(c)}{idx}"
            sign = "-" if c < 0 else ("+" if parts else "")
            parts.append(f"{sign}{body}")
        if self.b:
            parts.append(f"{'-' if self.b < 0 else '+'}{abs(self.b)}")
        return f"t[n+{delta + 1}]=" + "".join(parts)


def seq_transform(spec: SeqSpec, t0: FracLike, count: int) -> TransformResult:
    """Push a disc-cost recurrence through t_{n+1} = 2 t_n + alpha_n.

    Returns t_0..t_count together with the coefficients of the order
    (order+1) recurrence the t-values satisfy: tau_nu = a_{nu-1} - 2 a_nu
    with a_{-1} = 0 and a_order = -1.
    """
    if count < spec.order:
        raise ValueError(f"count must be >= the recurrence order {spec.order}")
    alphas = spec.alpha_values(count)
    values = [_frac(t0, "t0", nonnegative=False)]
    for a in alphas:
        values.append(2 * values[-1] + a)
    padded = (Fraction(0),) + spec.coeffs + (Fraction(-1),)
    tau = tuple(padded[nu] - 2 * padded[nu + 1] for nu in range(spec.order + 1))
    return TransformResult(tuple(values[: count + 1]), tau, spec.b)


# ---------------------------------------------------------------------------
# named disc-cost families

_NAMED_ALPHA: dict[str, Callable[[int], int]] = {
    "fibonacci": lambda nu: seqs.fibonacci(nu + 1),
    "lucas": seqs.lucas,
    "jacobsthal": lambda nu: seqs.jacobsthal(nu + 1),
    "pell": lambda nu: seqs.pell(nu + 1),
    "mersenne": lambda nu: seqs.mersenne(nu + 1),
    "lichtenberg": lambda nu: seqs.lichtenberg(nu + 1),
}

NAMED_COST_MODELS = tuple(sorted(_NAMED_ALPHA))

# The same families as explicit recurrences, for the sequence transformer.
NAMED_COST_SEQSPECS: dict[str, SeqSpec] = {
    "fibonacci": SeqSpec.of([1, 1], [1, 1]),
    "lucas": SeqSpec.of([1, 1], [2, 1]),
    "jacobsthal": SeqSpec.of([2, 1], [1, 1]),
    "pell": SeqSpec.of([1, 2], [1, 2]),
    "mersenne": SeqSpec.of([2], [1], b=1),
    "lichtenberg": SeqSpec.of([2, 1], [1, 2], b=1),
}


def _named_alpha(name: str) -> Callable[[int], int]:
    try:
        return _NAMED_ALPHA[name]
    except KeyError:
        known = ", ".join(NAMED_COST_MODELS)
        raise ValueError(f"unknown disc-cost family {name!r}; known: {known}") from None


def named_seq_cost_closed(name: str, n: int) -> Cost:
    """Optimal cost with the named sequence as disc costs.

    All but the Lichtenberg family have printed closed forms; that one is
    evaluated by its order-3 recurrence.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if name == "fibonacci":
        return Cost.of(2 ** (n + 1) - seqs.fibonacci(n + 3))
    if name == "lucas":
        return Cost.of(3 * 2**n - seqs.lucas(n + 2))
    if name == "jacobsthal":
        return Cost.of(((n + 1) * 2**n - seqs.jacobsthal(n + 1)) // 3)
    if name == "pell":
        return Cost.of(seqs.pell(n + 2) - 2 ** (n + 1))
    if name == "mersenne":
        return Cost.of((n - 1) * 2**n + 1)
    if name == "lichtenberg":
        t = [0, 1, 4]
        for m in range(3, n + 1):
            t.append(3 * t[-1] - 4 * t[-3] + 1)
        return Cost.of(t[n])
    _named_alpha(name)  # raises with the known-name list
    raise AssertionError("unreachable")


# ---------------------------------------------------------------------------
# closed forms for the remaining model families


def nonmassive_closed(w: Sequence[CostLike], n: int) -> CostVector:
    """Disc-independent weights: |w| * ell_{n-1} per component plus c_n * w.

    Equals the true optimum only where the single-move branch is optimal at
    every level; check the dynamic program's trace before trusting it.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    w0, w1, w2 = (Cost.of(x) for x in w)
    total = w0 + w1 + w2
    ell, c = seqs.lichtenberg(n - 1), seqs.parity(n)
    return CostVector(*(total * ell + wk * c for wk in (w0, w1, w2)))


def massive_closed(alpha: Callable[[int], CostLike], n: int) -> Cost:
    """Peg-symmetric disc costs: t_n = sum_nu 2^{n-1-nu} alpha_nu."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    t = Cost.of(0)
    for nu in range(n):
        t = t * 2 + Cost.of(alpha(nu))
    return t


def geometric_closed(c: FracLike, r: FracLike, n: int) -> Cost:
    """Disc costs c * r^nu; the ratio r = 2 degenerates to c * n * 2^{n-1}."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    cf, rf = _frac(c, "c"), _frac(r, "r")
    if n == 0:
        return Cost.of(0)
    if rf == 2:
        return Cost.of(cf * n * 2 ** (n - 1))
    return Cost.of(cf * (2**n - rf**n) / (2 - rf))


def arithmetic_closed(a: FracLike, b: FracLike, n: int) -> Cost:
    """Disc costs a + b*nu: a(2^n - 1) + b(2^n - n - 1)."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    af, bf = _frac(a, "a"), _frac(b, "b")
    return Cost.of(af * (2**n - 1) + bf * (2**n - n - 1))


def cheap_idle_massive_closed(n: int) -> CostVector:
    """Disc costs nu+1 on the sides, free middle moves.

    Outer components are partial sums of the Lichtenberg numbers through n,
    the middle component twice the partial sum through n-1.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    through_n = sum(seqs.lichtenberg(v) for v in range(n + 1))
    through_prev = sum(seqs.lichtenberg(v) for v in range(n))
    side = Cost.of(through_n)
    return CostVector(side, Cost.of(2 * through_prev), side)


def lth_closed(variant: str, n: int) -> CostVector:
    """Forbidden moves between the outer pegs, unit or growing disc costs."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if variant == "unit":
        side = seqs.half3(n)
        return CostVector.of(side, 3**n - 1, side)
    if variant == "massive":
        side = sum(seqs.half3(v) for v in range(n + 1))
        return CostVector.of(side, 2 * side, side)
    raise ValueError(f"variant must be 'unit' or 'massive', got {variant!r}")


def threshold_index(w: FracLike) -> int:
    """The m with a_m <= w < a_{m+1} in the switch-threshold sequence."""
    wf = _frac(w, "w")
    m = 0
    while seqs.threshold(m + 1) <= wf:
        m += 1
    return m


def constant_nonuniform_closed(w: FracLike, n: int) -> tuple[CostVector, int]:
    """Side weights 1, middle weight w: the stitched two-regime closed form.

    Below the threshold index m the double-move strategy rules and costs are
    pure powers of three; above it the single-move dynamics takes over from
    the level-m vector.  Returns the cost vector and m.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    wf = _frac(w, "w")
    m = threshold_index(wf)
    if n <= m:
        side = seqs.half3(n)
        return CostVector.of(side, 2 * side, side), m
    nm = seqs.half3(m)
    k = n - m
    outer = nm * seqs.jacobsthal(k + 2) + seqs.lichtenberg(k) + wf * seqs.lichtenberg(k - 1)
    middle = (
        2 * nm * seqs.jacobsthal(k + 1)
        + 2 * seqs.lichtenberg(k - 1)
        + 2 * wf * seqs.lichtenberg(k - 2)
        + wf
    )
    return CostVector.of(outer, middle, outer), m


def consecutive_closed(w: int, n: int) -> CostVector:
    """Weights w, w+1, w+2 by idle peg; returns the level-n cost vector."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if not isinstance(w, int) or w < 0:
        raise ValueError(f"w must be a nonnegative integer, got {w!r}")
    if n == 0:
        return CostVector.zero()
    if w == 0:
        ell = seqs.lichtenberg
        return CostVector.of(
            ell(n - 1) + seqs.mersenne(n - 1),
            ell(n) + ell(n - 2),
            ell(n - 1) + 2 ** (n - 1),
        )
    base, c = 6 * seqs.lichtenberg(n - 1), seqs.parity(n)
    extra = (w - 1) * seqs.mersenne(n)
    return CostVector.of(
        base + c + extra, base + 2 * c + extra, base + 3 * c + extra
    )


def fast_middle_closed(n: int) -> CostVector:
    """Unit side weights, middle weight 4^nu: powers of three from level 1."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return CostVector.zero()
    side = 3 ** (n - 1)
    return CostVector.of(side, 2 * side - 1, side)


# ---------------------------------------------------------------------------
# the model catalog


@dataclass(frozen=True)
class Constant:
    """One cost triple shared by every disc; entries may be infinite."""

    w: tuple[Cost, Cost, Cost]

    @classmethod
    def of(cls, w0: CostLike, w1: CostLike, w2: CostLike) -> "Constant":
        return cls((Cost.of(w0), Cost.of(w1), Cost.of(w2)))


@dataclass(frozen=True)
class Table:
    """Explicit per-disc cost rows; row nu belongs to disc nu+1."""

    rows: tuple[tuple[Cost, Cost, Cost], ...]

    @classmethod
    def of(cls, rows: Sequence[Sequence[CostLike]]) -> "Table":
        out = []
        for row in rows:
            if len(row) != 3:
                raise ValueError("each row needs exactly three costs")
            out.append(tuple(Cost.of(x) for x in row))
        return cls(tuple(out))


@dataclass(frozen=True)
class MassiveSymmetric:
    """Peg-symmetric disc costs from a recurrence, polynomial, or named family."""

    alpha: Union[SeqSpec, Polynomial, str]

    def alpha_fn(self) -> Callable[[int], CostLike]:
        if isinstance(self.alpha, str):
            return _named_alpha(self.alpha)
        if isinstance(self.alpha, Polynomial):
            return self.alpha
        spec = self.alpha
        cache: list[Fraction] = []

        def from_spec(nu: int) -> Fraction:
            if nu >= len(cache):
                cache[:] = spec.alpha_values(nu + 1)
            return cache[nu]

        return from_spec


@dataclass(frozen=True)
class Geometric:
    c: Fraction
    r: Fraction

    @classmethod
    def of(cls, c: FracLike, r: FracLike) -> "Geometric":
        return cls(_frac(c, "c"), _frac(r, "r"))


@dataclass(frozen=True)
class Arithmetic:
    a: Fraction
    b: Fraction

    @classmethod
    def of(cls, a: FracLike, b: FracLike) -> "Arithmetic":
        return cls(_frac(a, "a"), _frac(b, "b"))


@dataclass(frozen=True)
class NaturalMasses:
    """Disc costs 1, 2, 3, ... regardless of pegs."""


@dataclass(frozen=True)
class CheapIdleMassive:
    """Disc costs nu+1 on side moves, free moves between the outer pegs."""


@dataclass(frozen=True)
class PolynomialCosts:
    p: Polynomial


@dataclass(frozen=True)
class NamedSeqCosts:
    name: str

    def __post_init__(self):
        _named_alpha(self.name)


@dataclass(frozen=True)
class ForbiddenMiddle:
    """Moves between the outer pegs disallowed; 'unit' or 'massive' sides."""

    sides: str = "unit"

    def __post_init__(self):
        if self.sides not in ("unit", "massive"):
            raise ValueError(f"sides must be 'unit' or 'massive', got {self.sides!r}")


@dataclass(frozen=True)
class ConstantNonuniform:
    """Side weights 1, middle weight w (the phase-transition family)."""

    w: Fraction

    @classmethod
    def of(cls, w: FracLike) -> "ConstantNonuniform":
        return cls(_frac(w, "w"))


@dataclass(frozen=True)
class Consecutive:
    """Weights w + k by idle peg k."""

    w: int

    def __post_init__(self):
        if not isinstance(self.w, int) or self.w < 0:
            raise ValueError(f"w must be a nonnegative integer, got {self.w!r}")


@dataclass(frozen=True)
class FastMiddle:
    """Unit side weights, middle weight 4^nu (reverse-transition example)."""


Model = Union[
    Constant,
    Table,
    MassiveSymmetric,
    Geometric,
    Arithmetic,
    NaturalMasses,
    CheapIdleMassive,
    PolynomialCosts,
    NamedSeqCosts,
    ForbiddenMiddle,
    ConstantNonuniform,
    Consecutive,
    FastMiddle,
]


def lower(model: Model) -> WeightTable:
    """Lower any model to the weight table consumed by the solvers."""
    if isinstance(model, Constant):
        return WeightTable.constant(*model.w)
    if isinstance(model, Table):
        return WeightTable.from_rows(model.rows)
    if isinstance(model, MassiveSymmetric):
        alpha = model.alpha_fn()
        return WeightTable.from_function(lambda nu, k: alpha(nu))
    if isinstance(model, Geometric):
        return WeightTable.from_function(lambda nu, k: model.c * model.r**nu)
    if isinstance(model, Arithmetic):
        return WeightTable.from_function(lambda nu, k: model.a + model.b * nu)
    if isinstance(model, NaturalMasses):
        return WeightTable.from_function(lambda nu, k: nu + 1)
    if isinstance(model, CheapIdleMassive):
        return WeightTable.from_function(lambda nu, k: 0 if k == 1 else nu + 1)
    if isinstance(model, PolynomialCosts):
        return WeightTable.from_function(lambda nu, k: model.p(nu))
    if isinstance(model, NamedSeqCosts):
        alpha = _named_alpha(model.name)
        return WeightTable.from_function(lambda nu, k: alpha(nu))
    if isinstance(model, ForbiddenMiddle):
        if model.sides == "unit":
            return WeightTable.from_function(
                lambda nu, k: INFINITY if k == 1 else 1
            )
        return WeightTable.from_function(
            lambda nu, k: INFINITY if k == 1 else nu + 1
        )
    if isinstance(model, ConstantNonuniform):
        return WeightTable.from_function(lambda nu, k: model.w if k == 1 else 1)
    if isinstance(model, Consecutive):
        return WeightTable.from_function(lambda nu, k: model.w + k)
    if isinstance(model, FastMiddle):
        return WeightTable.from_function(lambda nu, k: 4**nu if k == 1 else 1)
    raise TypeError(f"not a weight model: {model!r}")


@dataclass(frozen=True)
class ClosedFormResult:
    """A model's closed-form cost vector at one level.

    ``conditional`` marks forms that assume the single-move branch wins at
    every level; validate against the trace before trusting those.
    """

    vector: CostVector
    conditional: bool = False
    threshold: int | None = None


def closed_form_vector(model: Model, n: int) -> ClosedFormResult | None:
    """The model's closed form at level n, or None if it has none."""
    if isinstance(model, Constant):
        w0, w1, w2 = model.w
        if any(c.is_infinite for c in model.w):
            return None
        if w0 == Cost.of(1) and w2 == Cost.of(1):
            vec, m = constant_nonuniform_closed(w1.as_fraction(), n)
            return ClosedFormResult(vec, threshold=m)
        return ClosedFormResult(nonmassive_closed(model.w, n), conditional=True)
    if isinstance(model, MassiveSymmetric):
        t = massive_closed(model.alpha_fn(), n)
        return ClosedFormResult(CostVector(t, t, t))
    if isinstance(model, Geometric):
        t = geometric_closed(model.c, model.r, n)
        return ClosedFormResult(CostVector(t, t, t))
    if isinstance(model, Arithmetic):
        t = arithmetic_closed(model.a, model.b, n)
        return ClosedFormResult(CostVector(t, t, t))
    if isinstance(model, NaturalMasses):
        t = Cost.of(seqs.euler(n))
        return ClosedFormResult(CostVector(t, t, t))
    if isinstance(model, CheapIdleMassive):
        return ClosedFormResult(cheap_idle_massive_closed(n))
    if isinstance(model, PolynomialCosts):
        t = poly_closed(model.p, n)
        return ClosedFormResult(CostVector(t, t, t))
    if isinstance(model, NamedSeqCosts):
        t = named_seq_cost_closed(model.name, n)
        return ClosedFormResult(CostVector(t, t, t))
    if isinstance(model, ForbiddenMiddle):
        return ClosedFormResult(lth_closed(model.sides, n))
    if isinstance(model, ConstantNonuniform):
        vec, m = constant_nonuniform_closed(model.w, n)
        return ClosedFormResult(vec, threshold=m)
    if isinstance(model, Consecutive):
        return ClosedFormResult(consecutive_closed(model.w, n))
    if isinstance(model, FastMiddle):
        return ClosedFormResult(fast_middle_closed(n))
    return None


# ---------------------------------------------------------------------------
# JSON representation


def _cost_str(c: Cost) -> str:
    return str(c)


def _alpha_to_json(alpha: Union[SeqSpec, Polynomial, str]) -> dict | str:
    if isinstance(alpha, str):
        return {"type": "named", "name": alpha}
    if isinstance(alpha, Polynomial):
        return {"type": "poly", "coeffs": [str(c) for c in alpha.coeffs]}
    return {
        "type": "seq",
        "coeffs": [str(c) for c in alpha.coeffs],
        "seeds": [str(s) for s in alpha.seeds],
        "b": str(alpha.b),
    }


def _alpha_from_json(data) -> Union[SeqSpec, Polynomial, str]:
    if not isinstance(data, dict) or "type" not in data:
        raise ValueError("alpha must be an object with a 'type' field")
    kind = data["type"]
    if kind == "named":
        return str(data["name"])
    if kind == "poly":
        return Polynomial.of(data["coeffs"])
    if kind == "seq":
        return seqspec_from_json(data)
    raise ValueError(f"unknown alpha type {kind!r}")


def seqspec_from_json(data: dict) -> SeqSpec:
    try:
        return SeqSpec.of(data["coeffs"], data["seeds"], data.get("b", 0))
    except KeyError as missing:
        raise ValueError(f"sequence spec is missing field {missing}") from None


def model_to_json(model: Model) -> dict:
    """Canonical JSON object for a model; costs become exact strings."""
    if isinstance(model, Constant):
        return {"kind": "constant", "w": [_cost_str(c) for c in model.w]}
    if isinstance(model, Table):
        return {
            "kind": "table",
            "rows": [[_cost_str(c) for c in row] for row in model.rows],
        }
    if isinstance(model, MassiveSymmetric):
        return {"kind": "massive", "alpha": _alpha_to_json(model.alpha)}
    if isinstance(model, Geometric):
        return {"kind": "geometric", "c": str(model.c), "r": str(model.r)}
    if isinstance(model, Arithmetic):
        return {"kind": "arithmetic", "a": str(model.a), "b": str(model.b)}
    if isinstance(model, NaturalMasses):
        return {"kind": "natural-masses"}
    if isinstance(model, CheapIdleMassive):
        return {"kind": "cheap-idle-massive"}
    if isinstance(model, PolynomialCosts):
        return {"kind": "polynomial", "coeffs": [str(c) for c in model.p.coeffs]}
    if isinstance(model, NamedSeqCosts):
        return {"kind": "named-seq", "name": model.name}
    if isinstance(model, ForbiddenMiddle):
        return {"kind": "forbidden-middle", "sides": model.sides}
    if isinstance(model, ConstantNonuniform):
        return {"kind": "constant-nonuniform", "w": str(model.w)}
    if isinstance(model, Consecutive):
        return {"kind": "consecutive", "w": model.w}
    if isinstance(model, FastMiddle):
        return {"kind": "fast-middle"}
    raise TypeError(f"not a weight model: {model!r}")


def model_from_json(data: dict) -> Model:
    """Parse the canonical JSON object; raises ValueError with diagnostics."""
    if not isinstance(data, dict):
        raise ValueError("model spec must be a JSON object")
    kind = data.get("kind")
    try:
        if kind == "constant":
            w = data["w"]
            if len(w) != 3:
                raise ValueError("'w' must hold exactly three costs")
            return Constant.of(*w)
        if kind == "table":
            return Table.of(data["rows"])
        if kind == "massive":
            return MassiveSymmetric(_alpha_from_json(data["alpha"]))
        if kind == "geometric":
            return Geometric.of(data["c"], data["r"])
        if kind == "arithmetic":
            return Arithmetic.of(data["a"], data["b"])
        if kind == "natural-masses":
            return NaturalMasses()
        if kind == "cheap-idle-massive":
            return CheapIdleMassive()
        if kind == "polynomial":
            return PolynomialCosts(Polynomial.of(data["coeffs"]))
        if kind == "named-seq":
            return NamedSeqCosts(str(data["name"]))
        if kind == "forbidden-middle":
            return ForbiddenMiddle(str(data.get("sides", "unit")))
        if kind == "constant-nonuniform":
            return ConstantNonuniform.of(data["w"])
        if kind == "consecutive":
            w = data["w"]
            if not isinstance(w, int):
                raise ValueError("'w' must be a nonnegative integer")
            return Consecutive(w)
        if kind == "fast-middle":
            return FastMiddle()
    except KeyError as missing:
        raise ValueError(f"model kind {kind!r} is missing field {missing}") from None
    raise ValueError(
        f"unknown model kind {kind!r}; known kinds: constant, table, massive, "
        "geometric, arithmetic, natural-masses, cheap-idle-massive, polynomial, "
        "named-seq, forbidden-middle, constant-nonuniform, consecutive, fast-middle"
    )
