"""Exact integer sequences underlying the closed-form cost formulas."""

from __future__ import annotations


def _require_nonnegative(n: int, name: str) -> None:
    if n < 0:
        raise ValueError(f"{name} is undefined for negative index {n}")


def jacobsthal(n: int) -> int:
    """J_n = (2^n - (-1)^n) / 3 with J_0 = 0, J_1 = 1."""
    _require_nonnegative(n, "jacobsthal")
    return (2**n - (-1) ** n) // 3


def jacobsthal_diff(n: int) -> int:
    """Forward differences of the Jacobsthal numbers: J_{n+1} - J_n."""
    _require_nonnegative(n, "jacobsthal_diff")
    return jacobsthal(n) + (-1) ** n


def lichtenberg(n: int) -> int:
    """Partial sums of the Jacobsthal numbers; index -1 is the empty sum."""
    if n == -1:
        return 0
    _require_nonnegative(n, "lichtenberg")
    return (2 ** (n + 1) - 2 + (n & 1)) // 3


def parity(n: int) -> int:
    _require_nonnegative(n, "parity")
    return n % 2


def mersenne(n: int) -> int:
    _require_nonnegative(n, "mersenne")
    return 2**n - 1


def euler(n: int) -> int:
    """E_n = 2^{n+1} - n - 2, the cumulative Mersenne numbers."""
    _require_nonnegative(n, "euler")
    return 2 ** (n + 1) - n - 2


def half3(n: int) -> int:
    """N_n = (3^n - 1) / 2."""
    _require_nonnegative(n, "half3")
    return (3**n - 1) // 2


def threshold(m: int) -> int:
    """Strategy-switch weight thresholds: a_0 = 0, a_{m+1} = 2 * 3^m."""
    _require_nonnegative(m, "threshold")
    return 0 if m == 0 else 2 * 3 ** (m - 1)


def fibonacci(n: int) -> int:
    _require_nonnegative(n, "fibonacci")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def lucas(n: int) -> int:
    _require_nonnegative(n, "lucas")
    a, b = 2, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def pell(n: int) -> int:
    _require_nonnegative(n, "pell")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, 2 * b + a
    return a


def pow2(n: int) -> int:
    _require_nonnegative(n, "pow2")
    return 2**n


def pow3(n: int) -> int:
    _require_nonnegative(n, "pow3")
    return 3**n


def pow4(n: int) -> int:
    _require_nonnegative(n, "pow4")
    return 4**n


SEQUENCES = {
    "jacobsthal": jacobsthal,
    "jacobsthal_diff": jacobsthal_diff,
    "lichtenberg": lichtenberg,
    "parity": parity,
    "mersenne": mersenne,
    "euler": euler,
    "half3": half3,
    "threshold": threshold,
    "fibonacci": fibonacci,
    "lucas": lucas,
    "pell": pell,
    "pow2": pow2,
    "pow3": pow3,
    "pow4": pow4,
}


def seq_eval(name: str, n: int) -> int:
    """Evaluate a named sequence at index n.

    Only ``lichtenberg`` accepts n = -1 (the empty partial sum); every other
    sequence requires n >= 0.
    """
    try:
        fn = SEQUENCES[name]
    except KeyError:
        known = ", ".join(sorted(SEQUENCES))
        raise ValueError(f"unknown sequence {name!r}; known: {known}") from None
    return fn(n)
