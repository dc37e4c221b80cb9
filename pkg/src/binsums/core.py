"""Exact integer kernels: binomial coefficients, Kronecker symbols, linear recurrences.

Everything in this module is exact; no floating point is used anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb


def binomial(n: int, k: int) -> int:
    """C(n, k), with the convention that k < 0 or k > n gives 0 exactly."""
    if n < 0:
        raise ValueError("binomial requires n >= 0")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def central_row(n: int) -> list[int]:
    """Upper half of row 2n of Pascal's triangle: [C(2n, n+k) for k = 0..n].

    One multiplicative sweep with running exact division, so the whole
    row costs O(n) big-integer multiplications.
    """
    if n < 0:
        raise ValueError("central_row requires n >= 0")
    c = 1
    for i in range(1, n + 1):
        c = c * (n + i) // i  # builds C(2n, n)
    row = [c]
    for k in range(n):
        c = c * (n - k) // (n + k + 1)  # C(2n, n+k+1) from C(2n, n+k)
        row.append(c)
    return row


def kronecker(a: int, m: int) -> int:
    """Kronecker-Jacobi symbol (a|m) for any nonzero modulus m.

    Uses the standard convention (a|2) = 0 for even a, +1 for a = +-1 (mod 8)
    and -1 for a = +-3 (mod 8).  For odd prime m this is the Legendre symbol.
    """
    if m == 0:
        raise ValueError("kronecker symbol undefined for m = 0")
    result = 1
    if m < 0:
        m = -m
        if a < 0:
            result = -1
    while m % 2 == 0:
        m //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            result = -result
    a %= m
    while a:
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                result = -result
        a, m = m, a
        if a % 4 == 3 and m % 4 == 3:
            result = -result
        a %= m
    return result if m == 1 else 0


# Reflection rules for indices below zero.  "odd" means a(-t) = (-1)^(t+1) a(t)
# (Fibonacci-style), "even" means a(-t) = (-1)^t a(t) (Lucas-style).
_NEGATIVE_RULES = ("odd", "even")


@dataclass
class RecurrenceSpec:
    """Linear recurrence a(n) = coeffs[0] a(n-1) + ... + coeffs[d-1] a(n-d).

    ``seeds`` are a(0), ..., a(d-1).  ``negative_rule`` optionally extends the
    sequence to negative indices by a sign reflection.
    """

    name: str
    coeffs: tuple[int, ...]
    seeds: tuple[int, ...]
    negative_rule: str | None = None
    _table: list[int] = field(default_factory=list, repr=False, compare=False)

    def __post_init__(self) -> None:
        self.coeffs = tuple(self.coeffs)
        self.seeds = tuple(self.seeds)
        if len(self.seeds) != len(self.coeffs) or not self.coeffs:
            raise ValueError("need len(seeds) == len(coeffs) >= 1")
        if self.negative_rule is not None and self.negative_rule not in _NEGATIVE_RULES:
            raise ValueError(f"unknown negative rule {self.negative_rule!r}")


def rec_eval(spec: RecurrenceSpec, n: int) -> int:
    """Evaluate the recurrence at index n (iteratively, memoized per spec).

    The memo table is append-only, so repeated calls are deterministic and
    one RecurrenceSpec can be shared between threads.
    """
    if n < 0:
        if spec.negative_rule is None:
            raise ValueError(f"{spec.name} is not defined for n < 0")
        t = -n
        sign = -1 if (t + (spec.negative_rule == "odd")) % 2 else 1
        return sign * rec_eval(spec, t)
    table = spec._table
    if not table:
        table.extend(spec.seeds)
    d = len(spec.coeffs)
    while len(table) <= n:
        table.append(sum(c * table[-i - 1] for i, c in enumerate(spec.coeffs)))
    return table[n]
