"""Incomplete Lehmer-Euler numbers.

``W_{n,<=m}`` inverts 1 + sum_{l=1}^{m} t^{3l}/(3l)! (the denominator series
cut after degree 3m) and ``W_{n,>=m}`` inverts 1 + sum_{l>=m} t^{3l}/(3l)!
(the low terms dropped).  Both collapse to W_n: the first as m grows past n,
the second at m = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .exact_core import (
    InvalidInputError,
    as_integer,
    binomial,
    compositions,
    factorial,
    hessenberg_det,
)
from .lehmer_euler import step_factorial_hessenberg, trudi_factorial_sum

__all__ = [
    "IncompleteWTable",
    "w_le_recurrence",
    "w_ge_recurrence",
    "w_le_explicit",
    "w_ge_explicit",
    "w_le_determinant",
    "w_ge_determinant",
    "w_le_trudi",
    "w_ge_trudi",
    "incomplete_w",
    "composition_count",
]

Kind = Literal["le", "ge"]


@dataclass(frozen=True)
class IncompleteWTable:
    kind: Kind
    m: int
    values: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n):
        return self.values[n]

    def __iter__(self):
        return iter(self.values)

    def at(self, index: int) -> int:
        """Value at raw index; zero unless 3 divides it."""
        if index % 3:
            return 0
        return self.values[index // 3]


def _check(N: int, m: int) -> None:
    if N < 1 or m < 1:
        raise InvalidInputError(f"need N >= 1 and m >= 1, got N={N}, m={m}")


def w_le_recurrence(N: int, m: int) -> IncompleteWTable:
    """W_{3n,<=m} = -sum_{k=max(n-m,0)}^{n-1} binom(3n,3k) W_{3k,<=m}."""
    _check(N, m)
    vals = [1]
    for n in range(1, N):
        vals.append(-sum(binomial(3 * n, 3 * k) * vals[k] for k in range(max(n - m, 0), n)))
    return IncompleteWTable("le", m, tuple(vals))


def w_ge_recurrence(N: int, m: int) -> IncompleteWTable:
    """W_{3n,>=m} = -sum_{k=0}^{n-m} binom(3n,3k) W_{3k,>=m}; zero for 0 < n < m."""
    _check(N, m)
    vals = [1]
    for n in range(1, N):
        vals.append(-sum(binomial(3 * n, 3 * k) * vals[k] for k in range(0, n - m + 1)))
    return IncompleteWTable("ge", m, tuple(vals))


def _composition_sum(n: int, min_part: int, max_part: int | None) -> int:
    total = Fraction(0)
    for parts in compositions(n, min_part, max_part):
        denom = 1
        for i in parts:
            denom *= factorial(3 * i)
        total += Fraction(-1 if len(parts) % 2 else 1, denom)
    return as_integer(total * factorial(3 * n), "incomplete composition sum")


def w_le_explicit(n: int, m: int) -> int:
    _check(n, m)
    return _composition_sum(n, 1, m)


def w_ge_explicit(n: int, m: int) -> int:
    _check(n, m)
    return _composition_sum(n, m, None)


def _banded_det(n: int, keep) -> int:
    mat = step_factorial_hessenberg(
        n, lambda d: Fraction(1, factorial(3 * d)) if keep(d) else 0
    )
    value = (-1) ** n * factorial(3 * n) * hessenberg_det(mat)
    return as_integer(value, "incomplete determinant")


def w_le_determinant(n: int, m: int) -> int:
    """Banded Hessenberg form: only the first m subdiagonal bands are populated.

    Defined for every n >= 1; when n <= m no band is cut and this is W_{3n}.
    """
    _check(n, m)
    return _banded_det(n, lambda d: d <= m)


def w_ge_determinant(n: int, m: int) -> int:
    """Hessenberg form with the bands closest to the diagonal (distance < m) zeroed."""
    _check(n, m)
    return _banded_det(n, lambda d: d >= m)


def w_le_trudi(n: int, m: int) -> int:
    _check(n, m)
    return trudi_factorial_sum(n, 1, m)


def w_ge_trudi(n: int, m: int) -> int:
    _check(n, m)
    return trudi_factorial_sum(n, m, None)


def incomplete_w(kind: Kind, index: int, m: int) -> int:
    """Raw-index accessor: W_{index,<=m} or W_{index,>=m}."""
    if index < 0:
        raise InvalidInputError("index must be nonnegative")
    if index % 3:
        return 0
    n = index // 3
    table = w_le_recurrence(n + 1, m) if kind == "le" else w_ge_recurrence(n + 1, m)
    return table[n]


def composition_count(n: int, min_part: int = 1, max_part: int | None = None) -> int:
    """Number of compositions of n with parts in [min_part, max_part] (cost of the explicit route)."""
    hi = n if max_part is None else max_part
    ways = [1] + [0] * n
    for s in range(1, n + 1):
        ways[s] = sum(ways[s - i] for i in range(min_part, min(hi, s) + 1))
    return ways[n]
