"""Lehmer-Euler numbers W_{3n} by five independent routes, plus Euler numbers.

W_n is defined by  sum W_n t^n/n! = (sum_l t^{3l}/(3l)!)^{-1}.  Only the
trisection W_0, W_3, W_6, ... is nonzero, so tables are indexed by n and
entry n holds W_{3n}.  Use :func:`lehmer_w` for the raw index.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .exact_core import (
    EGF,
    ConsistencyError,
    InvalidInputError,
    LowerHessenberg,
    as_integer,
    binomial,
    compositions,
    factorial,
    hessenberg_det,
    series_invert,
)

__all__ = [
    "WTable",
    "ETable",
    "w_recurrence",
    "w_explicit",
    "w_determinant",
    "w_trudi",
    "w_series",
    "inversion_det_check",
    "euler_numbers",
    "lehmer_w",
    "euler_e",
    "w_residues",
    "trudi_factorial_sum",
    "METHODS",
    "compare_methods",
]


@dataclass(frozen=True)
class WTable:
    """W_0, W_3, ..., W_{3(N-1)} together with the method that produced them."""

    values: tuple[int, ...]
    method: str = "recurrence"

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n):
        return self.values[n]

    def __iter__(self):
        return iter(self.values)

    def at(self, m: int) -> int:
        """Value at raw index m; zero unless 3 divides m."""
        if m % 3:
            return 0
        return self.values[m // 3]


@dataclass(frozen=True)
class ETable:
    """E_0, E_2, ..., E_{2(N-1)}; odd-index Euler numbers vanish and are not stored."""

    values: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n):
        return self.values[n]

    def __iter__(self):
        return iter(self.values)

    def at(self, m: int) -> int:
        if m % 2:
            return 0
        return self.values[m // 2]


def _check_count(N: int) -> None:
    if N < 1:
        raise InvalidInputError(f"table length must be at least 1, got {N}")


def _check_index(n: int) -> None:
    if n < 1:
        raise InvalidInputError(f"index must be at least 1, got {n}")


class _GrowOnlyTable:
    """Sequence extended on demand by a recurrence; shared read-only between threads."""

    def __init__(self, step: int):
        self._values = [1]
        self._step = step
        self._lock = threading.Lock()

    def get(self, N: int) -> tuple[int, ...]:
        if len(self._values) < N:
            with self._lock:
                vals = self._values
                s = self._step
                while len(vals) < N:
                    n = len(vals)
                    vals.append(-sum(binomial(s * n, s * k) * vals[k] for k in range(n)))
        return tuple(self._values[:N])


_W_CACHE = _GrowOnlyTable(3)
_E_CACHE = _GrowOnlyTable(2)


def w_recurrence(N: int) -> WTable:
    """W_{3n} = -sum_{k<n} binom(3n, 3k) W_{3k}, for n < N."""
    _check_count(N)
    return WTable(_W_CACHE.get(N), "recurrence")


def lehmer_w(m: int) -> int:
    """W_m for a raw index m >= 0."""
    if m < 0:
        raise InvalidInputError("index must be nonnegative")
    if m % 3:
        return 0
    return _W_CACHE.get(m // 3 + 1)[m // 3]


def w_explicit(n: int) -> int:
    """Signed sum over compositions of n:  (3n)! sum (-1)^k / ((3 i_1)! ... (3 i_k)!)."""
    _check_index(n)
    total = Fraction(0)
    for parts in compositions(n):
        denom = 1
        for i in parts:
            denom *= factorial(3 * i)
        total += Fraction(-1 if len(parts) % 2 else 1, denom)
    return as_integer(total * factorial(3 * n), f"explicit W_{3 * n}")


def step_factorial_hessenberg(n: int, entry: Callable[[int], Fraction | int]) -> LowerHessenberg:
    """n x n Hessenberg matrix with 1 on the superdiagonal and ``entry(i - j + 1)`` below it."""
    return LowerHessenberg.from_entries(
        n, lambda i, j: 1 if j == i + 1 else entry(i - j + 1)
    )


def w_determinant(n: int) -> int:
    _check_index(n)
    m = step_factorial_hessenberg(n, lambda d: Fraction(1, factorial(3 * d)))
    value = (-1) ** n * factorial(3 * n) * hessenberg_det(m)
    return as_integer(value, f"determinant W_{3 * n}")


def trudi_factorial_sum(n: int, min_part: int = 1, max_part: int | None = None, step: int = 3) -> int:
    """(step*n)! * sum over t of multinomial(t) * prod_l (-1/(step*l)!)^{t_l}.

    The sum runs over multiplicity vectors with sum l*t_l = n and parts in
    [min_part, max_part].  Instead of forming each term from scratch the walk
    keeps the running integer X = (step*n)! / prod (step*l)!^{t_l} t_l!, which
    stays integral at every node (it counts set partitions times a factorial).
    Leaves with k parts contribute (-1)^k k! X.
    """
    if n < 1:
        raise InvalidInputError("n must be positive")
    hi = n if max_part is None else min(max_part, n)
    if hi < min_part:
        return 0
    blocks = [factorial(step * l) for l in range(hi + 1)]
    # closing divisor when the smallest part takes the whole remainder t times
    leaf_div = [blocks[min_part] ** t * factorial(t) for t in range(n // min_part + 1)]
    by_count = [0] * (n + 1)
    # frames: (part size, remaining, parts so far, X)
    stack = [(hi, n, 0, factorial(step * n))]
    push, pop = stack.append, stack.pop
    while stack:
        part, remaining, count, x = pop()
        if part == min_part:
            t, rest = divmod(remaining, part)
            if not rest:
                by_count[count + t] += x // leaf_div[t]
            continue
        block = blocks[part]
        t = 0
        while True:
            if remaining == 0:
                by_count[count + t] += x
                break
            push((part - 1, remaining, count + t, x))
            if remaining < part:
                break
            t += 1
            remaining -= part
            x //= block * t
    return sum((-1) ** k * factorial(k) * s for k, s in enumerate(by_count) if s)


def w_trudi(n: int) -> int:
    """W_{3n} from the partition (Trudi) expansion."""
    _check_index(n)
    return trudi_factorial_sum(n)


def w_series(N: int) -> WTable:
    """Invert the all-ones trisected series directly."""
    _check_count(N)
    inv = series_invert(EGF([1] * N, 3))
    return WTable(tuple(inv.integer_values()), "series")


def inversion_det_check(n: int) -> bool:
    """Hessenberg determinant of W_{3d}/(3d)! entries equals (-1)^n/(3n)!."""
    _check_index(n)
    w = w_recurrence(n + 1)
    m = step_factorial_hessenberg(n, lambda d: Fraction(w[d], factorial(3 * d)))
    return hessenberg_det(m) == Fraction((-1) ** n, factorial(3 * n))


def euler_numbers(N: int) -> ETable:
    """E_{2n} = -sum_{k<n} binom(2n, 2k) E_{2k}, for n < N."""
    _check_count(N)
    return ETable(_E_CACHE.get(N))


def euler_e(m: int) -> int:
    if m < 0:
        raise InvalidInputError("index must be nonnegative")
    if m % 2:
        return 0
    return _E_CACHE.get(m // 2 + 1)[m // 2]


def w_residues(N: int, modulus: int) -> list[int]:
    """W_{3n} mod ``modulus`` for n < N, running the recurrence in Z/modulus.

    Binomials come from Pascal's triangle reduced mod ``modulus``, so nothing
    grows past the modulus; this is what the long congruence scans use.
    """
    _check_count(N)
    if modulus < 1:
        raise InvalidInputError("modulus must be positive")
    res = [1 % modulus]
    row = [1]
    for m in range(1, 3 * (N - 1) + 1):
        row = [1] + [(row[i] + row[i + 1]) % modulus for i in range(m - 1)] + [1]
        if m % 3 == 0:
            n = m // 3
            res.append(-sum(row[3 * k] * res[k] for k in range(n)) % modulus)
    return res


def _per_index(fn: Callable[[int], int]) -> Callable[[int], list[int]]:
    def table(N: int) -> list[int]:
        return [1] + [fn(n) for n in range(1, N)]

    return table


METHODS: dict[str, Callable[[int], Iterable[int]]] = {
    "recurrence": lambda N: w_recurrence(N).values,
    "series": lambda N: w_series(N).values,
    "determinant": _per_index(w_determinant),
    "trudi": _per_index(w_trudi),
    "explicit": _per_index(w_explicit),
}


def compare_methods(N: int, methods: Iterable[str] = ("recurrence", "series", "determinant", "trudi")):
    """Tables from each named method for n < N, and the disagreements found.

    Returns ``(tables, mismatches)`` where each mismatch is
    ``(n, method_a, value_a, method_b, value_b)`` against the first method.
    """
    names = list(methods)
    tables = {name: list(METHODS[name](N)) for name in names}
    ref = names[0]
    mismatches = []
    for name in names[1:]:
        for n, (a, b) in enumerate(zip(tables[ref], tables[name])):
            if a != b:
                mismatches.append((n, ref, a, name, b))
    return tables, mismatches
