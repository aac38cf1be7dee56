"""Exact arithmetic substrate shared by every other module.

Integers are Python ``int`` and rationals are ``fractions.Fraction``; both are
arbitrary precision and always canonical.  This module adds the pieces the
standard library lacks: sectioned exponential generating functions, lower
Hessenberg determinants and the composition/partition walks.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Sequence

__all__ = [
    "InvalidInputError",
    "ConsistencyError",
    "factorial",
    "binomial",
    "EGF",
    "egf_multiply",
    "series_invert",
    "series_pow",
    "LowerHessenberg",
    "hessenberg_det",
    "compositions",
    "partitions_multiplicity",
    "multinomial",
    "as_integer",
    "ps_mul",
    "ps_inv",
    "ps_sqrt",
    "ps_log",
    "ps_pow",
]


class InvalidInputError(ValueError):
    """Raised when an operation's precondition on its arguments fails."""


class ConsistencyError(ArithmeticError):
    """Raised when two routes that must agree (or a value that must be an
    integer) do not.  Seeing one of these means a bug, not bad input."""


_FACTORIALS: list[int] = [1]
_FACTORIAL_LOCK = threading.Lock()


def factorial(n: int) -> int:
    """n! from a grow-only table.  Entries are never rewritten once present."""
    if n < 0:
        raise InvalidInputError(f"factorial of negative number {n}")
    table = _FACTORIALS
    if n < len(table):
        return table[n]
    with _FACTORIAL_LOCK:
        # another thread may have grown it meanwhile; appends are idempotent
        while len(table) <= n:
            table.append(table[-1] * len(table))
    return table[n]


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def as_integer(value: Fraction | int, what: str = "value") -> int:
    """Return ``value`` as an int, raising ConsistencyError if it is not integral."""
    if isinstance(value, int):
        return value
    if value.denominator != 1:
        raise ConsistencyError(f"{what} is not an integer: {value}")
    return value.numerator


@dataclass(frozen=True)
class EGF:
    """Truncated exponential generating function restricted to multiples of ``step``.

    ``coeffs[l]`` is the coefficient of ``t**(step*l) / (step*l)!``, i.e. the
    "divided" value.  ``step=1`` is an ordinary EGF, ``step=3`` the trisected
    series that defines the Lehmer-Euler numbers.
    """

    coeffs: tuple[Fraction, ...]
    step: int = 1

    def __init__(self, coeffs: Sequence[Fraction | int], step: int = 1):
        if step < 1:
            raise InvalidInputError("step must be positive")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in coeffs))
        object.__setattr__(self, "step", step)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, index: int) -> Fraction:
        return self.coeffs[index]

    def __mul__(self, other: EGF) -> EGF:
        return egf_multiply(self, other)

    @classmethod
    def one(cls, order: int, step: int = 1) -> EGF:
        return cls([1] + [0] * (order - 1), step)

    def expand(self) -> EGF:
        """Same series in the step-1 basis (zeros at non-multiples of ``step``)."""
        if self.step == 1 or not self.coeffs:
            return self
        out = [Fraction(0)] * (self.step * (self.order - 1) + 1)
        for l, c in enumerate(self.coeffs):
            out[self.step * l] = c
        return EGF(out, 1)

    def section(self, step: int) -> EGF:
        """Inverse of :meth:`expand`; the dropped entries must be zero."""
        if self.step != 1:
            raise InvalidInputError("can only section a step-1 series")
        kept = []
        for i, c in enumerate(self.coeffs):
            if i % step == 0:
                kept.append(c)
            elif c:
                raise InvalidInputError(f"coefficient {i} is nonzero, not a {step}-section")
        return EGF(kept, step)

    def integer_values(self) -> list[int]:
        return [as_integer(c, f"coefficient {i}") for i, c in enumerate(self.coeffs)]


def egf_multiply(f: EGF, g: EGF) -> EGF:
    """EGF product: entry n is sum_k binom(s*n, s*k) f_k g_{n-k}."""
    if f.step != g.step:
        raise InvalidInputError("cannot multiply series of different steps")
    s = f.step
    order = min(f.order, g.order)
    out = []
    for n in range(order):
        acc = Fraction(0)
        for k in range(n + 1):
            if f.coeffs[k] and g.coeffs[n - k]:
                acc += binomial(s * n, s * k) * f.coeffs[k] * g.coeffs[n - k]
        out.append(acc)
    return EGF(out, s)


def series_invert(f: EGF) -> EGF:
    """Reciprocal of ``f`` to the same truncation order."""
    if not f.coeffs or f.coeffs[0] == 0:
        raise InvalidInputError("series with zero constant term is not invertible")
    s = f.step
    inv0 = 1 / f.coeffs[0]
    g = [inv0]
    for n in range(1, f.order):
        acc = Fraction(0)
        for k in range(1, n + 1):
            if f.coeffs[k]:
                acc += binomial(s * n, s * k) * f.coeffs[k] * g[n - k]
        g.append(-inv0 * acc)
    return EGF(g, s)


def series_pow(f: EGF, exponent: int) -> EGF:
    if exponent < 0:
        if not f.coeffs or f.coeffs[0] == 0:
            raise InvalidInputError("negative power of a series with zero constant term")
        f = series_invert(f)
        exponent = -exponent
    result = EGF.one(f.order, f.step)
    base = f
    while exponent:
        if exponent & 1:
            result = result * base
        exponent >>= 1
        if exponent:
            base = base * base
    return result


@dataclass(frozen=True)
class LowerHessenberg:
    """Square matrix that is zero above its first superdiagonal.

    ``rows[i]`` holds ``a[i][0..i+1]`` (the last row stops at the diagonal).
    """

    n: int
    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise InvalidInputError("row count does not match dimension")
        for i, row in enumerate(self.rows):
            if len(row) != min(i + 2, self.n):
                raise InvalidInputError(f"row {i} has {len(row)} stored entries")

    @classmethod
    def from_entries(cls, n: int, entry: Callable[[int, int], Fraction | int]) -> LowerHessenberg:
        rows = tuple(
            tuple(Fraction(entry(i, j)) for j in range(min(i + 2, n))) for i in range(n)
        )
        return cls(n, rows)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if j > i + 1:
            return Fraction(0)
        return self.rows[i][j]

    def to_dense(self) -> list[list[Fraction]]:
        return [[self[i, j] for j in range(self.n)] for i in range(self.n)]


def hessenberg_det(m: LowerHessenberg) -> Fraction:
    """Determinant via the leading-principal-minor recurrence.

    D_{r+1} = sum_c (-1)^(r-c) a[r][c] * a[c][c+1]...a[r-1][r] * D_c, no pivoting.
    """
    minors = [Fraction(1)]
    for r in range(m.n):
        row = m.rows[r]
        acc = Fraction(0)
        chain = Fraction(1)  # product of superdiagonal entries a[c][c+1] .. a[r-1][r]
        sign = 1
        for c in range(r, -1, -1):
            if c < r:
                chain *= m.rows[c][c + 1]
                sign = -sign
                if not chain:
                    break
            if row[c]:
                acc += sign * row[c] * chain * minors[c]
        minors.append(acc)
    return minors[-1]


def compositions(n: int, min_part: int = 1, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of parts in [min_part, max_part] summing to ``n``, lexicographically.

    Walks an explicit stack, so deep compositions (n around 40 and beyond)
    never touch the recursion limit.
    """
    if n < 1 or min_part < 1:
        raise InvalidInputError("need n >= 1 and min_part >= 1")
    hi = n if max_part is None else min(max_part, n)
    if hi < min_part:
        return
    parts: list[int] = []
    remaining = n
    candidate = min_part
    while True:
        if candidate <= min(hi, remaining):
            left = remaining - candidate
            if 0 < left < min_part:
                candidate += 1
                continue
            parts.append(candidate)
            remaining = left
            if remaining == 0:
                yield tuple(parts)
                last = parts.pop()
                remaining += last
                candidate = last + 1
            else:
                candidate = min_part
        else:
            if not parts:
                return
            last = parts.pop()
            remaining += last
            candidate = last + 1


def partitions_multiplicity(
    n: int, min_part: int = 1, max_part: int | None = None
) -> Iterator[tuple[int, ...]]:
    """Multiplicity vectors (t_1, ..., t_n) with sum l*t_l = n and t_l = 0 outside the bounds."""
    if n < 1 or min_part < 1:
        raise InvalidInputError("need n >= 1 and min_part >= 1")
    hi = n if max_part is None else min(max_part, n)
    if hi < min_part:
        return
    t = [0] * (n + 1)
    # stack frames: (part size, remaining before choosing, multiplicity to try next)
    stack = [(hi, n, n // hi)]
    while stack:
        part, remaining, mult = stack.pop()
        if mult < 0:
            t[part] = 0
            continue
        stack.append((part, remaining, mult - 1))
        t[part] = mult
        rest = remaining - mult * part
        if rest == 0:
            for l in range(min_part, part):
                t[l] = 0
            yield tuple(t[1:])
        elif part > min_part:
            nxt = part - 1
            if nxt == min_part:
                if rest % nxt == 0:
                    t[nxt] = rest // nxt
                    yield tuple(t[1:])
                    t[nxt] = 0
            else:
                stack.append((nxt, rest, rest // nxt))


def multinomial(parts: Sequence[int]) -> int:
    """(sum parts)! / prod(parts!)."""
    total = 0
    result = 1
    for p in parts:
        if p < 0:
            raise InvalidInputError("multinomial parts must be nonnegative")
        total += p
        result *= binomial(total, p)
    return result


# Ordinary truncated power series: lists of Fractions, entry i is the x^i coefficient.


def ps_mul(f: Sequence[Fraction], g: Sequence[Fraction], order: int) -> list[Fraction]:
    out = [Fraction(0)] * order
    for i, a in enumerate(f[:order]):
        if a:
            for j, b in enumerate(g[: order - i]):
                if b:
                    out[i + j] += a * b
    return out


def ps_inv(f: Sequence[Fraction], order: int) -> list[Fraction]:
    if not f or f[0] == 0:
        raise InvalidInputError("series with zero constant term is not invertible")
    inv0 = 1 / Fraction(f[0])
    g = [inv0]
    for n in range(1, order):
        acc = sum((f[k] * g[n - k] for k in range(1, min(n, len(f) - 1) + 1)), Fraction(0))
        g.append(-inv0 * acc)
    return g


def ps_sqrt(f: Sequence[Fraction], order: int) -> list[Fraction]:
    """Square root with constant term 1 by Newton's iteration g <- (g + f/g)/2."""
    if not f or f[0] != 1:
        raise InvalidInputError("ps_sqrt needs constant term 1")
    f = [Fraction(c) for c in f[:order]] + [Fraction(0)] * max(0, order - len(f))
    g = [Fraction(1)] + [Fraction(0)] * (order - 1)
    prec = 1
    while prec < order:
        prec = min(2 * prec, order)
        q = ps_mul(f[:prec], ps_inv(g[:prec], prec), prec)
        g = [(a + b) / 2 for a, b in zip(g[:prec], q)] + [Fraction(0)] * (order - prec)
    return g


def ps_log(f: Sequence[Fraction], order: int) -> list[Fraction]:
    """log f for f with constant term 1, as the antiderivative of f'/f."""
    if not f or f[0] != 1:
        raise InvalidInputError("ps_log needs constant term 1")
    deriv = [i * Fraction(f[i]) for i in range(1, min(len(f), order))]
    ratio = ps_mul(deriv, ps_inv(f, order), order - 1) if order > 1 else []
    return [Fraction(0)] + [c / (i + 1) for i, c in enumerate(ratio)]


def ps_pow(f: Sequence[Fraction], exponent: int, order: int) -> list[Fraction]:
    result = [Fraction(1)] + [Fraction(0)] * (order - 1)
    for _ in range(exponent):
        result = ps_mul(result, f, order)
    return result
