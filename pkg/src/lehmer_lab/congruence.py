"""Congruences of W_{3n} modulo powers of 3 and of E_{2n} modulo powers of 2.

All residues are normalized to [0, modulus) before comparison, so -8 and 19
are the same class mod 27.  Scans never raise on a failed congruence; they
return a :class:`CongruenceReport` whose ``status`` names the first witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .exact_core import ConsistencyError, InvalidInputError, binomial
from .higher_order import OMEGA, OMEGA2, SQRT_MINUS_3, EisensteinInt
from .lehmer_euler import euler_numbers, w_residues

__all__ = [
    "ResidueCycle",
    "CongruenceReport",
    "is_prime",
    "binom_mod_prime",
    "rou_binomial_sum",
    "rou_binomial_direct",
    "rou_binomial_eisenstein",
    "rou_binomial_parity_form",
    "verify_mod9",
    "verify_mod27",
    "verify_mod81",
    "verify_mod81_cases",
    "MOD81_CASE_TABLE",
    "residue_cycle",
    "palindrome_check",
    "scan_conjecture",
    "stern_check",
    "explore_mod27_strengthening",
    "KNOWN_CYCLES",
]


@dataclass(frozen=True)
class ResidueCycle:
    modulus: int
    pre_period: tuple[int, ...]
    period: tuple[int, ...]
    status: str = "confirmed"  # or "inconclusive"
    scanned: int = 0

    @property
    def confirmed(self) -> bool:
        return self.status == "confirmed"


@dataclass
class CongruenceReport:
    theorem_id: str
    range_checked: int
    status: str = "verified"  # "verified" | "counterexample"
    witness: dict = field(default_factory=dict)
    notes: str = ""
    checks: int = 0

    @property
    def ok(self) -> bool:
        return self.status == "verified"

    def fail(self, **witness) -> CongruenceReport:
        if self.ok:
            self.status = "counterexample"
            self.witness = witness
        return self

    def as_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "range_checked": self.range_checked,
            "status": self.status,
            "checks": self.checks,
            "witness": {k: str(v) if isinstance(v, int) else v for k, v in self.witness.items()},
            "notes": self.notes,
        }


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def binom_mod_prime(m: int, n: int, p: int) -> int:
    """binom(m, n) mod p as the product of digitwise binomials in base p."""
    if not is_prime(p):
        raise InvalidInputError(f"{p} is not prime")
    if m < 0 or n < 0:
        raise InvalidInputError("m and n must be nonnegative")
    result = 1
    while m or n:
        mi, ni = m % p, n % p
        if ni > mi:
            return 0
        result = result * binomial(mi, ni) % p
        m //= p
        n //= p
    return result


# Roots-of-unity binomial sums.
#
# For M = 3n + extra the residue-class sum  sum_k binom(M, 3k+offset) (-1)^(k+offset)
# is the value at x = -1 of  sum_k binom(M, 3k+offset) x^(3k+offset)
#     = (1/3) sum_j w^(-j*offset) (1 + w^j x)^M.
# Its j = 0 term vanishes, and (1 - w)^3 = -3 sqrt(-3), (1 - w^2)^3 = 3 sqrt(-3).


def rou_binomial_direct(n: int, offset: int, extra: int) -> int:
    M = 3 * n + extra
    total = 0
    for k in range(M // 3 + 1):
        term = binomial(M, 3 * k + offset)
        total += -term if (k + offset) % 2 else term
    return total


def rou_binomial_eisenstein(n: int, offset: int, extra: int) -> int:
    """Closed form (1/3)(w^-o (-3 sqrt-3)^n (1-w)^e + w^-2o (3 sqrt-3)^n (1-w^2)^e)."""
    base = 3 * SQRT_MINUS_3
    rot1 = OMEGA2 ** (offset % 3)  # w^-o
    rot2 = OMEGA ** (offset % 3)  # w^-2o
    value = (rot1 * (-base) ** n * (1 - OMEGA) ** extra + rot2 * base**n * (1 - OMEGA2) ** extra) / 3
    if not value.is_rational():
        raise ConsistencyError(f"closed form for ({n},{offset},{extra}) is not rational: {value}")
    q = Fraction(value.to_rational())
    if q.denominator != 1:
        raise ConsistencyError(f"closed form for ({n},{offset},{extra}) is not integral: {q}")
    return q.numerator


def rou_binomial_parity_form(n: int, offset: int, extra: int) -> int:
    """The same sum as a signed power of 3, split by the parity of n."""
    if n < 1:
        raise InvalidInputError("n must be positive")
    half, odd = divmod(n, 2)
    s = lambda e: -1 if e % 2 else 1  # noqa: E731
    if odd:
        up = (n + 1) // 2
        table = {
            (0, 0): 0,
            (1, 0): s(up) * 3 ** ((3 * n - 1) // 2),
            (2, 0): -s(up) * 3 ** ((3 * n - 1) // 2),
            (0, 1): s(up) * 3 ** ((3 * n - 1) // 2),
            (1, 1): s(up) * 3 ** ((3 * n - 1) // 2),
            (2, 1): -s(up) * 2 * 3 ** ((3 * n - 1) // 2),
            (0, 2): s(up) * 3 ** ((3 * n + 1) // 2),
            (1, 2): 0,
            (2, 2): -s(up) * 3 ** ((3 * n + 1) // 2),
        }
    else:
        table = {
            (0, 0): s(half) * 2 * 3 ** (3 * half - 1),
            (1, 0): -s(half) * 3 ** (3 * half - 1),
            (2, 0): -s(half) * 3 ** (3 * half - 1),
            (0, 1): s(half) * 3 ** (3 * half),
            (1, 1): -s(half) * 3 ** (3 * half),
            (2, 1): 0,
            (0, 2): s(half) * 3 ** (3 * half),
            (1, 2): -s(half) * 2 * 3 ** (3 * half),
            (2, 2): s(half) * 3 ** (3 * half),
        }
    return table[(offset, extra)]


def rou_binomial_sum(n: int, offset: int, extra: int) -> int:
    """sum_k binom(3n+extra, 3k+offset) (-1)^(k+offset), cross-checked against the closed form."""
    if n < 1 or offset not in (0, 1, 2) or extra not in (0, 1, 2):
        raise InvalidInputError("need n >= 1 and offset, extra in {0, 1, 2}")
    direct = rou_binomial_direct(n, offset, extra)
    closed = rou_binomial_eisenstein(n, offset, extra)
    if direct != closed:
        raise ConsistencyError(f"({n},{offset},{extra}): direct {direct} != closed form {closed}")
    return direct


def _residues(N: int, modulus: int, values: Sequence[int] | None) -> list[int]:
    if values is not None:
        if len(values) < N:
            raise InvalidInputError("supplied table is shorter than the scan range")
        return [v % modulus for v in values[:N]]
    return w_residues(N, modulus)


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def _check_tracks(
    theorem_id: str,
    N: int,
    modulus: int,
    tracks: Sequence[tuple[int, int, Callable[[int], int]]],
    values: Sequence[int] | None,
    notes: str = "",
) -> CongruenceReport:
    """Each track (block, start, expected) asserts W_{3n} for 3n = block*q + start."""
    res = _residues(N, modulus, values)
    report = CongruenceReport(theorem_id, N, notes=notes)
    for n in range(N):
        for block, start, expected in tracks:
            if (3 * n - start) % block or 3 * n < start:
                continue
            q = (3 * n - start) // block
            report.checks += 1
            want = expected(q) % modulus
            if res[n] != want:
                return report.fail(index=3 * n, residue=res[n], expected=want, modulus=modulus)
    return report


def verify_mod9(N: int, values: Sequence[int] | None = None) -> CongruenceReport:
    """W_{3n} = (-1)^n (mod 9) for n < N."""
    if N < 1:
        raise InvalidInputError("N must be positive")
    return _check_tracks("mod9", N, 9, [(3, 0, _sign)], values)


def verify_mod27(N: int, values: Sequence[int] | None = None) -> CongruenceReport:
    """The three 9-blocks and six 18-blocks mod 27 for n < N (raw index 3n)."""
    if N < 1:
        raise InvalidInputError("N must be positive")
    tracks = [
        (9, 0, _sign),
        (9, 3, lambda q: _sign(q - 1)),
        (9, 6, lambda q: _sign(q - 1) * 8),
        (18, 0, lambda q: 1),
        (18, 3, lambda q: -1),
        (18, 6, lambda q: -8),
        (18, 9, lambda q: -1),
        (18, 12, lambda q: 1),
        (18, 15, lambda q: 8),
    ]
    return _check_tracks("mod27", N, 27, tracks, values)


def verify_mod81(N: int, values: Sequence[int] | None = None) -> CongruenceReport:
    """The nine residue classes of 3n mod 27, modulo 81."""
    if N < 1:
        raise InvalidInputError("N must be positive")
    tracks = [
        (27, 0, _sign),
        (27, 3, lambda q: _sign(q - 1)),
        (27, 6, lambda q: _sign(q) * 19),
        (27, 24, lambda q: _sign(q) * 19),
        (27, 15, lambda q: _sign(q - 1) * 19),
        (27, 9, lambda q: _sign(q) * 26),
        (27, 21, lambda q: _sign(q) * 26),
        (27, 12, lambda q: _sign(q) * 28),
        (27, 18, lambda q: _sign(q) * 28),
    ]
    return _check_tracks("mod81", N, 81, tracks, values)


# (offset, sign shift, multiplier, upper-limit kind, {n: value}); values for
# n beyond the largest key equal the entry at the largest key.  The sum is
# sum_{k=0}^{n or n-1} binom(27n, 27k + offset) (-1)^(k + shift) * multiplier.
MOD81_CASE_TABLE: tuple[tuple[int, int, int, str, dict[int, int]], ...] = (
    (0, 0, 1, "n", {1: 0, 2: -18, 3: 0}),
    (3, 1, 1, "n-1", {1: -9, 2: 0}),
    (6, 0, 19, "n", {1: 36, 2: 0}),
    (9, 0, 26, "n-1", {1: -3, 2: 9, 3: 0}),
    (12, 0, 28, "n", {1: 45, 2: 0}),
    (15, 1, 19, "n-1", {1: 36, 2: 0}),
    (18, 0, 28, "n", {1: 3, 2: 9, 3: 0}),
    (21, 0, 26, "n-1", {1: -36, 2: 0}),
    (24, 0, 19, "n-1", {1: 9, 2: 0}),
)


def _mod81_case_sum(n: int, offset: int, shift: int, mult: int, upper: str) -> int:
    top = n if upper == "n" else n - 1
    total = 0
    for k in range(top + 1):
        total += binomial(27 * n, 27 * k + offset) * _sign(k + shift) * mult
    return total % 81


def verify_mod81_cases(N: int, values: Sequence[int] | None = None) -> CongruenceReport:
    """Residue classes mod 81 for n < N, then each binomial case sum for 1 <= n < N/9.

    The case sums use the block index n of 27n, so a scan over raw indices
    below 3N covers block indices up to 3N/27.
    """
    if N < 3:
        raise InvalidInputError("N must be at least 3")
    report = verify_mod81(N, values)
    report.theorem_id = "mod81_cases"
    if not report.ok:
        return report
    blocks = max(3, (3 * N) // 27)
    for offset, shift, mult, upper, table in MOD81_CASE_TABLE:
        last = max(table)
        for n in range(1, blocks + 1):
            expected = table.get(n, table[last]) % 81
            got = _mod81_case_sum(n, offset, shift, mult, upper)
            report.checks += 1
            if got != expected:
                return report.fail(case_offset=offset, block=n, residue=got, expected=expected)
    return report


KNOWN_CYCLES: dict[int, tuple[int, ...]] = {
    2: (8, 1),
    3: (26, 19, 26, 1, 8, 1),
    4: (80, 19, 26, 28, 62, 28, 26, 19, 80, 1, 62, 55, 53, 19, 53, 55, 62, 1),
    5: (
        242, 19, 188, 109, 62, 28, 107, 19, 80, 82, 224, 217, 53,
        181, 53, 217, 224, 82, 80, 19, 107, 28, 62, 109, 188, 19, 242,
        1, 224, 55, 134, 181, 215, 136, 224, 163, 161, 19, 26, 190, 62, 190, 26, 19, 161,
        163, 224, 136, 215, 181, 134, 55, 224, 1,
    ),
}


def _detect_cycle(res: Sequence[int], min_pre: int, repeats: int) -> tuple[int, int] | None:
    """Smallest period p, then smallest pre-period mu >= min_pre, holding over the whole scan."""
    N = len(res)
    for p in range(1, N):
        # last index i with res[i] != res[i + p]
        last_bad = -1
        for i in range(N - p - 1, -1, -1):
            if res[i] != res[i + p]:
                last_bad = i
                break
        mu = max(min_pre, last_bad + 1)
        if N - mu >= repeats * p:
            return mu, p
        if N - min_pre < repeats * p:
            return None
    return None


def residue_cycle(k: int, N: int, min_pre: int = 1, values: Sequence[int] | None = None) -> ResidueCycle:
    """Eventual period of W_{3n} mod 3^k over n < N.

    ``min_pre=1`` lists W_0 separately, matching the usual "1, overline{...}"
    presentation; the sequence is in fact purely periodic.  The period must
    repeat at least three times inside the scan or the result is inconclusive.
    """
    if k < 1:
        raise InvalidInputError("k must be positive")
    modulus = 3**k
    res = _residues(N, modulus, values)
    found = _detect_cycle(res, min_pre, repeats=3)
    if found is None:
        return ResidueCycle(modulus, tuple(res[:min_pre]), tuple(res[min_pre:]), "inconclusive", N)
    mu, p = found
    return ResidueCycle(modulus, tuple(res[:mu]), tuple(res[mu : mu + p]), "confirmed", N)


def palindrome_check(cycle: ResidueCycle) -> bool:
    """True iff the period splits into two halves that each read the same reversed."""
    period = cycle.period
    if len(period) <= 1:
        return True
    if len(period) % 2:
        return list(period) == list(reversed(period))
    h = len(period) // 2
    first, second = period[:h], period[h:]
    return first == first[::-1] and second == second[::-1]


def scan_conjecture(
    k: int,
    N: int,
    values: Sequence[int] | None = None,
    start: int = 0,
    representatives: dict[int, int] | None = None,
) -> CongruenceReport:
    """If 3n = 3m (mod 2*3^k) then W_{3n} = W_{3m} (mod 3^(k+1)), for n, m < N.

    The index condition is checked as n = m (mod 2*3^(k-1)).  Indices are
    grouped by class and each class must be constant, so the cost is linear.
    ``start`` and ``representatives`` let a caller resume a partial scan.
    """
    if k < 1:
        raise InvalidInputError("k must be positive")
    modulus = 3 ** (k + 1)
    classes = 2 * 3 ** (k - 1)
    res = _residues(N, modulus, values)
    report = CongruenceReport(
        "conjecture",
        N,
        notes=f"k={k}: n = m (mod {classes}) => W_3n = W_3m (mod {modulus})",
    )
    reps = {} if representatives is None else representatives
    for n in range(N):
        cls = n % classes
        first = reps.get(cls)
        if first is None:
            reps[cls] = n
            continue
        if n < start:
            continue
        report.checks += 1
        if res[n] != res[first]:
            return report.fail(
                n=n, m=first, index_n=3 * n, index_m=3 * first,
                residue_n=res[n], residue_m=res[first], modulus=modulus,
            )
    return report


def stern_check(k: int, N: int, values: Sequence[int] | None = None) -> CongruenceReport:
    """E_{2n} = E_{2m} (mod 2^k)  <=>  2n = 2m (mod 2^k), over all n, m < N."""
    if k < 1 or N < 1:
        raise InvalidInputError("need k >= 1 and N >= 1")
    modulus = 2**k
    vals = list(values[:N]) if values is not None else list(euler_numbers(N).values)
    res = [v % modulus for v in vals]
    report = CongruenceReport("stern", N, notes=f"k={k}")
    index_class: dict[int, int] = {}  # (2n mod 2^k) -> first n
    residue_class: dict[int, int] = {}  # residue -> first n
    for n in range(N):
        c = (2 * n) % modulus
        report.checks += 1
        first = index_class.setdefault(c, n)
        if res[n] != res[first]:
            return report.fail(direction="index=>value", n=n, m=first, residue_n=res[n], residue_m=res[first])
        other = residue_class.setdefault(res[n], n)
        if (2 * other) % modulus != c:
            return report.fail(direction="value=>index", n=n, m=other, residue=res[n])
    return report


def explore_mod27_strengthening(n0: int, N: int, values: Sequence[int] | None = None) -> CongruenceReport:
    """Probe the claim that for n >= n0 the mod-27 tracks hold modulo a larger power of 3.

    Exploratory only: the threshold for "large enough" is never pinned down,
    so a counterexample here is information, not a test failure.
    """
    if n0 < 1:
        raise InvalidInputError("n0 must be positive")
    e9 = (3 * n0 - 1) // 2 if n0 % 2 else 3 * n0 // 2 - 1
    e_other = (3 * n0 + 1) // 2 if n0 % 2 else 3 * n0 // 2
    report = CongruenceReport("mod27_strengthening", N, notes=f"n0={n0}")
    for exponent, start, expected in (
        (e9, 0, _sign),
        (e_other, 3, lambda q: _sign(q - 1)),
        (e_other, 6, lambda q: _sign(q - 1) * 8),
    ):
        modulus = 3**exponent
        res = _residues(N, modulus, values)
        for n in range(N):
            if (3 * n - start) % 9 or 3 * n < start:
                continue
            q = (3 * n - start) // 9
            if q < n0:
                continue
            report.checks += 1
            if res[n] != expected(q) % modulus:
                return report.fail(index=3 * n, block=q, modulus=modulus, residue=res[n])
    return report
