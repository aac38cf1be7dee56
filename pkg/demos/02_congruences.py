"""Residues of W_{3n} modulo powers of 3.

The numbers settle into short periodic patterns: W_{3n} = (-1)^n mod 9,
three interleaved tracks mod 27, nine mod 81, and periods of length
2 * 3^(k-2) modulo 3^k.
"""

from lehmer_lab.congruence import (
    explore_mod27_strengthening,
    palindrome_check,
    residue_cycle,
    scan_conjecture,
    stern_check,
    verify_mod9,
    verify_mod27,
    verify_mod81_cases,
)
from lehmer_lab.lehmer_euler import w_recurrence

for name, report in (
    ("mod 9 ", verify_mod9(301)),
    ("mod 27", verify_mod27(301)),
    ("mod 81", verify_mod81_cases(301)),
):
    print(f"{name}: {report.status} over raw indices < {3 * report.range_checked} ({report.checks} checks)")

print()
for k in range(2, 7):
    cycle = residue_cycle(k, 3 * 2 * 3 ** (k - 2) + 10)
    shown = list(cycle.period) if len(cycle.period) <= 18 else f"{list(cycle.period[:6])} ..."
    print(f"mod 3^{k}: 1, then period {len(cycle.period):3d} {shown}  palindromic halves: {palindrome_check(cycle)}")

print("\nPeriod conjecture: 3n = 3m mod 2*3^k  =>  W_3n = W_3m mod 3^(k+1)")
for k in range(1, 6):
    report = scan_conjecture(k, 3 * 2 * 3 ** (k - 1) + 1)
    print(f"  k={k}: {report.status}, {report.checks} comparisons")

# A planted error is caught and located.
values = list(w_recurrence(200))
values[170] += 3**5
print("  planted error:", scan_conjecture(5, 200, values).as_dict()["witness"])

print("\nStern's congruence for Euler numbers mod 2^k, k <= 6:", all(stern_check(k, 101).ok for k in range(1, 7)))

# Asking for more than the proofs deliver: the mod-27 tracks do not lift to
# a higher power of 3 from n0 = 3 on.
print("stronger mod-27 tracks from n0=3:", explore_mod27_strengthening(3, 301).as_dict()["witness"])
