"""The Delta(x, k) polynomials tie Euler numbers to central factorial numbers."""

from lehmer_lab.central_factorial import (
    T_second,
    delta_poly,
    rising_poly,
    t_first,
    thm5_rhs,
    thm6_lhs,
)
from lehmer_lab.lehmer_euler import euler_e

for k in range(5):
    d = delta_poly(k)
    print(f"Delta(x,{k}) = {d}    Delta(0,{k}) = {d(0)} = (-1)^{k} E_{2 * k}")

print("\ncentral factorial numbers, n = 6")
print("  t(6,k):", [str(t_first(6, k)) for k in range(7)])
print("  T(6,k):", [str(T_second(6, k)) for k in range(7)])
print("  odd rows are rational, e.g. T(3,1) =", T_second(3, 1))

print("\nE_{2n+2k} from T(2n, 2j) and Delta(j, k):")
for n, k in ((3, 2), (4, 3), (5, 5)):
    print(f"  n={n}, k={k}: {thm5_rhs(n, k)} == E_{2 * n + 2 * k} = {euler_e(2 * n + 2 * k)}")

n = 3
print(f"\nsum_j (-4)^(n-j) t(2n+1, 2j+1) Delta(x, j) at n={n}:")
print("  ", thm6_lhs(n))
print("  ", rising_poly(n), " = (x+1)(x+2)...(x+6)")
