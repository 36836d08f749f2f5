"""Sharp lambda2 thresholds per degree, and how the branch degree orders them.

The threshold for degree d is lambda2 of the hardest family member: branch
degree c* = 1 for d=3, c* = 2*floor(d/4) for even d, c* = (d-1)/2 for odd
d >= 5.  Along the way lambda2 strictly decreases in the branch degree,
which is what makes c* the minimizer; the chains below show it.
"""

from eigencut import monotonicity_chain, prior_bounds, threshold

print(f"{'d':>3} {'c*':>3} {'threshold':>15}  polynomial (descending coefficients)")
print("-" * 72)
for d in range(3, 13):
    t = threshold(d)
    coeffs = " ".join(f"{c:g}" for c in t.poly.coeffs)
    print(f"{d:>3} {t.c_star:>3} {t.value:>15.10f}  {coeffs}")

print()
print("lambda2 chains (strictly decreasing in the branch degree)")
print("-" * 72)
for d in (7, 8, 11, 12):
    chain = ", ".join(f"c={c}: {v:.6f}" for c, v in monotonicity_chain(d))
    print(f"d={d:>2}: {chain}")

print()
print("prior bounds at the extremal order (threshold column is sharp)")
print("-" * 72)
for d in (3, 4, 5, 8):
    n = 2 * d + 4 if d % 2 else 2 * d + 3
    table = prior_bounds(d, n)
    row = "  ".join(f"{name}={value:.4f}" for name, value in table.bounds.items())
    print(f"d={d} n={n}: {row}")
    print(f"        sharp={table.new_threshold:.4f}")
print()
print("at d=4 the even-degree prior bound already equals the sharp value")
print("(both are 1+sqrt(7)); everywhere else the new threshold is strictly larger.")
