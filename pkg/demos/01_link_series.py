"""Counting K4-minor-free links by crossing number.

Knots in this class are connected sums of (2, q) torus knots, so the knot
series is a multiset construction over the torus knots T(q), |q| odd >= 3.
Non-split links are trees of knots glued along two-component torus links;
counting unlabelled trees through the dissymmetry identity gives Lbar, and
multisets of those give Lhat and finally L.
"""

from k4links.links import build_all
from k4links.oracle import enumerate_T_trees

N = 16
b = build_all(N)

print("torus knots T(q) by size     ", list(b.Kbar))
print("knots (multisets of the above)", list(b.K))
print()
print("pointed trees F/E            ", list(b.T_pointed)[: N - 1])
print("non-split links Lbar         ", list(b.Lbar))
print("links Lhat                   ", list(b.Lhat))
print("links L                      ", list(b.L))
print()

# [z^6]K = 3: T(3)#T(3), T(-3)#T(-3) and T(3)#T(-3)
print("[z^6]K =", b.K[6])

# L repeats itself in pairs: each even coefficient reappears at the next odd index
print("L pairs:", [(b.L[2 * n], b.L[2 * n + 1]) for n in range(1, N // 2)])

# brute-force tree count against the series
print()
print(" n  trees  Lbar")
for n in range(2, 11):
    print(f"{n:2d}  {enumerate_T_trees(n):5d}  {b.Lbar[n]:4d}")
