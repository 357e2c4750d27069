"""Rooted link-diagrams from grammar systems.

Each family is a system of equations in series-composition, parallel and
torus-chain classes, solved coefficient by coefficient by fixpoint iteration.
The solution is then fed into the family's elimination polynomial, which has
to vanish identically.
"""

from k4links.maps import FAMILIES, check_elimination, solve

N = 20
for fam in FAMILIES:
    sol = solve(fam, N)
    evens = [sol.plus_series[n] for n in range(2, N + 1, 2)]
    print(f"{fam:8s} z^2, z^4, ...: {evens}")

print()
sol = solve("all", 12)
print("rooted 4-regular K4-minor-free maps by vertex count:",
      [sol.M[2 * v - 1] for v in range(1, 7)])
print("(each gives 2^v diagrams by choosing crossings)")

print()
for fam in FAMILIES:
    res = check_elimination(fam, 64)
    print(f"p_{fam}(z, M(z)) = 0 mod z^65: {res.ok}")
