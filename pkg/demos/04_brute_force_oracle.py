"""Checking the grammars against an exhaustive enumeration.

Rooted 4-regular plane maps are generated in canonical form, filtered for
K4 minors by series-parallel reduction, and every crossing assignment is
reduced to its torus-link factors. A diagram is minimal when nothing
cancels, and an unknot when every factor is trivial.
"""

from k4links.maps import FAMILIES, solve
from k4links.oracle import (
    diagram_counts,
    enumerate_rooted_maps,
    factorize,
    is_k4_minor_free,
)

V = 4
plus = {fam: solve(fam, 2 * V).plus_series for fam in FAMILIES}

print(" v   maps  K4-free  diagrams  minimal  unknot")
for v in range(1, V + 1):
    c = diagram_counts(v)
    print(f"{v:2d} {c.maps:6d} {c.k4_free_maps:8d} {c.diagrams:9d} {c.minimal:8d} {c.unknot:7d}")
    assert (c.diagrams, c.minimal, c.unknot) == tuple(plus[f][2 * v] for f in FAMILIES)
print("all counts agree with the grammar series")

# a look at individual diagrams on three crossings
print()
seen = {}
for m in enumerate_rooted_maps(3, exact=True):
    if not is_k4_minor_free(m):
        continue
    for d in m.all_crossings():
        key = tuple(sorted(factorize(d).factors))
        seen[key] = seen.get(key, 0) + 1
for key, n in sorted(seen.items()):
    print(f"factors {key!s:12s} {n:4d} rooted diagrams")
