"""Asymptotic growth from the dominant singularity.

The map families are algebraic: the singularity is where p = dp/dy = 0, and
y has a square-root expansion there. For links the singularity sits where the
tree series F hits 1; inverting (1 + Y) e^(-Y) near that point gives F as a
series in Z = sqrt(1 - z/rho), and the square-root terms cancel in Lbar.
Knots follow from the partition-type product (1 - z)^2 prod (1 + z^n)^2.
"""

import mpmath as mp

from k4links import asymptotics as asy
from k4links.links import build_Lbar
from k4links.maps import solve

mp.mp.dps = 30

for fam in ("all", "minimal", "unknot"):
    d = asy.map_singularity(fam, 40)
    print(f"{fam:8s} rho = {mp.nstr(d.rho, 12)}  c = {mp.nstr(d.transfer_constant, 12)}")

links = asy.links_singularity(40)
print()
print("Lbar  rho =", mp.nstr(links.Lbar.rho, 12), " c =", mp.nstr(links.Lbar.transfer_constant, 12),
      " C =", mp.nstr(links.Lbar.scaled_constant, 12))
print("Lhat  c =", mp.nstr(links.Lhat.transfer_constant, 12), " C =", mp.nstr(links.Lhat.scaled_constant, 12))
pc = links.L.growth_description.parity_constants
print("L     even n:", mp.nstr(pc["even"], 12), " odd n:", mp.nstr(pc["odd"], 12))

# how good is the first-order prediction?
lbar = build_Lbar(300)
r = asy.empirical_ratios(lbar, links.Lbar, [50, 100, 200, 300])
print()
print("Lbar coefficient / prediction:", {n: mp.nstr(v, 6) for n, v in r.items()})

unknot = asy.map_singularity("unknot", 40)
s = solve("unknot", 120).plus_series
print("unknot diagrams / prediction: ",
      {n: mp.nstr(v, 6) for n, v in asy.empirical_ratios(s, unknot, [40, 80, 120]).items()})

k = asy.knot_asymptotics(2000)
print()
print("knots c =", mp.nstr(k.c, 10), " beta =", mp.nstr(k.beta, 10))
print("knots coefficient / prediction:", {n: mp.nstr(v, 6) for n, v in k.ratios.items()})
