"""Acceptance criteria, one test each.

Every criterion records a one-line verdict; ``conftest.py`` prints them after
the run, and ``python tests/test_acceptance.py`` prints them directly.
"""

import time

import mpmath as mp
import pytest

from k4links import asymptotics as asy
from k4links.links import build_G, build_K, build_Lbar
from k4links.maps import FAMILIES, check_elimination, solve
from k4links.oracle import diagram_counts, enumerate_T_trees
from k4links.reference import REFERENCE_CONSTANTS as REF
from k4links.reference import REFERENCE_SERIES
from k4links.series import TruncSeries
from k4links.verify import computed_series

RESULTS = {}

PRINTED = {
    # name: (last exponent, last coefficient)
    "K": (15, 26),
    "Lbar": (12, 280),
    "Lhat": (12, 805),
    "L": (13, 30),
    "Mplus": (14, 23656960),
    "M1plus": (20, 211332),
    "M2plus": (16, 150776064),
}
REL_TOL = 1e-4


def record(number, title, ok, detail):
    RESULTS[number] = (title, ok, detail)
    return ok


def criterion_1():
    t0 = time.perf_counter()
    series = computed_series(20)
    bad = []
    for name, (last, coeff) in PRINTED.items():
        ref = REFERENCE_SERIES[name]
        if len(ref) != last + 1 or ref[-1] != coeff:
            bad.append(f"{name}: reference table incomplete")
        elif list(series[name])[: last + 1] != ref:
            bad.append(name)
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 10
    return record(1, "printed series", ok,
                  f"{len(PRINTED)} series exact, {elapsed:.1f}s" if ok else f"mismatch {bad}, {elapsed:.1f}s")


def criterion_2():
    t0 = time.perf_counter()
    checks = {fam: check_elimination(fam, 64) for fam in FAMILIES}
    elapsed = time.perf_counter() - t0
    bad = [f"{fam} at z^{c.first_failure}" for fam, c in checks.items() if not c.ok]
    ok = not bad and elapsed < 10
    return record(2, "elimination polynomials", ok,
                  f"all vanish mod z^65, {elapsed:.1f}s" if ok else f"nonzero: {bad}, {elapsed:.1f}s")


def criterion_3():
    t0 = time.perf_counter()
    order = 500
    lhs = TruncSeries([1, -2, 1], order) * build_G(order)     # (1 - z)^2 prod (1 + z^n)^2
    k = build_K(order)
    elapsed = time.perf_counter() - t0
    ok = lhs == k and elapsed < 10
    return record(3, "partition identity", ok, f"equal to z^{order}, {elapsed:.1f}s")


def criterion_4():
    t0 = time.perf_counter()
    with mp.workdps(60):
        links = asy.links_singularity(60)
        maps = {fam: asy.map_singularity(fam, 60) for fam in FAMILIES}
        unrooted = {fam: asy.unrooted_constants(fam, 60) for fam in FAMILIES}
        knots = asy.knot_asymptotics(500, checkpoints=[500], digits=60)
    elapsed = time.perf_counter() - t0
    pc = links.L.growth_description.parity_constants
    pairs = [
        ("rho", links.Lbar.rho, REF["Lbar"]["rho"]),
        ("c1", links.Lbar.transfer_constant, REF["Lbar"]["c"]),
        ("c2", links.Lhat.transfer_constant, REF["Lhat"]["c"]),
        ("C(Lbar)", links.Lbar.scaled_constant, REF["Lbar"]["C"]),
        ("C(Lhat)", links.Lhat.scaled_constant, REF["Lhat"]["C"]),
        ("L even", pc["even"], REF["L"]["even"]),
        ("L odd", pc["odd"], REF["L"]["odd"]),
        ("knots c", knots.c, REF["Knots"]["c"]),
        ("knots beta", knots.beta, REF["Knots"]["beta"]),
    ]
    for fam, key in (("all", "M"), ("minimal", "M1"), ("unknot", "M2")):
        for label, data in (("rooted", maps[fam]), ("unrooted", unrooted[fam])):
            pairs.append((f"{key} {label} rho", data.rho, REF[key]["rho"]))
            pairs.append((f"{key} {label} c", data.transfer_constant, REF[key]["c"]))
    bad = []
    for name, got, want in pairs:
        err = abs(float(got) / want - 1)
        if err > REL_TOL:
            bad.append(f"{name} {mp.nstr(got, 9)} vs {want} (rel {err:.1e})")
    ok = not bad and elapsed < 60
    detail = f"{len(pairs) - len(bad)}/{len(pairs)} within {REL_TOL:g}, {elapsed:.1f}s"
    if bad:
        detail += "; off: " + "; ".join(bad)
    return record(4, "asymptotic constants", ok, detail)


def criterion_5(max_vertices=5):
    t0 = time.perf_counter()
    order = 2 * max_vertices
    plus = {fam: solve(fam, order).plus_series for fam in FAMILIES}
    bad = []
    for v in range(1, max_vertices + 1):
        c = diagram_counts(v)
        for fam, got in (("all", c.diagrams), ("minimal", c.minimal), ("unknot", c.unknot)):
            if got != plus[fam][2 * v]:
                bad.append(f"{fam} v={v}: {got} != {plus[fam][2 * v]}")
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 30 * 60
    return record(5, "oracle equivalence", ok,
                  f"v <= {max_vertices} all three families equal, {elapsed:.1f}s" if ok else f"{bad}, {elapsed:.1f}s")


def criterion_6():
    t0 = time.perf_counter()
    lbar = build_Lbar(12)
    bad = [n for n in range(2, 13) if enumerate_T_trees(n) != lbar[n]]
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 300
    return record(6, "tree bijection", ok,
                  f"n = 2..12 equal, {elapsed:.1f}s" if ok else f"mismatch at {bad}, {elapsed:.1f}s")


def criterion_7():
    t0 = time.perf_counter()
    knots = asy.knot_asymptotics(2000, checkpoints=[500, 2000])
    r500, r2000 = knots.ratios[500], knots.ratios[2000]
    links = asy.links_singularity(30)
    r300 = asy.empirical_ratios(build_Lbar(300), links.Lbar, [300])[300]
    elapsed = time.perf_counter() - t0
    ok = (abs(r2000 - 1) <= 0.1 and abs(r2000 - 1) < abs(r500 - 1)
          and abs(r300 - 1) <= 0.1 and elapsed < 120)
    return record(7, "empirical convergence", ok,
                  f"K ratio {mp.nstr(r500, 6)} (n=500), {mp.nstr(r2000, 6)} (n=2000); "
                  f"Lbar ratio {mp.nstr(r300, 6)} (n=300); {elapsed:.1f}s")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7]


def verdict(n):
    title, ok, detail = RESULTS[n]
    return f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {title}  {detail}"


@pytest.mark.parametrize("check", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 8)])
def test_acceptance(check):
    ok = check()
    n = CRITERIA.index(check) + 1
    print(verdict(n))
    assert ok, RESULTS[n][2]


if __name__ == "__main__":
    for i, check in enumerate(CRITERIA, 1):
        check()
        print(verdict(i), flush=True)
