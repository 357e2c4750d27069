"""Verification suites shared by the command line and the tests."""

from __future__ import annotations

from dataclasses import dataclass, field

from .links import build_all, build_G, build_K, build_Lbar
from .maps import FAMILIES, check_elimination, solve
from .reference import REFERENCE_SERIES


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class SuiteReport:
    scope: str
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name, ok, detail=""):
        self.checks.append(CheckResult(name, bool(ok), detail))


def _compare(report, name, computed, expected):
    for n, want in enumerate(expected):
        got = computed[n]
        if got != want:
            report.add(name, False, f"first mismatch at z^{n}: computed {got}, expected {want}")
            return
    report.add(name, True, f"{len(expected)} coefficients")


def computed_series(order: int = 20) -> dict:
    """Every series with a reference expansion, each to at least ``order``."""
    links = build_all(max(order, 15))
    return {
        "K": links.K,
        "Lbar": links.Lbar,
        "Lhat": links.Lhat,
        "L": links.L,
        "Mplus": solve("all", order).plus_series,
        "M1plus": solve("minimal", order).plus_series,
        "M2plus": solve("unknot", order).plus_series,
    }


def verify_printed_series() -> SuiteReport:
    report = SuiteReport("printed-series")
    series = computed_series(20)
    for name, expected in REFERENCE_SERIES.items():
        _compare(report, name, series[name], expected)
    return report


def verify_polynomials(order: int = 64) -> SuiteReport:
    report = SuiteReport("polynomials")
    for fam in FAMILIES:
        res = check_elimination(fam, order)
        detail = f"zero mod z^{order + 1}" if res.ok else f"first nonzero coefficient at z^{res.first_failure}"
        report.add(f"p_{fam}", res.ok, detail)
    return report


def verify_partitions(order: int = 500) -> SuiteReport:
    """``(1 - z)^2 prod (1 + z^n)^2`` against the multiset construction of ``K``."""
    report = SuiteReport("partitions")
    g = build_G(order).coeffs
    k = build_K(order).coeffs
    for n in range(order + 1):
        lhs = g[n] - 2 * (g[n - 1] if n >= 1 else 0) + (g[n - 2] if n >= 2 else 0)
        if lhs != k[n]:
            report.add("K identity", False, f"first mismatch at z^{n}: {lhs} != {k[n]}")
            return report
    report.add("K identity", True, f"equal to order {order}")
    return report


def verify_oracle(max_vertices: int = 4) -> SuiteReport:
    from .oracle import diagram_counts

    report = SuiteReport("oracle")
    order = 2 * max_vertices
    plus = {fam: solve(fam, order).plus_series for fam in FAMILIES}
    for v in range(1, max_vertices + 1):
        counts = diagram_counts(v)
        for fam, got in (("all", counts.diagrams), ("minimal", counts.minimal), ("unknot", counts.unknot)):
            want = plus[fam][2 * v]
            report.add(f"{fam} v={v}", got == want, f"oracle {got}, series {want}")
    return report


def verify_trees(max_size: int = 12) -> SuiteReport:
    from .oracle import enumerate_T_trees

    report = SuiteReport("trees")
    lbar = build_Lbar(max_size)
    for n in range(2, max_size + 1):
        got = enumerate_T_trees(n)
        report.add(f"n={n}", got == lbar[n], f"trees {got}, series {lbar[n]}")
    return report


SCOPES = ("printed-series", "polynomials", "oracle", "trees", "partitions")


def run_scope(scope: str, *, max_vertices: int = 4, order: int | None = None, max_size: int = 12) -> list:
    if scope == "all":
        return [run_scope(s, max_vertices=max_vertices, order=order, max_size=max_size)[0] for s in SCOPES]
    if scope == "printed-series":
        return [verify_printed_series()]
    if scope == "polynomials":
        return [verify_polynomials(order or 64)]
    if scope == "partitions":
        return [verify_partitions(order or 500)]
    if scope == "oracle":
        return [verify_oracle(max_vertices)]
    if scope == "trees":
        return [verify_trees(max_size)]
    raise ValueError(f"unknown scope {scope!r}")
