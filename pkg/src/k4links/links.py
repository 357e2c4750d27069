"""Generating functions of K4-minor-free link types.

Size is the crossing number for ``Kbar``, ``K``, ``Lbar`` and ``Lhat`` and the
number of edges of a minimal diagram for ``L``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .series import (
    GrammarSystem,
    SeriesError,
    TruncSeries,
    div,
    exp,
    geometric,
    pleth_exp,
    pleth_sum,
    power_substitute,
    solve_fixpoint,
)


def _assert_counting(s: TruncSeries, name: str) -> TruncSeries:
    for n, c in enumerate(s.coeffs):
        if not isinstance(c, int):
            raise SeriesError(f"[z^{n}]{name} = {c} is not an integer")
        if c < 0:
            raise SeriesError(f"[z^{n}]{name} = {c} is negative")
    return s


def build_E(order: int) -> TruncSeries:
    """Edge labels: ``z^2 + 2 z^4 / (1 - z^2)``."""
    return TruncSeries.monomial(2, order) + geometric(order, step=2, start=4, coeff=2)


def build_Kbar(order: int) -> TruncSeries:
    """Prime torus knots ``T(q)``, odd ``|q| >= 3``: ``2 z^3 / (1 - z^2)``."""
    return geometric(order, step=2, start=3, coeff=2)


def build_K(order: int) -> TruncSeries:
    """Knots in the class: multisets of prime torus knots."""
    return _assert_counting(pleth_exp(build_Kbar(order)), "K")


def build_G(order: int) -> TruncSeries:
    """``prod_{n>=1} (1 + z^n)^2`` by incremental multiplication."""
    g = [1] + [0] * order
    for n in range(1, order + 1):
        for _ in range(2):
            for m in range(order, n - 1, -1):
                g[m] += g[m - n]
    return TruncSeries(g)


def _F_system(order: int) -> GrammarSystem:
    f = build_E(order) * build_K(order)

    def rule(env, z):
        F = env["F"]
        # F has valuation 2, so the k >= 2 terms F(z^k) only need the previous iterate
        return f * pleth_exp(F)

    return GrammarSystem({"F": rule}, order, gain=2)


def build_F(order: int) -> TruncSeries:
    """Solution of ``F = f exp(sum_k F(z^k)/k)`` with ``f = E K``."""
    return solve_fixpoint(_F_system(order))["F"]


def _pointed(F: TruncSeries, E: TruncSeries) -> TruncSeries:
    # E and F both have valuation 2; division cancels z^2 and loses 2 orders
    return div(F, E)


def build_Lbar(order: int, F: TruncSeries | None = None) -> TruncSeries:
    """Non-split links, through the dissymmetry theorem for trees."""
    n = order + 2
    F = build_F(n) if F is None else F.truncate(n)
    E = build_E(n)
    Tp = _pointed(F, E)                                    # order n - 2
    Tp2 = power_substitute(Tp, 2)
    E = E.truncate(order)
    lbar = Tp - (Tp * Tp * E) / 2 + (E * Tp2) / 2
    return _assert_counting(lbar.truncate(order), "Lbar")


def build_Lhat(order: int, Lbar: TruncSeries | None = None) -> TruncSeries:
    """Links without trivial split components: multisets of nontrivial non-split links."""
    Lbar = build_Lbar(order) if Lbar is None else Lbar.truncate(order)
    nontrivial = Lbar - 1
    lhat = exp(nontrivial) * exp(pleth_sum(nontrivial, start=2))
    return _assert_counting(lhat, "Lhat")


def build_L(order: int, Lhat: TruncSeries | None = None) -> TruncSeries:
    """All links by edges of a minimal diagram: ``Lhat(z^2)/(1 - z) - 1``."""
    half = order // 2
    Lhat = build_Lhat(half) if Lhat is None else Lhat.truncate(half)
    sq = power_substitute(TruncSeries(Lhat.coeffs, order), 2)
    # dividing by 1 - z takes partial sums
    partial, acc = [], 0
    for c in sq.coeffs:
        acc += c
        partial.append(acc)
    L = TruncSeries(partial) - 1
    return _assert_counting(L, "L")


@dataclass(frozen=True)
class LinkSeriesBundle:
    E: TruncSeries
    Kbar: TruncSeries
    K: TruncSeries
    F: TruncSeries
    T_pointed: TruncSeries
    Lbar: TruncSeries
    Lhat: TruncSeries
    L: TruncSeries
    order: int


def build_all(order: int) -> LinkSeriesBundle:
    """Every link series to the given order, sharing one solve for ``F``."""
    F = build_F(order + 2)
    E = build_E(order + 2)
    Lbar = build_Lbar(order, F)
    Lhat = build_Lhat(order, Lbar)
    return LinkSeriesBundle(
        E=E.truncate(order),
        Kbar=build_Kbar(order),
        K=build_K(order),
        F=F.truncate(order),
        T_pointed=_pointed(F, E).truncate(order),
        Lbar=Lbar,
        Lhat=Lhat,
        L=build_L(order, Lhat),
        order=order,
    )
