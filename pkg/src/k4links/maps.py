"""Rooted K4-minor-free link-diagrams: grammar systems and elimination polynomials.

Unknowns of the refined systems are keyed ``X{sub}{sup}`` so that ``"M-+"``
is the class with an undercrossing tail and overcrossing head of the root edge
(subscript is the tail, superscript the head).

In every grammar ``z`` marks non-root edges. The ``plus`` series also count
the root edge and, for the unrefined family, the crossing choices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .series import GrammarSystem, SeriesError, TruncSeries, compose, solve_fixpoint

FAMILIES = ("all", "minimal", "unknot")


def build_Tr(r: int, order: int) -> TruncSeries:
    """``T_r(z) = z^r sum_n binom(2n + r, n) z^{2n}`` from binomial coefficients."""
    if r not in (1, 3):
        raise ValueError("T_r is only used for r in {1, 3}")
    c = [0] * (order + 1)
    n = 0
    while r + 2 * n <= order:
        c[r + 2 * n] = comb(2 * n + r, n)
        n += 1
    return TruncSeries(c)


def _all_rules():
    def U(e, z):
        return 2 * z * z * e["M"] + 2 * z

    def S(e, z):
        return z * (e["M"] - e["S"]) * e["M"]

    def P(e, z):
        return z ** 3 * (1 + z * e["M"]) ** 3 + z * e["F"] * e["M"]

    def F(e, z):
        d = (z + z * z * e["M"]) ** 2
        return d * (e["F"] + 2 * z * d)

    def M(e, z):
        return e["U"] + e["S"] + e["P"] + e["F"]

    return {"U": U, "S": S, "P": P, "F": F, "M": M}


def _series_rules():
    # the four refined series-composition classes, shared by minimal and unknot
    def s(head_pair, tail_pair):
        def rule(e, z):
            h = e["M" + head_pair[0]] + e["M" + head_pair[1]]
            t = e["M" + tail_pair[0]] + e["M" + tail_pair[1]] - e["S" + tail_pair[0]] - e["S" + tail_pair[1]]
            return z * h * t
        return rule

    return {
        "S++": s(("-+", "++"), ("++", "+-")),
        "S--": s(("--", "+-"), ("--", "-+")),
        "S-+": s(("++", "-+"), ("--", "-+")),
        "S+-": s(("--", "+-"), ("++", "+-")),
    }


def _minimal_rules():
    rules = _series_rules()

    def Fodd(name):
        def rule(e, z):
            d = (z + z * z * e["M"]) ** 2
            return d * (e[name] + 2 * z * d)
        return rule

    def Podd(fname):
        def rule(e, z):
            return z ** 3 * (1 + z * e["M"]) ** 3 + z * e[fname] * e["M"]
        return rule

    rules.update({
        "F-+": Fodd("F-+"),
        "F+-": Fodd("F+-"),
        "P-+": Podd("F-+"),
        "P+-": Podd("F+-"),
        "M-+": lambda e, z: e["S-+"] + e["P-+"] + e["F-+"],
        "M+-": lambda e, z: e["S+-"] + e["P+-"] + e["F+-"],
        "M++": lambda e, z: e["S++"],
        "M--": lambda e, z: e["S--"],
        "M": lambda e, z: e["M++"] + e["M+-"] + e["M-+"] + e["M--"],
    })
    return rules


def _unknot_rules(order: int):
    T1 = build_Tr(1, order)
    T3 = build_Tr(3, order)
    rules = {
        "U+": lambda e, z: 2 * z + 2 * z * z * e["M"],
        "U-": lambda e, z: 2 * z + 2 * z * z * e["M"],
    }
    rules.update(_series_rules())

    def twist(e, z):
        d = (z + z * z * e["M"]) ** 2
        return d, compose(T1, d), compose(T3, d)

    def F_opposite(e, z):
        d, t1, _ = twist(e, z)
        return 4 * z * d * t1

    def F_same(e, z):
        d, t1, t3 = twist(e, z)
        return 2 * z * d * (t1 + t3)

    rules.update({
        "F-+": F_opposite,
        "F+-": F_opposite,
        "F++": F_same,
        "F--": F_same,
    })
    for k in ("++", "-+", "+-", "--"):
        rules["P" + k] = (lambda name: lambda e, z: z * e[name] * e["M"])("F" + k)
    rules.update({
        "M++": lambda e, z: e["S++"] + e["P++"] + e["F++"],
        # the head/tail loop classes are the U classes of the same system
        "M-+": lambda e, z: e["S-+"] + e["P-+"] + e["F-+"] + e["U+"],
        "M+-": lambda e, z: e["S+-"] + e["P+-"] + e["F+-"] + e["U-"],
        "M--": lambda e, z: e["S--"] + e["P--"] + e["F--"],
        "M": lambda e, z: e["M++"] + e["M-+"] + e["M+-"] + e["M--"],
    })
    return rules


def grammar(family: str, order: int) -> GrammarSystem:
    if family == "all":
        return GrammarSystem(_all_rules(), order)
    if family == "minimal":
        return GrammarSystem(_minimal_rules(), order)
    if family == "unknot":
        return GrammarSystem(_unknot_rules(order), order)
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


@dataclass(frozen=True)
class MapGrammarSolution:
    family: str
    unknowns: dict = field(repr=False)
    plus_series: TruncSeries
    order: int

    @property
    def M(self) -> TruncSeries:
        return self.unknowns["M"]


def _plus_all(M: TruncSeries, order: int) -> TruncSeries:
    c = [0] * (order + 1)
    for n in range(2, order + 1, 2):
        c[n] = 2 ** (n // 2) * M[n - 1]
    return TruncSeries(c)


def _check_solution(family: str, unknowns: dict, plus: TruncSeries) -> None:
    for name, s in unknowns.items():
        for n, c in enumerate(s.coeffs):
            if not isinstance(c, int) or c < 0:
                raise SeriesError(f"[z^{n}]{name} = {c} in family {family} is not a nonnegative integer")
    if any(plus[n] for n in range(1, plus.order + 1, 2)):
        raise SeriesError(f"{family}: rooted diagram series has odd-exponent terms")


def solve(family: str, order: int) -> MapGrammarSolution:
    """Solve one family's grammar and derive its root-and-crossing counting series."""
    if order < 1:
        raise ValueError("order must be at least 1")
    unknowns = solve_fixpoint(grammar(family, order))
    M = unknowns["M"]
    if family == "all":
        plus = _plus_all(M, order)
    else:
        plus = M.shift(1)
    _check_solution(family, unknowns, plus)
    return MapGrammarSolution(family, unknowns, plus, order)


def solve_all(order: int) -> MapGrammarSolution:
    return solve("all", order)


def solve_minimal(order: int) -> MapGrammarSolution:
    return solve("minimal", order)


def solve_unknot(order: int) -> MapGrammarSolution:
    return solve("unknot", order)


# -- elimination polynomials ----------------------------------------------

@dataclass(frozen=True)
class Polynomial:
    """Sparse polynomial with rational coefficients.

    ``terms`` maps exponent tuples ``(i_z, i_y, i_t1, ...)`` to coefficients,
    following the variable order in ``variables``.
    """

    terms: dict
    variables: tuple = ("z", "y")

    def __call__(self, *values):
        total = 0
        for exps, c in self.terms.items():
            term = c
            for v, k in zip(values, exps):
                if k:
                    term = term * v ** k
            total = total + term
        return total

    def diff(self, var: int | str) -> "Polynomial":
        i = self.variables.index(var) if isinstance(var, str) else var
        out = {}
        for exps, c in self.terms.items():
            k = exps[i]
            if k:
                e = list(exps)
                e[i] -= 1
                out[tuple(e)] = out.get(tuple(e), 0) + c * k
        return Polynomial(out, self.variables)

    def degree(self, var: int | str) -> int:
        i = self.variables.index(var) if isinstance(var, str) else var
        return max(e[i] for e in self.terms)


def _poly(spec, variables=("z", "y")):
    return Polynomial({tuple(e): Fraction(c) for c, e in spec}, variables)


# (coefficient, (exp_z, exp_y))
P_ALL = _poly([
    (1, (11, 6)), (6, (10, 5)), (15, (9, 4)), (-1, (7, 4)), (20, (8, 3)), (-4, (6, 3)),
    (15, (7, 2)), (1, (4, 3)), (-6, (5, 2)), (6, (6, 1)), (4, (3, 2)), (-4, (4, 1)),
    (1, (5, 0)), (5, (2, 1)), (-1, (3, 0)), (-1, (0, 1)), (2, (1, 0)),
])

P_MINIMAL = _poly([
    (2, (11, 6)), (12, (10, 5)), (30, (9, 4)), (2, (7, 4)), (40, (8, 3)), (8, (6, 3)),
    (30, (7, 2)), (1, (4, 3)), (12, (5, 2)), (12, (6, 1)), (2, (3, 2)), (8, (4, 1)),
    (2, (5, 0)), (1, (2, 1)), (2, (3, 0)), (-1, (0, 1)),
])

# (coefficient, (exp_z, exp_y, exp_t1, exp_t3))
P_UNKNOT = _poly([
    (12, (7, 4, 1, 0)), (4, (7, 4, 0, 1)), (48, (6, 3, 1, 0)), (16, (6, 3, 0, 1)),
    (72, (5, 2, 1, 0)), (24, (5, 2, 0, 1)), (48, (4, 1, 1, 0)), (16, (4, 1, 0, 1)),
    (4, (3, 2, 0, 0)), (12, (3, 0, 1, 0)), (4, (3, 0, 0, 1)), (8, (2, 1, 0, 0)),
    (-1, (0, 1, 0, 0)), (4, (1, 0, 0, 0)),
], ("z", "y", "t1", "t3"))

POLYNOMIALS = {"all": P_ALL, "minimal": P_MINIMAL, "unknot": P_UNKNOT}


@dataclass(frozen=True)
class EliminationCheck:
    family: str
    ok: bool
    order: int
    first_failure: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def elimination_residual(family: str, solution: MapGrammarSolution) -> TruncSeries:
    """The family's polynomial evaluated on the solved series (exact)."""
    M = solution.M
    N = solution.order
    z = TruncSeries.z(N)
    if family == "unknot":
        d = (z + z * z * M) ** 2
        t1 = compose(build_Tr(1, N), d)
        t3 = compose(build_Tr(3, N), d)
        return POLYNOMIALS[family](z, M, t1, t3)
    return POLYNOMIALS[family](z, M)


def check_elimination(family: str, order: int = 64,
                      solution: MapGrammarSolution | None = None) -> EliminationCheck:
    """Verify ``p(z, M(z)) == 0 mod z^{order+1}`` for a solved family."""
    if solution is None:
        solution = solve(family, order)
    res = elimination_residual(family, solution)
    for n, c in enumerate(res.coeffs):
        if c:
            return EliminationCheck(family, False, solution.order, n)
    return EliminationCheck(family, True, solution.order)
