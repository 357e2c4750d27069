from math import comb

import pytest
import sympy as sp

from k4links import maps
from k4links.maps import POLYNOMIALS, build_Tr, check_elimination, solve
from k4links.reference import REFERENCE_SERIES
from k4links.series import TruncSeries, compose


@pytest.fixture(scope="module")
def solutions():
    return {fam: solve(fam, 24) for fam in maps.FAMILIES}


def test_all_plus_series(solutions):
    s = solutions["all"]
    assert list(s.plus_series)[:7] == [0, 0, 4, 0, 36, 0, 432]
    assert s.plus_series[10] == 90112
    assert s.M[1] == 2


def test_minimal_plus_series(solutions):
    s = solutions["minimal"]
    assert list(s.plus_series)[:9] == [0, 0, 0, 0, 2, 0, 4, 0, 20]
    assert s.plus_series[2] == 0
    assert solve("minimal", 20).plus_series[20] == 211332


def test_unknot_plus_series(solutions):
    s = solutions["unknot"]
    assert list(s.plus_series)[:7] == [0, 0, 4, 0, 32, 0, 332]
    assert s.plus_series[16] == 150776064
    assert s.M[1] == 4


@pytest.mark.parametrize("family,key", [("all", "Mplus"), ("minimal", "M1plus"), ("unknot", "M2plus")])
def test_printed_expansions(solutions, family, key):
    ref = REFERENCE_SERIES[key]
    assert list(solutions[family].plus_series)[: len(ref)] == ref


def test_only_even_sizes_and_ordering(solutions):
    for fam, s in solutions.items():
        assert all(s.plus_series[n] == 0 for n in range(1, 25, 2)), fam
    # minimal and unknot diagrams are both subsets of all diagrams
    for n in range(0, 25, 2):
        total = solutions["all"].plus_series[n]
        assert solutions["minimal"].plus_series[n] <= total
        assert solutions["unknot"].plus_series[n] <= total


def test_mirror_symmetry(solutions):
    for fam in ("minimal", "unknot"):
        u = solutions[fam].unknowns
        assert u["M-+"] == u["M+-"]
        assert u["M++"] == u["M--"]
        assert u["S++"] == u["S--"]
        assert u["F-+"] == u["F+-"]
    u = solutions["unknot"].unknowns
    assert u["F++"] == u["F--"]
    assert u["U+"] == u["U-"]


def test_fixpoint_is_idempotent():
    order = 16
    sys_ = maps.grammar("unknot", order)
    sol = solve("unknot", order).unknowns
    z = TruncSeries.z(order)
    for name, rule in sys_.rules.items():
        assert rule(sol, z) == sol[name], name


@pytest.mark.parametrize("family", maps.FAMILIES)
def test_elimination_polynomials(family):
    res = check_elimination(family, 64)
    assert res.ok and res.first_failure is None


def test_elimination_detects_wrong_series():
    sol = solve("all", 12)
    bad = dict(sol.unknowns)
    bad["M"] = sol.M + TruncSeries.monomial(7, 12)
    broken = maps.MapGrammarSolution("all", bad, sol.plus_series, 12)
    res = check_elimination("all", 12, solution=broken)
    assert not res.ok and res.first_failure == 7


def test_Tr_against_binomials():
    t1 = build_Tr(1, 9)
    assert list(t1) == [0, 1, 0, 3, 0, 10, 0, 35, 0, 126]
    t3 = build_Tr(3, 9)
    assert (t3[3], t3[5]) == (comb(3, 0), comb(5, 1))
    assert [t3[3 + 2 * n] for n in range(4)] == [comb(2 * n + 3, n) for n in range(4)]
    with pytest.raises(ValueError):
        build_Tr(2, 5)


def test_Tr_closed_form():
    # T_r(x) = x^r B(x^2)^r / sqrt(1 - 4x^2) with B the Catalan series
    x = sp.symbols("x")
    for r in (1, 3):
        b = (1 - sp.sqrt(1 - 4 * x ** 2)) / (2 * x ** 2)
        closed = sp.series(x ** r * b ** r / sp.sqrt(1 - 4 * x ** 2), x, 0, 16).removeO()
        got = build_Tr(r, 15)
        assert [closed.coeff(x, n) for n in range(16)] == list(got)


def test_unknot_polynomial_rederived_from_grammar():
    """Eliminate the unknot system symbolically and compare with the stored polynomial."""
    z, t1, t3 = sp.symbols("z t1 t3")
    keys = ("++", "+-", "-+", "--")
    env = {}
    for k in keys:
        env["M" + k] = sp.Symbol("M" + k)
        env["S" + k] = sp.Symbol("S" + k)
    M = sum(env["M" + k] for k in keys)
    sum_S = sum(env["S" + k] for k in keys)
    # the four series rules always sum to z M (M - sum S)
    rules = maps._series_rules()
    total = sum(rules["S" + k](env, z) for k in keys)
    assert sp.expand(total - z * M * (M - sum_S)) == 0

    y = sp.Symbol("y")
    d = (z + z ** 2 * y) ** 2
    sum_F = 2 * 4 * z * d * t1 + 2 * 2 * z * d * (t1 + t3)
    sum_P = z * sum_F * y
    sum_U = 2 * (2 * z + 2 * z ** 2 * y)
    s_val = z * y ** 2 / (1 + z * y)      # solves sum_S = z y (y - sum_S)
    eq = sp.together(s_val + sum_P + sum_F + sum_U - y) * (1 + z * y)
    derived = sp.Poly(sp.expand(sp.cancel(eq)), z, y, t1, t3)
    stored = POLYNOMIALS["unknot"]
    stored_poly = sp.Poly(sum(c * z ** a * y ** b * t1 ** p * t3 ** q
                              for (a, b, p, q), c in stored.terms.items()), z, y, t1, t3)
    assert derived == stored_poly


def test_unknot_F_rules_match_symbolic_sum():
    order = 12
    sol = solve("unknot", order).unknowns
    z = TruncSeries.z(order)
    d = (z + z * z * sol["M"]) ** 2
    t1 = compose(build_Tr(1, order), d)
    t3 = compose(build_Tr(3, order), d)
    sum_F = sum((sol["F" + k] for k in ("++", "+-", "-+", "--")), TruncSeries.zero(order))
    assert sum_F == z * d * (12 * t1 + 4 * t3)


def test_polynomial_diff():
    p = POLYNOMIALS["all"]
    dy = p.diff("y")
    assert dy.terms[(11, 5)] == 6
    assert p.degree("y") == 6 and dy.degree("y") == 5


def test_bad_family_and_order():
    with pytest.raises(ValueError):
        solve("nope", 5)
    with pytest.raises(ValueError):
        solve("all", 0)
