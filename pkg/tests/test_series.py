from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from k4links.links import build_Kbar
from k4links.series import (
    FixpointDivergence,
    GrammarSystem,
    SeriesError,
    TruncSeries,
    binomial_series,
    compose,
    div,
    exp,
    geometric,
    log1p,
    pleth_exp,
    pleth_sum,
    power_substitute,
    solve_fixpoint,
)

ORDER = 8
coeff = st.one_of(st.integers(-20, 20), st.builds(Fraction, st.integers(-20, 20), st.integers(1, 6)))
series = st.lists(coeff, min_size=ORDER + 1, max_size=ORDER + 1).map(TruncSeries)
no_constant = series.map(lambda s: s - s[0])


@given(series, series)
def test_addition_commutes(a, b):
    assert a + b == b + a


@given(series, series, series)
@settings(max_examples=50)
def test_multiplication_associates_and_distributes(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(series)
def test_identities(a):
    assert a + TruncSeries.zero(ORDER) == a
    assert a * TruncSeries.one(ORDER) == a
    assert a - a == TruncSeries.zero(ORDER)


@given(series, series.map(lambda s: s - s[0] + 1))
@settings(max_examples=50)
def test_division_inverts_multiplication(a, b):
    assert div(a * b, b) == a


@given(no_constant)
@settings(max_examples=50)
def test_exp_log_roundtrip(a):
    assert log1p(exp(a) - 1) == a


@given(no_constant, no_constant)
@settings(max_examples=30)
def test_exp_is_a_homomorphism(a, b):
    assert exp(a + b) == exp(a) * exp(b)


@given(series, no_constant)
@settings(max_examples=30)
def test_compose_agrees_with_powers(outer, inner):
    direct = TruncSeries.zero(ORDER)
    for k, c in enumerate(outer):
        direct = direct + inner ** k * c
    assert compose(outer, inner) == direct


def test_small_examples():
    z = TruncSeries.z(4)
    assert (1 + z) + z == TruncSeries([1, 2], 4)
    assert (1 + z) * (1 - z) == TruncSeries([1, 0, -1], 4)
    assert div(z * z, 1 - z * z) == TruncSeries([0, 0, 1, 0, 1], 4)
    assert compose(geometric(6), TruncSeries.monomial(2, 6)) == TruncSeries([1, 0, 1, 0, 1, 0, 1])
    assert exp(TruncSeries.zero(5)) == TruncSeries.one(5)
    assert exp(TruncSeries.z(3)).coeffs == (1, 1, Fraction(1, 2), Fraction(1, 6))
    assert power_substitute(TruncSeries([1, 1], 4), 2) == TruncSeries([1, 0, 1], 4)
    assert pleth_exp(TruncSeries.zero(4)) == TruncSeries.one(4)


def test_exp_coefficients_against_factorials():
    e = exp(TruncSeries.z(10))
    assert e.coeffs == tuple(Fraction(1, factorial(n)) for n in range(11))


def test_pleth_exp_of_positive_integers_counts_partitions():
    def partitions(n, largest=None):
        largest = n if largest is None else largest
        if n == 0:
            return 1
        return sum(partitions(n - k, k) for k in range(1, min(n, largest) + 1))

    p = pleth_exp(geometric(20) - 1)
    assert list(p) == [partitions(n) for n in range(21)]
    assert p.is_integral()


def test_pleth_exp_matches_exp_of_pleth_sum():
    kbar = build_Kbar(16)
    assert pleth_exp(kbar) == exp(pleth_sum(kbar))
    assert list(pleth_exp(kbar))[:7] == [1, 0, 0, 2, 0, 2, 3]


def test_shift_of_kbar():
    shifted = build_Kbar(9).shift(2)
    assert list(shifted) == [0, 0, 0, 0, 0, 2, 0, 2, 0, 2]


def test_binomial_series():
    assert list(binomial_series(5, 1)) == [comb(2 * n + 1, n) for n in range(6)]


def test_errors():
    z = TruncSeries.z(3)
    with pytest.raises(SeriesError):
        exp(1 + z)
    with pytest.raises(SeriesError):
        compose(z, 1 + z)
    with pytest.raises(SeriesError):
        div(z, z * z)
    with pytest.raises(SeriesError):
        div(z, TruncSeries.zero(3))
    with pytest.raises(SeriesError):
        pleth_exp(1 + z)
    with pytest.raises(SeriesError):
        z.truncate(5)
    with pytest.raises(IndexError):
        z[4]
    with pytest.raises(TypeError):
        TruncSeries([0.5])


def test_fixpoint_catalan():
    sys_ = GrammarSystem({"y": lambda e, z: z + e["y"] * e["y"]}, 10)
    y = solve_fixpoint(sys_)["y"]
    assert list(y) == [0] + [comb(2 * n, n) // (n + 1) for n in range(10)]


def test_fixpoint_gain_does_not_change_result():
    rule = {"y": lambda e, z: z + z * e["y"] * e["y"]}
    a = solve_fixpoint(GrammarSystem(rule, 12, gain=1))["y"]
    b = solve_fixpoint(GrammarSystem(rule, 12, gain=3))["y"]
    assert a == b


def test_fixpoint_divergence_and_bad_valuation():
    with pytest.raises(FixpointDivergence):
        solve_fixpoint(GrammarSystem({"y": lambda e, z: z + e["y"] * 2}, 6))
    with pytest.raises(SeriesError):
        solve_fixpoint(GrammarSystem({"y": lambda e, z: 1 + e["y"]}, 6))
