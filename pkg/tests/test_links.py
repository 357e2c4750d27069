from fractions import Fraction

import pytest

from k4links.links import (
    build_all,
    build_E,
    build_F,
    build_G,
    build_K,
    build_Kbar,
    build_L,
    build_Lbar,
    build_Lhat,
)
from k4links.oracle import enumerate_pointed_T_trees
from k4links.series import TruncSeries, div, pleth_exp, power_substitute


@pytest.fixture(scope="module")
def bundle():
    return build_all(40)


def test_E():
    e = build_E(10)
    assert (e[2], e[3], e[8]) == (1, 0, 2)
    assert list(e) == [0, 0, 1, 0, 2, 0, 2, 0, 2, 0, 2]


def test_Kbar():
    k = build_Kbar(9)
    assert (k[3], k[4], k[9]) == (2, 0, 2)
    assert list(build_Kbar(5) + TruncSeries.zero(5)) == [0, 0, 0, 2, 0, 2]


def test_K():
    k = build_K(15)
    assert (k[0], k[6], k[15]) == (1, 3, 26)
    assert k[1] == k[2] == k[4] == 0


def test_E_times_K_against_direct_convolution():
    e, k = build_E(12), build_K(12)
    direct = [sum(e[i] * k[n - i] for i in range(n + 1)) for n in range(13)]
    assert list(e * k) == direct
    assert direct[:6] == [0, 0, 1, 0, 2, 2]


def test_F_valuation_and_pointed_trees():
    f = build_F(10)
    assert f[0] == f[1] == 0 and f[2] == 1
    pointed = div(f, build_E(10))
    assert pointed[0] == 1
    assert pointed.order == 8  # dividing by E costs its valuation
    assert pointed * build_E(8) == f.truncate(8)
    assert [pointed[n] for n in range(9)] == [enumerate_pointed_T_trees(n) for n in range(9)]


def test_Lbar_examples():
    lb = build_Lbar(12)
    assert (lb[1], lb[10], lb[12]) == (0, 82, 280)


def test_Lhat_examples():
    lh = build_Lhat(12)
    assert (lh[0], lh[9], lh[12]) == (1, 98, 805)
    assert list(power_substitute(lh, 2))[:7] == [1, 0, 0, 0, 1, 0, 2]


def test_Lhat_is_multiset_of_Lbar():
    lb = build_Lbar(20)
    assert build_Lhat(20) == pleth_exp(lb - 1)


def test_L_examples():
    l = build_L(13)
    assert (l[0], l[4], l[12], l[13]) == (0, 2, 30, 30)


def test_bundle_invariants(bundle):
    for name in ("Kbar", "K", "Lbar", "Lhat", "L"):
        s = getattr(bundle, name)
        assert s.is_integral(), name
        assert all(c >= 0 for c in s), name
    assert all(bundle.L[2 * n] == bundle.L[2 * n + 1] for n in range(1, 20))
    assert bundle.T_pointed * bundle.E == bundle.F


def test_bundle_agrees_with_individual_builders(bundle):
    assert bundle.Lbar == build_Lbar(40)
    assert bundle.L == build_L(40)


def test_partition_identity():
    order = 200
    g, k = build_G(order), build_K(order)
    one_minus_z_sq = TruncSeries([1, -2, 1], order)
    assert one_minus_z_sq * g == k


def test_G_is_product_of_squared_distinct_parts():
    order = 30
    prod = TruncSeries.one(order)
    for n in range(1, order + 1):
        prod = prod * (TruncSeries.one(order) + TruncSeries.monomial(n, order)) ** 2
    assert build_G(order) == prod


def test_rational_coefficients_only():
    assert all(isinstance(c, (int, Fraction)) for c in build_Lbar(15))
