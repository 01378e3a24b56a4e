"""The truncated series engine and the Hilbert scheme diamonds."""

from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from _oracles import naive_truncated_product
from ihshodge.diamond import (
    HodgeDiamond,
    betti,
    check_diamond,
    euler_characteristic,
    salamon_residual,
)
from ihshodge.goettsche import (
    DEFAULT_MAX_N,
    TruncatedSeries3,
    abelian_fourfold_diamond,
    factor_power,
    hilbert_scheme_diamond,
    series_mul,
    surface_diamond,
)

K3_HILB2 = {
    (0, 0): 1,
    (2, 0): 1, (1, 1): 21, (0, 2): 1,
    (4, 0): 1, (3, 1): 21, (2, 2): 232, (1, 3): 21, (0, 4): 1,
    (4, 2): 1, (3, 3): 21, (2, 4): 1,
    (4, 4): 1,
}

K3_HILB3 = {
    (0, 0): 1,
    (2, 0): 1, (1, 1): 21, (0, 2): 1,
    (4, 0): 1, (3, 1): 22, (2, 2): 253, (1, 3): 22, (0, 4): 1,
    (6, 0): 1, (5, 1): 21, (4, 2): 253, (3, 3): 2004, (2, 4): 253,
    (1, 5): 21, (0, 6): 1,
    (6, 2): 1, (5, 3): 22, (4, 4): 253, (3, 5): 22, (2, 6): 1,
    (6, 4): 1, (5, 5): 21, (4, 6): 1,
    (6, 6): 1,
}


# ---------------------------------------------------------------------------
# series engine


def test_one_is_multiplicative_unit():
    one = TruncatedSeries3.one(4, 2)
    f = TruncatedSeries3({(1, 0, 1): 3, (0, 2, 2): -5}, 4, 2)
    assert series_mul(one, f) == f
    assert one * f == f * one


def test_out_of_bound_monomials_dropped():
    f = TruncatedSeries3({(5, 0, 0): 7, (1, 1, 1): 2}, 4, 2)
    assert f.coefficient(5, 0, 0) == 0
    assert f.coefficient(1, 1, 1) == 2


def test_negative_exponents_rejected():
    with pytest.raises(ValueError):
        TruncatedSeries3({(-1, 0, 0): 1}, 4, 2)


def test_bound_mismatch_rejected():
    a = TruncatedSeries3.one(4, 2)
    b = TruncatedSeries3.one(4, 3)
    with pytest.raises(ValueError):
        series_mul(a, b)


def test_difference_of_squares():
    plus = TruncatedSeries3({(0, 0, 0): 1, (1, 0, 1): 1}, 4, 4)
    minus = TruncatedSeries3({(0, 0, 0): 1, (1, 0, 1): -1}, 4, 4)
    product = plus * minus
    assert product == TruncatedSeries3({(0, 0, 0): 1, (2, 0, 2): -1}, 4, 4)


def test_t_slice():
    f = TruncatedSeries3({(1, 1, 2): 4, (0, 0, 2): 1, (1, 0, 1): 9}, 4, 2)
    assert f.t_slice(2) == {(0, 0): 1, (1, 1): 4}


def monomial_key():
    return st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 2))


def coeffs_strategy():
    return st.dictionaries(monomial_key(), st.integers(-5, 5), max_size=5)


@given(coeffs_strategy(), coeffs_strategy())
def test_product_matches_naive_convolution(ca, cb):
    a = TruncatedSeries3(ca, 3, 2)
    b = TruncatedSeries3(cb, 3, 2)
    got = dict(series_mul(a, b).items())
    expected = naive_truncated_product(dict(a.items()), dict(b.items()), 3, 2)
    assert got == expected


@given(coeffs_strategy(), coeffs_strategy(), coeffs_strategy())
def test_product_laws(ca, cb, cc):
    a = TruncatedSeries3(ca, 3, 2)
    b = TruncatedSeries3(cb, 3, 2)
    c = TruncatedSeries3(cc, 3, 2)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)


# ---------------------------------------------------------------------------
# factor expansion


def test_factor_power_geometric_series():
    f = factor_power((1, 1, 1), -1, -1, 3, 3)
    assert dict(f.items()) == {(0, 0, 0): 1, (1, 1, 1): 1, (2, 2, 2): 1,
                               (3, 3, 3): 1}


def test_factor_power_positive_square():
    f = factor_power((1, 0, 1), 1, 2, 4, 4)
    assert dict(f.items()) == {(0, 0, 0): 1, (1, 0, 1): 2, (2, 0, 2): 1}


def test_factor_power_negative_binomial():
    f = factor_power((1, 1, 1), -1, -20, 4, 2)
    assert f.coefficient(1, 1, 1) == 20
    assert f.coefficient(2, 2, 2) == 210


def test_factor_power_alternating_signs():
    f = factor_power((1, 0, 1), 1, -2, 6, 6)
    assert f.coefficient(3, 0, 3) == -4


def test_factor_power_validates_input():
    with pytest.raises(ValueError):
        factor_power((0, 0, 0), 1, 2, 4, 4)
    with pytest.raises(ValueError):
        factor_power((1, 0, 1), 3, 2, 4, 4)


# ---------------------------------------------------------------------------
# surfaces


def test_surface_diamonds():
    k3 = surface_diamond("k3")
    assert k3.h(1, 1) == 20
    assert euler_characteristic(k3) == 24
    abelian = surface_diamond("abelian")
    assert abelian.h(1, 0) == 2
    assert abelian.h(1, 1) == 4
    assert euler_characteristic(abelian) == 0
    point = surface_diamond("point")
    assert point.entries == {(0, 0): 1}
    assert point.complex_dimension == 0
    with pytest.raises(ValueError):
        surface_diamond("enriques")


def test_abelian_fourfold_diamond():
    fourfold = abelian_fourfold_diamond()
    assert fourfold.h(1, 1) == 16
    assert fourfold.h(2, 1) == 24
    assert euler_characteristic(fourfold) == 0
    assert check_diamond(fourfold).ok


# ---------------------------------------------------------------------------
# Hilbert scheme diamonds


def test_hilb_zero_points_is_a_point():
    assert hilbert_scheme_diamond(surface_diamond("k3"), 0) == \
        surface_diamond("point")


@pytest.mark.parametrize("kind", ["k3", "abelian"])
def test_hilb_one_point_is_the_surface(kind):
    surface = surface_diamond(kind)
    assert hilbert_scheme_diamond(surface, 1) == surface


def test_k3_hilb2_table():
    d = hilbert_scheme_diamond(surface_diamond("k3"), 2)
    assert d.entries == K3_HILB2
    assert betti(d).b == (1, 0, 23, 0, 276, 0, 23, 0, 1)
    assert salamon_residual(betti(d).lower_half()) == 0


def test_k3_hilb3_table():
    d = hilbert_scheme_diamond(surface_diamond("k3"), 3)
    assert d.entries == K3_HILB3
    assert betti(d).b == (1, 0, 23, 0, 299, 0, 2554, 0, 299, 0, 23, 0, 1)
    assert euler_characteristic(d) == 3200
    assert check_diamond(d).ok


@pytest.mark.parametrize("n", [1, 2, 3])
def test_abelian_hilbert_schemes(n):
    d = hilbert_scheme_diamond(surface_diamond("abelian"), n)
    assert euler_characteristic(d) == 0
    assert d.h(0, 0) == 1
    assert check_diamond(d).ok


def test_hilb_cap_enforced():
    k3 = surface_diamond("k3")
    with pytest.raises(ValueError):
        hilbert_scheme_diamond(k3, DEFAULT_MAX_N + 1)
    with pytest.raises(ValueError):
        hilbert_scheme_diamond(k3, -1)
    assert hilbert_scheme_diamond(k3, 4, max_n=4).complex_dimension == 8


def test_hilb_requires_a_surface():
    with pytest.raises(ValueError):
        hilbert_scheme_diamond(surface_diamond("point"), 2)
    with pytest.raises(ValueError):
        hilbert_scheme_diamond(HodgeDiamond({(0, 0): 1}), 2)


def test_hilb_odd_cohomology_stays_nonnegative():
    # Odd-degree classes enter the product through (1 + m)^h factors, so
    # every coefficient stays nonnegative whatever nonnegative table the
    # caller feeds in; the negativity guard inside is purely defensive.
    fake = HodgeDiamond({(0, 0): 1, (1, 0): 5, (0, 1): 5},
                        complex_dimension=2)
    d = hilbert_scheme_diamond(fake, 2)
    assert d.h(1, 0) == 5
    assert d.h(1, 1) == 26
    assert d.h(2, 1) == 5
    assert all(value > 0 for _, _, value in d.items())
