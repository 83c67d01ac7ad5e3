import pytest
from hypothesis import given, settings, strategies as st

from extsq.algebra import (
    BiSeries,
    SymPoly,
    geometric,
    is_quotient_normal,
    poly_add,
    poly_mul,
    quotient_normalize,
    series_inverse,
    series_mul,
)
from extsq.symmetric import elementary_e, homogeneous_h, schur_oracle

from conftest import small_polys, small_series


def test_normalize_subtracts_min_exponent():
    p = SymPoly(3, {(2, 1, 1): 1})
    assert quotient_normalize(p) == SymPoly(3, {(1, 0, 0): 1})


def test_normalize_cancels_e2_minus_one(alpha):
    a1, a2 = alpha(2)
    assert quotient_normalize(a1 * a2 - 1).is_zero()


def test_e1_e2_normalized_is_s21_plus_one():
    # tableau oracle for S_(2,1), plus the collapsed alpha1 alpha2 alpha3 term, in the quotient
    expected = quotient_normalize(schur_oracle((2, 1), 3) + 1)
    assert expected.to_text() == "a1^2*a2 + a1^2*a3 + a1*a2^2 + a1*a3^2 + a2^2*a3 + a2*a3^2 + 3"
    got = poly_mul(elementary_e(1, 3), elementary_e(2, 3), normalize=True)
    assert got == expected
    assert quotient_normalize(elementary_e(1, 3) * elementary_e(2, 3)) == expected


def test_poly_add_examples(alpha):
    a1, a2 = alpha(2)
    assert (a1 + (-a1)).is_zero()
    assert poly_add(a1 + a2, a2) == a1 + 2 * a2
    n = 4
    assert homogeneous_h(1, n) + elementary_e(1, n) == 2 * sum(alpha(n), SymPoly.zero(n))


def test_poly_mul_examples(alpha):
    a1, a2 = alpha(2)
    assert (a1 + a2) * (a1 - a2) == a1**2 - a2**2
    p = 3 * a1**2 - a2 + 7
    assert p * SymPoly.constant(1, 2) == p


def test_nvars_mismatch_raises():
    with pytest.raises(ValueError):
        poly_add(SymPoly.constant(1, 2), SymPoly.constant(1, 3))
    with pytest.raises(ValueError):
        poly_mul(SymPoly.constant(1, 2), SymPoly.constant(1, 3))


def test_zero_coefficients_are_dropped():
    p = SymPoly(2, {(1, 0): 0, (0, 1): 2})
    assert len(p) == 1
    assert (p - p).terms == {}


def test_to_text_is_canonical(alpha):
    a1, a2, a3 = alpha(3)
    p = a3 - 2 * a1**2 * a2 + 1
    assert p.to_text() == "-2*a1^2*a2 + a3 + 1"
    assert SymPoly.zero(3).to_text() == "0"
    assert (a3 + a1 - 1).to_text() == "a1 + a3 - 1"


@given(small_polys(3))
def test_serialization_deterministic(p):
    q = SymPoly(3, dict(reversed(list(p.terms.items()))))
    assert p.to_text() == q.to_text()


@given(small_polys(3))
def test_normalize_idempotent(p):
    once = quotient_normalize(p)
    assert quotient_normalize(once) == once
    assert is_quotient_normal(once)


@given(small_polys(3), small_polys(3))
def test_normalize_is_ring_map(p, q):
    assert quotient_normalize(p * q) == quotient_normalize(quotient_normalize(p) * quotient_normalize(q))
    assert quotient_normalize(p * q) == poly_mul(p, q, normalize=True)


@given(small_polys(2), small_polys(2), small_polys(2))
def test_distributivity(p, q, r):
    assert p * (q + r) == p * q + p * r


def test_series_mul_identity():
    a1 = SymPoly.variable(0, 2)
    f = BiSeries(2, 3, 2, {(1, 0): a1, (0, 2): a1 + 3})
    assert series_mul(f, BiSeries.one(2, 3, 2)) == f


def test_telescoping():
    a1 = SymPoly.variable(0, 2)
    lin = BiSeries(2, 5, 1, {(0, 0): 1, (1, 0): -a1})
    geo = BiSeries(2, 5, 1, {(k, 0): a1**k for k in range(6)})
    assert series_mul(lin, geo) == BiSeries.one(2, 5, 1)


@settings(max_examples=40)
@given(small_series(2, 2, 2), small_series(2, 2, 2), small_series(2, 2, 2))
def test_series_ring_laws(f, g, h):
    assert series_mul(series_mul(f, g), h) == series_mul(f, series_mul(g, h))
    assert series_mul(f, g) == series_mul(g, f)


@settings(max_examples=40)
@given(small_series(2, 3, 2, unit=True))
def test_series_inverse_property(f):
    assert series_mul(f, series_inverse(f)) == BiSeries.one(2, 3, 2)


def test_inverse_geometric_examples():
    one = SymPoly.constant(1, 2)
    f = BiSeries(2, 0, 4, {(0, 0): 1, (0, 1): -one})
    assert series_inverse(f) == BiSeries(2, 0, 4, {(0, b): 1 for b in range(5)})
    a1 = SymPoly.variable(0, 2)
    g = BiSeries(2, 4, 0, {(0, 0): 1, (1, 0): -a1})
    assert series_inverse(g) == BiSeries(2, 4, 0, {(a, 0): a1**a for a in range(5)})
    assert series_inverse(g) == geometric(a1, 1, 0, 4, 0)


def test_two_linear_inverses_give_h2(alpha):
    a1, a2 = alpha(2)
    f1 = series_inverse(BiSeries(2, 2, 0, {(0, 0): 1, (1, 0): -a1}))
    f2 = series_inverse(BiSeries(2, 2, 0, {(0, 0): 1, (1, 0): -a2}))
    assert series_mul(f1, f2).coeff(2, 0) == a1**2 + a1 * a2 + a2**2
    assert series_mul(f1, f2).coeff(2, 0) == homogeneous_h(2, 2)


def test_series_errors():
    f = BiSeries.one(2, 1, 1)
    with pytest.raises(ValueError):
        series_mul(f, BiSeries.one(2, 2, 1))
    with pytest.raises(ValueError):
        series_mul(f, BiSeries.one(3, 1, 1))
    with pytest.raises(ValueError):
        series_inverse(BiSeries(2, 1, 1, {(0, 0): 2}))


def test_series_drops_terms_past_caps():
    f = BiSeries(1, 1, 1, {(2, 0): 1, (0, 0): 1})
    assert f.keys() == [(0, 0)]
