from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from extsq.algebra import BiSeries, SymPoly, quotient_normalize, series_inverse, series_mul
from extsq.symmetric import (
    FourierIndex,
    Partition,
    conjugate,
    elementary_e,
    enumerate_partitions,
    homogeneous_h,
    index_of_partition,
    is_conjugate_even,
    lambda_of_index,
    one_box_extensions,
    schur,
    schur_oracle,
    semistandard_tableaux,
)


def restricted_partition_count(w, k):
    # p(w, <=k parts) via p(w, k) = p(w, k-1) + p(w-k, k)
    table = [[0] * (k + 1) for _ in range(w + 1)]
    for j in range(k + 1):
        table[0][j] = 1
    for i in range(1, w + 1):
        for j in range(1, k + 1):
            table[i][j] = table[i][j - 1] + (table[i - j][j] if i >= j else 0)
    return table[w][k]


partitions_st = st.lists(st.integers(1, 6), max_size=5).map(lambda xs: Partition(sorted(xs, reverse=True)))


def test_conjugate_examples():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()
    assert conjugate((2, 2)) == (2, 2)


@given(partitions_st)
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert conjugate(lam).weight == lam.weight


def test_conjugate_even_examples():
    assert is_conjugate_even((1, 1))
    assert is_conjugate_even((2, 2))
    assert not is_conjugate_even((3, 1))


def test_partition_validation_and_text():
    with pytest.raises(ValueError):
        Partition((1, 2))
    assert Partition((3, 1, 0)) == (3, 1)
    assert Partition((3, 1)).text() == "3+1"
    assert Partition.parse("3+1") == Partition.parse("3,1") == (3, 1)
    assert Partition.parse("0") == ()
    assert FourierIndex((1, 0, 2)).text() == "k=(1,0,2)"
    assert FourierIndex.parse("k=(1,0,2)") == (1, 0, 2)


def test_enumerate_partitions_examples():
    assert set(enumerate_partitions(4, 2)) == {(4,), (3, 1), (2, 2)}
    assert enumerate_partitions(0, 3) == [()]
    assert len(enumerate_partitions(6, 3)) == 7


@pytest.mark.parametrize("w", range(10))
@pytest.mark.parametrize("k", range(6))
def test_enumerate_partitions_counts(w, k):
    parts = enumerate_partitions(w, k)
    assert len(parts) == len(set(parts)) == restricted_partition_count(w, k)
    assert enumerate_partitions(w, k) == parts


def test_h_and_e_examples(alpha):
    a = alpha(3)
    assert homogeneous_h(0, 4) == 1
    assert homogeneous_h(1, 3) == a[0] + a[1] + a[2]
    b1, b2 = alpha(2)
    assert homogeneous_h(2, 2) == b1**2 + b1 * b2 + b2**2
    assert elementary_e(2, 3) == a[0] * a[1] + a[0] * a[2] + a[1] * a[2]
    assert elementary_e(4, 3).is_zero()
    assert elementary_e(3, 3) == a[0] * a[1] * a[2]


def test_schur_examples(alpha):
    for n in (1, 2, 4):
        for k in range(5):
            assert schur((k,), n) == homogeneous_h(k, n)
    assert schur((1, 1), 2) == elementary_e(2, 2)
    a1, a2, a3 = alpha(3)
    expected = (a1**2 * a2 + a1**2 * a3 + a2**2 * a1 + a2**2 * a3 + a3**2 * a1 + a3**2 * a2
                + 2 * a1 * a2 * a3)
    assert schur((2, 1), 3) == expected
    assert schur((1, 1, 1), 2).is_zero()


def test_oracle_examples(alpha):
    a = alpha(3)
    assert schur_oracle((1,), 3) == a[0] + a[1] + a[2]
    assert len(list(semistandard_tableaux((1,), 3))) == 3
    assert schur_oracle((1, 1, 1), 2).is_zero()
    assert len(list(semistandard_tableaux((2, 1), 3))) == 8
    assert schur_oracle((2, 1), 3) == schur((2, 1), 3)
    with pytest.raises(ValueError):
        schur_oracle((13,), 2)


@pytest.mark.parametrize("n", range(1, 6))
def test_schur_matches_oracle(n):
    for w in range(7):
        for lam in enumerate_partitions(w, w):
            assert schur(lam, n) == schur_oracle(lam, n), (lam, n)


@pytest.mark.parametrize("n", range(1, 5))
def test_schur_symmetric(n):
    for w in range(5):
        for lam in enumerate_partitions(w, n):
            s = schur(lam, n)
            for perm in permutations(range(n)):
                assert s.permute(perm) == s


@pytest.mark.parametrize("n", range(2, 6))
def test_stability(n):
    for w in range(6):
        for lam in enumerate_partitions(w, n - 1):
            assert schur(lam, n).substitute_zero(n - 1) == schur(lam, n - 1)


@pytest.mark.parametrize("n", range(2, 6))
def test_column_augmentation(n):
    en = elementary_e(n, n)
    for w in range(5):
        for lam in enumerate_partitions(w, n):
            bigger = Partition(x + 1 for x in lam.padded(n))
            assert schur(bigger, n) == en * schur(lam, n)
            assert quotient_normalize(schur(bigger, n)) == quotient_normalize(schur(lam, n))


@pytest.mark.parametrize("n", range(1, 5))
def test_h_generating_function(n):
    cap = 5
    h_series = BiSeries(n, cap, 0, {(k, 0): homogeneous_h(k, n) for k in range(cap + 1)})
    prod = BiSeries.one(n, cap, 0)
    for i in range(n):
        prod = series_mul(prod, BiSeries(n, cap, 0, {(0, 0): 1, (1, 0): -SymPoly.variable(i, n)}))
    assert series_mul(h_series, prod) == BiSeries.one(n, cap, 0)


@pytest.mark.parametrize("n", range(1, 5))
def test_pieri(n):
    e1 = elementary_e(1, n)
    for w in range(6):
        for lam in enumerate_partitions(w, n):
            rhs = SymPoly.zero(n)
            for mu in one_box_extensions(lam, max_parts=n):
                rhs = rhs + schur(mu, n)
            assert e1 * schur(lam, n) == rhs


def test_one_box_extensions():
    assert set(one_box_extensions((2, 1))) == {(3, 1), (2, 2), (2, 1, 1)}
    assert one_box_extensions(()) == [(1,)]


def test_lambda_of_index_examples():
    assert lambda_of_index((0, 0, 0)) == ()
    assert lambda_of_index((1, 0)) == (1,)
    assert schur(lambda_of_index((1, 0)), 3) == elementary_e(1, 3)
    assert lambda_of_index((0, 1)) == (1, 1)
    assert schur(lambda_of_index((0, 1)), 3) == elementary_e(2, 3)
    assert lambda_of_index((1, 0, 2)) == (3, 2, 2)


def test_lambda_of_index_paper_literal():
    assert lambda_of_index((1, 0), "paper-literal") == ()
    assert lambda_of_index((0, 1), "paper-literal") == (1,)
    with pytest.raises(ValueError):
        lambda_of_index((1,), "nope")


def test_forcing_check_p_coefficient():
    # A(p, 1, ..., 1) must be the p^-s coefficient h_1 = e_1 of prod (1 - alpha_i p^-s)^-1
    for n in range(2, 6):
        k = (1,) + (0,) * (n - 2)
        assert schur(lambda_of_index(k), n) == homogeneous_h(1, n)
        assert schur(lambda_of_index(k, "paper-literal"), n) != homogeneous_h(1, n)


@settings(max_examples=50)
@given(st.lists(st.integers(0, 3), min_size=1, max_size=5))
def test_index_roundtrip(k):
    lam = lambda_of_index(k)
    assert index_of_partition(lam, len(k) + 1) == tuple(k)
