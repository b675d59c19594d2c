import pytest
from hypothesis import given, settings, strategies as st

from conftest import partition_st
from lrtensor import (
    SOutOfRange,
    Tableau,
    lr_coefficient,
    make_partition,
    min_of_s_poset,
    product_schur_expansion,
    s_cut,
    s_cut_witness,
    s_poset,
    size,
    witness_is_valid,
)
from lrtensor.lr import Convention


def P(*parts, n):
    return make_partition(parts, n)


LAM6, MU6 = P(4, 3, 2, 1, 1, n=6), P(5, 4, 3, 2, n=6)


def test_s_cut_examples():
    assert s_cut(LAM6, MU6, 2) == P(9, 7, 3, 3, 2, 1, n=6)
    lam = P(3, 1, n=3)
    for s in range(3):
        assert s_cut(lam, P(n=3), s) == lam
    assert s_cut(P(3, 1, n=3), P(1, 1, n=3), 0) == P(3, 2, 1, n=3)
    assert s_cut(P(2, 1, n=3), P(2, 1, n=3), 0) == P(2, 2, 2, n=3)


@pytest.mark.parametrize("s", [-1, 3, 10])
def test_s_out_of_range(s):
    lam = P(2, 1, n=3)
    for f in (s_cut, s_cut_witness, s_poset, min_of_s_poset):
        with pytest.raises(SOutOfRange):
            f(lam, lam, s)


def test_witness_small():
    lam = P(2, 1, n=3)
    w = s_cut_witness(lam, lam, 0)
    # shape 222/21, bottoms of columns get the two 1s, the box above gets 2
    assert w.rows() == [[], [2], [1, 1]]
    assert witness_is_valid(w, lam, lam, 0)
    assert lr_coefficient(P(2, 2, 2, n=3), lam, lam) > 0


def test_witness_empty():
    lam = P(3, 1, n=3)
    for s in range(3):
        w = s_cut_witness(lam, P(n=3), s)
        assert w.entries == ()
        assert witness_is_valid(w, lam, P(n=3), s)


def test_witness_paper_cut():
    w = s_cut_witness(LAM6, MU6, 2)
    assert w.rows() == [[1] * 5, [2] * 4, [4], [4, 3], [3], [3]]
    assert witness_is_valid(w, LAM6, MU6, 2)
    assert lr_coefficient(s_cut(LAM6, MU6, 2), LAM6, MU6) > 0


def test_witness_check_rejects_tampering():
    w = s_cut_witness(LAM6, MU6, 2)
    rows = w.rows()
    rows[3] = [3, 4]
    bad = Tableau.from_rows(w.shape, rows)
    assert not witness_is_valid(bad, LAM6, MU6, 2)
    rows = w.rows()
    rows[0][0], rows[1][0] = 2, 1
    assert not witness_is_valid(Tableau.from_rows(w.shape, rows), LAM6, MU6, 2)


def test_s_poset_example():
    lam = P(2, 1, n=3)
    poset = s_poset(lam, lam, 0)
    # membership fixed by the brute-force product expansion
    oracle = sorted(product_schur_expansion(lam, lam))
    assert list(poset.members) == oracle == [
        P(2, 2, 2, n=3), P(3, 2, 1, n=3), P(3, 3, n=3), P(4, 1, 1, n=3), P(4, 2, n=3),
    ]
    assert poset.minimum == min_of_s_poset(lam, lam, 0) == s_cut(lam, lam, 0) == P(2, 2, 2, n=3)


def test_s_poset_trivial():
    lam = P(3, 1, n=3)
    for s in range(3):
        assert s_poset(lam, P(n=3), s).members == (lam,)
        assert min_of_s_poset(lam, P(n=3), s) == lam


def test_s_poset_paper_minimum():
    assert min_of_s_poset(LAM6, MU6, 2) == P(9, 7, 3, 3, 2, 1, n=6)


def test_s_poset_prefix_and_positivity():
    lam, mu = P(3, 2, 1, n=4), P(2, 2, n=4)
    for s in range(4):
        poset = s_poset(lam, mu, s)
        assert list(poset.members) == sorted(set(poset.members))
        for k in poset.members:
            assert all(k[i] == lam[i] + mu[i] for i in range(s))
            assert lr_coefficient(k, lam, mu, Convention.REVERSE) > 0


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_cut_properties(data):
    n = data.draw(st.integers(1, 4))
    lam = data.draw(partition_st(n=n, max_part=4))
    mu = data.draw(partition_st(n=n, max_part=4))
    s = data.draw(st.integers(0, n - 1))
    kappa = s_cut(lam, mu, s)
    assert kappa == s_cut(mu, lam, s)
    assert size(kappa) == size(lam) + size(mu)
    assert witness_is_valid(s_cut_witness(lam, mu, s), lam, mu, s)
    assert witness_is_valid(s_cut_witness(mu, lam, s), mu, lam, s)
