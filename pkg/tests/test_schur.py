from itertools import permutations, product

import pytest
import sympy
from hypothesis import given, settings

from conftest import partition_st
from lrtensor import (
    MonomialPoly,
    Partition,
    SkewShape,
    Tableau,
    content,
    is_semistandard,
    lambda_minus,
    lr_coefficient,
    make_partition,
    partitions,
    product_schur_expansion,
    schur_polynomial,
    size,
)
from lrtensor.errors import DecompositionFailure
from lrtensor.schur import SchurExpansion, decompose, schur_polynomial_raw


def P(*parts, n):
    return make_partition(parts, n)


def brute_schur(lam):
    """Sum x^T over every semistandard filling, found by trying all fillings."""
    sh = SkewShape(lam, Partition((0,) * lam.n))
    terms = {}
    for entries in product(range(1, lam.n + 1), repeat=sh.size):
        t = Tableau(sh, entries)
        if is_semistandard(t):
            terms[content(t)] = terms.get(content(t), 0) + 1
    return MonomialPoly(lam.n, terms)


def bialternant(lam):
    """det(x_i^(lam_j + n - j)) / det(x_i^(n - j)) expanded with sympy."""
    n = lam.n
    xs = sympy.symbols(f"x1:{n + 1}")
    num = sympy.Matrix(n, n, lambda i, j: xs[i] ** (lam[j] + n - 1 - j)).det()
    den = sympy.Matrix(n, n, lambda i, j: xs[i] ** (n - 1 - j)).det()
    q = sympy.Poly(sympy.cancel(num / den), *xs)
    return MonomialPoly(n, {tuple(m): int(c) for m, c in q.terms()})


def test_small_examples():
    assert schur_polynomial(P(1, n=2)).terms == {(1, 0): 1, (0, 1): 1}
    assert schur_polynomial(P(1, 1, n=2)).terms == {(1, 1): 1}
    assert schur_polynomial(P(2, 1, n=2)).terms == {(2, 1): 1, (1, 2): 1}
    assert schur_polynomial(P(n=3)).terms == {(0, 0, 0): 1}


def test_too_many_parts_is_zero():
    assert not schur_polynomial_raw([1, 1, 1], 2)
    assert schur_polynomial_raw([2, 1], 3) == schur_polynomial(P(2, 1, n=3))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_matches_brute_force_fillings(n):
    for m in range(7):
        for lam in partitions(m, n):
            assert schur_polynomial(lam) == brute_schur(lam), lam


@pytest.mark.parametrize("parts", [(3, 1, 0), (2, 2, 1), (4, 2, 1), (3, 3, 0), (2, 1, 0, 0), (3, 1, 1, 0)])
def test_matches_bialternant(parts):
    lam = Partition(parts)
    assert schur_polynomial(lam) == bialternant(lam)


@settings(max_examples=40, deadline=None)
@given(partition_st(max_part=4))
def test_degree_symmetry_and_factorization(lam):
    s = schur_polynomial(lam)
    assert s.degrees() == {size(lam)}
    assert s.is_symmetric()
    lm = lambda_minus(lam)
    assert s == schur_polynomial(lm).times_full_monomial(lam[-1])
    # x_1 ... x_n does not divide s_{lam^-}
    assert any(0 in e for e in schur_polynomial(lm).terms)


def test_product_examples():
    mu = P(2, 1, n=3)
    assert product_schur_expansion(mu, mu)[P(3, 2, 1, n=3)] == 2
    lam = P(4, 2, 1, n=3)
    assert product_schur_expansion(lam, P(n=3)) == {lam: 1}
    assert product_schur_expansion(P(1, 1, n=2), P(1, 1, n=2)) == {P(2, 2, n=2): 1}
    # hand check: (x1 x2)^2 is s_22 at n = 2
    assert schur_polynomial(P(1, 1, n=2)) * schur_polynomial(P(1, 1, n=2)) == schur_polynomial(
        P(2, 2, n=2)
    )


def test_product_degree_and_lr_agreement():
    for n in (2, 3):
        for a in range(4):
            for b in range(4):
                for mu in partitions(a, n):
                    for nu in partitions(b, n):
                        exp = product_schur_expansion(mu, nu)
                        assert all(size(k) == a + b for k in exp)
                        assert dict(exp) == {
                            k: c for k in partitions(a + b, n) if (c := lr_coefficient(k, mu, nu))
                        }


def test_decompose_rejects_non_symmetric():
    with pytest.raises(DecompositionFailure):
        decompose(MonomialPoly(2, {(0, 1): 1}))
    with pytest.raises(DecompositionFailure):
        # x1^2 alone: subtracting s_2 = x1^2 + x1 x2 + x2^2 goes negative
        decompose(MonomialPoly(2, {(2, 0): 1}))


def test_expansion_serialization_order():
    exp = product_schur_expansion(P(2, 1, n=3), P(2, 1, n=3))
    assert exp.to_text().splitlines() == [
        "4,2,0: 1", "4,1,1: 1", "3,3,0: 1", "3,2,1: 2", "2,2,2: 1",
    ]
    assert exp.to_json()[3] == {"partition": [3, 2, 1], "coeff": 2}
    assert SchurExpansion({}).to_text() == ""


def test_monomial_poly_rejects_bad_terms():
    with pytest.raises(ValueError):
        MonomialPoly(2, {(1,): 1})
    with pytest.raises(ValueError):
        MonomialPoly(2, {(1, 0): -1})
    assert MonomialPoly(2, {(1, 0): 0}).terms == {}
