import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from seshadri.exactnum import DomainError
from seshadri.intlinalg import is_negative_definite, solve
from seshadri.zarislope import (IntersectionData, ZariskiError, arithmetic_genus, destabilizes,
                                simplest_between, slope_mu, slope_mu_c, zariski_decompose)


def check_axioms(data, D, dec):
    m = len(data)
    assert all(p + n == d for p, n, d in zip(dec.P, dec.N, D))
    assert all(n >= 0 for n in dec.N)
    for j in range(m):
        assert data.dot(dec.P, j) >= 0
    supp = [i for i in range(m) if dec.N[i] != 0]
    if supp:
        assert is_negative_definite(data.sub_gram(supp))
    for j in supp:
        assert data.dot(dec.P, j) == 0


def random_instance(rng, m):
    gram = [[0] * m for _ in range(m)]
    for i in range(m):
        gram[i][i] = rng.randint(-4, 2)
        for j in range(i):
            gram[i][j] = gram[j][i] = rng.randint(0, 2)
    labels = [f"C{i}" for i in range(m)]
    D = [Fraction(rng.randint(0, 4), rng.choice([1, 1, 2, 3])) for _ in range(m)]
    return IntersectionData(labels, gram), D


def brute_force(data, D):
    """Try every support: solve P.C = 0 on it and keep the ones meeting all axioms."""
    m = len(data)
    found = []
    for size in range(0, m + 1):
        for S in combinations(range(m), size):
            if S and not is_negative_definite(data.sub_gram(S)):
                continue
            x = solve(data.sub_gram(S), [data.dot(D, j) for j in S]) if S else []
            N = [Fraction(0)] * m
            for i, v in zip(S, x):
                N[i] = v
            if any(v <= 0 for v in x):
                continue
            P = [d - n for d, n in zip(D, N)]
            if all(data.dot(P, j) >= 0 for j in range(m)):
                found.append((tuple(P), tuple(N)))
    return found


def test_examples():
    data = IntersectionData(["E"], [[-1]])
    dec = zariski_decompose(data, [1])
    assert dec.P == (0,) and dec.N == (1,)
    data = IntersectionData(["C", "E"], [[1, 0], [0, -1]])
    dec = zariski_decompose(data, [1, 1])
    assert dec.P == (1, 0) and dec.N == (0, 1)
    data = IntersectionData(["C", "F"], [[1, 1], [1, 0]])
    dec = zariski_decompose(data, [2, 3])
    assert dec.N == (0, 0) and dec.P == (2, 3)


def test_two_step_support_growth():
    # D meets only E1 negatively at first; after subtracting, E2 becomes negative
    data = IntersectionData(["H", "E1", "E2"], [[1, 1, 0], [1, -2, 1], [0, 1, -2]])
    dec = zariski_decompose(data, [0, 3, 0])
    check_axioms(data, [0, 3, 0], dec)


def test_errors():
    with pytest.raises(DomainError):
        IntersectionData(["A", "B"], [[1, 2], [0, 1]])
    with pytest.raises(DomainError):
        zariski_decompose(IntersectionData(["E"], [[-1]]), [-1])
    # A is met negatively but has positive square: no negative part can be carved out
    data = IntersectionData(["A", "B"], [[1, -1], [-1, 1]])
    with pytest.raises(ZariskiError):
        zariski_decompose(data, [0, 1])


def test_random_axioms_and_uniqueness():
    rng = random.Random(5)
    ok = 0
    while ok < 200:
        data, D = random_instance(rng, rng.randint(1, 5))
        try:
            dec = zariski_decompose(data, D)
        except ZariskiError:
            continue
        check_axioms(data, D, dec)
        assert brute_force(data, D) == [(dec.P, dec.N)]
        ok += 1


def test_slopes():
    assert slope_mu(2, -3, 1) == 3
    assert slope_mu(2, 0, 5) == 0
    assert slope_mu(3, -4, 2) == 3
    with pytest.raises(DomainError):
        slope_mu(2, 1, 0)
    assert slope_mu_c(1, 1, -1, 1) == Fraction(3, 4)
    assert slope_mu_c(0, 4, -2, Fraction(1, 2)) == -3
    assert slope_mu_c(1, 1, 1, 1) == 0
    with pytest.raises(DomainError):
        slope_mu_c(1, 0, 3, 1)  # 3 LZ - c Z^2 = 0


def test_genus():
    assert arithmetic_genus(4, -2) == 2
    assert arithmetic_genus(-3, 1) == 0
    assert arithmetic_genus(0, 0) == 1


def test_destabilizes_examples():
    v = destabilizes(0, 4, -2, 3, 1)
    assert v.destabilizes and v.witness == Fraction(1, 2) and v.mu_c == -3
    # genus >= 2 curve of negative square: mu_c -> -infinity as c -> 0
    for KZ, Z2 in [(4, -2), (3, -1), (10, -4)]:
        v = destabilizes(0, KZ, Z2, Fraction(-10 ** 6), Fraction(1, 100))
        assert v.destabilizes
    # bounded mu_c on the range against a very negative mu
    assert not destabilizes(1, 1, -1, -10 ** 6, 1).destabilizes
    # rational curve of negative square: mu_c -> +infinity, never below a moderate mu
    assert not destabilizes(0, -1, -1, 3, 1).destabilizes
    with pytest.raises(DomainError):
        destabilizes(0, 1, 0, 1, 1)


small = st.fractions(-5, 5, max_denominator=6)


@settings(max_examples=300, deadline=None)
@given(small, small, small, st.fractions(-10, 10, max_denominator=6),
       st.fractions(Fraction(1, 6), 5, max_denominator=6))
def test_destabilizes_witness_and_sampling(LZ, KZ, Z2, mu, c_max):
    if LZ == 0 and Z2 == 0:
        return
    v = destabilizes(LZ, KZ, Z2, mu, c_max)
    if v.destabilizes:
        assert 0 < v.witness <= c_max
        assert slope_mu_c(LZ, KZ, Z2, v.witness) == v.mu_c < mu
    else:
        for i in range(1, 41):
            c = c_max * Fraction(i, 40)
            try:
                assert slope_mu_c(LZ, KZ, Z2, c) >= mu
            except DomainError:
                pass


def test_simplest_between():
    assert simplest_between(Fraction(0), Fraction(1)) == Fraction(1, 2)
    assert simplest_between(Fraction(1, 3), Fraction(1, 2)) == Fraction(2, 5)
    assert simplest_between(Fraction(1), Fraction(3)) == 2
