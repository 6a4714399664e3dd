import random
from itertools import product

import pytest

from seshadri.exactnum import DomainError, SeshadriValue
from seshadri.linsys import LinearSystem2D, interpolation_rank
from seshadri.symbpow import (CONTAINED, INCONCLUSIVE, NOT_CONTAINED, MonomialIdeal, StarConfig,
                              alpha, big_height, check_symbolic_in_power, containment_criteria,
                              generic_points_check, huneke_star_check, minimal_primes_squarefree,
                              mono_contains, mono_intersect, mono_power,
                              symbolic_power_squarefree, star_alpha, star_invariants,
                              star_points_plane)
from fractions import Fraction

X, Y, Z = (1, 0, 0), (0, 1, 0), (0, 0, 1)
THREE_POINTS = MonomialIdeal(3, ((1, 1, 0), (1, 0, 1), (0, 1, 1)))


def ideal(n, *gens):
    return MonomialIdeal(n, tuple(gens))


def in_symbolic(I, m, mono):
    """Oracle: x^a is in I^(m) iff its degree along every minimal prime is at least m."""
    return all(sum(mono[i] for i in P) >= m for P in minimal_primes_squarefree(I))


def test_intersections():
    assert mono_intersect(ideal(2, (1, 0)), ideal(2, (0, 1))).gens == ((1, 1),)
    xy = ideal(2, (1, 0), (0, 1))
    assert mono_intersect(xy, xy).gens == xy.gens
    got = mono_intersect(ideal(2, (2, 0), (0, 1)), ideal(2, (1, 0), (0, 2)))
    assert set(got.gens) == {(2, 0), (1, 1), (0, 2)}


def test_powers():
    xy = ideal(2, (1, 0), (0, 1))
    assert set(mono_power(xy, 2).gens) == {(2, 0), (1, 1), (0, 2)}
    assert mono_power(THREE_POINTS, 1) == THREE_POINTS
    assert len(mono_power(THREE_POINTS, 2).gens) == 6
    assert mono_power(THREE_POINTS, 0).is_unit


def test_minimal_primes():
    assert minimal_primes_squarefree(THREE_POINTS) == [frozenset({0, 1}), frozenset({0, 2}),
                                                       frozenset({1, 2})]
    assert minimal_primes_squarefree(ideal(1, (1,))) == [frozenset({0})]
    assert minimal_primes_squarefree(ideal(2, (1, 1))) == [frozenset({0}), frozenset({1})]
    with pytest.raises(DomainError):
        minimal_primes_squarefree(ideal(2, (2, 0)))


def test_symbolic_examples():
    s2 = symbolic_power_squarefree(THREE_POINTS, 2)
    assert s2.contains_monomial((1, 1, 1))
    assert alpha(THREE_POINTS) == 2 and alpha(s2) == 3
    assert symbolic_power_squarefree(THREE_POINTS, 1) == THREE_POINTS
    xy = ideal(2, (1, 0), (0, 1))
    assert symbolic_power_squarefree(xy, 3) == mono_power(xy, 3)


def test_containment_examples():
    assert mono_contains(ideal(1, (1,)), ideal(1, (2,)))
    assert not mono_contains(ideal(1, (2,)), ideal(1, (1,)))
    assert mono_contains(symbolic_power_squarefree(THREE_POINTS, 2), mono_power(THREE_POINTS, 2))
    assert check_symbolic_in_power(THREE_POINTS, 3, 2)
    assert not check_symbolic_in_power(THREE_POINTS, 2, 2)
    assert check_symbolic_in_power(THREE_POINTS, 2, 1)
    with pytest.raises(DomainError):
        alpha(MonomialIdeal(2, ()))


def random_squarefree(rng):
    n = rng.randint(1, 4)
    k = rng.randint(1, 6)
    gens = []
    for _ in range(k):
        g = tuple(rng.randint(0, 1) for _ in range(n))
        if any(g):
            gens.append(g)
    if not gens:
        gens = [tuple(1 if i == 0 else 0 for i in range(n))]
    return MonomialIdeal(n, tuple(gens))


def test_symbolic_power_matches_membership_oracle():
    rng = random.Random(4)
    for _ in range(40):
        I = random_squarefree(rng)
        m = rng.randint(1, 4)
        S = symbolic_power_squarefree(I, m)
        for mono in product(range(m + 2), repeat=I.num_vars):
            assert S.contains_monomial(mono) == in_symbolic(I, m, mono)


def test_random_chain_and_lemmas():
    rng = random.Random(8)
    for _ in range(60):
        I = random_squarefree(rng)
        e = big_height(I)
        for m in range(1, 4):
            Sm = symbolic_power_squarefree(I, m)
            assert mono_contains(Sm, mono_power(I, m))
            assert mono_contains(I, Sm)
            assert mono_contains(symbolic_power_squarefree(I, max(1, m - 1)), Sm)
            assert alpha(Sm) <= m * alpha(I)
            for r in range(1, 4):
                assert mono_contains(Sm, mono_power(I, r)) == (r >= m)
        for m1 in range(1, 3):
            for m2 in range(1, 3):
                assert alpha(symbolic_power_squarefree(I, m1 + m2)) <= \
                    alpha(symbolic_power_squarefree(I, m1)) + alpha(symbolic_power_squarefree(I, m2))
        for r in range(1, 4):
            assert check_symbolic_in_power(I, e * r, r)
            assert check_symbolic_in_power(I, e * r - e + 1, r)


def test_star_alpha_examples():
    assert star_alpha(StarConfig(2, 3, 2), 2) == 3
    assert star_alpha(StarConfig(3, 5, 3), 4) == 8
    assert star_alpha(StarConfig(2, 4, 1), 5) == 20
    assert star_alpha(StarConfig(3, 5, 2), 3) is None
    assert star_alpha(StarConfig(2, 3, 2), 1) == 2
    with pytest.raises(DomainError):
        StarConfig(2, 2, 2)
    with pytest.raises(DomainError):
        StarConfig(2, 4, 3)


def least_degree_oracle(s, m):
    pts = star_points_plane(s)
    d = 0
    while True:
        res = interpolation_rank(LinearSystem2D(d, [m] * len(pts), pts))
        if res.kernel_dim > 0:
            return d
        d += 1


def test_star_points_distinct_and_on_lines():
    for s in range(3, 7):
        pts = star_points_plane(s)
        assert len(set(pts)) == len(pts)
        for x, y in pts:
            on = [i for i in range(1, s + 1) if y == i * x + i * i]
            assert len(on) == 2


@pytest.mark.parametrize("s", [3, 4, 5])
@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_star_alpha_matches_interpolation(s, m):
    assert star_alpha(StarConfig(2, s, 2), m) == least_degree_oracle(s, m)


def test_star_invariants():
    inv = star_invariants(StarConfig(2, 3, 2))
    assert inv.gamma == Fraction(3, 2) and inv.reg == 2 and inv.rho_exact == Fraction(4, 3)
    assert inv.seshadri == Fraction(1, 2)
    inv = star_invariants(StarConfig(2, 5, 2))
    assert inv.seshadri == Fraction(1, 4) and inv.rho_exact == Fraction(8, 5)
    inv = star_invariants(StarConfig(3, 4, 3))
    assert inv.seshadri == SeshadriValue.nth_root(Fraction(1, 3), 2)
    assert inv.rho_exact == Fraction(3, 2)
    inv = star_invariants(StarConfig(3, 6, 2))
    assert inv.reg is None and inv.rho_lower == Fraction(2 * 5, 6)
    for N in range(1, 5):
        for s in range(N + 1, 9):
            for e in range(1, N + 1):
                assert star_invariants(StarConfig(N, s, e)).gamma >= 1


def test_containment_criteria():
    for N in (2, 3):
        for s in range(N + 1, 8):
            cfg = StarConfig(N, s, N)
            for r in range(1, 5):
                m = N * r - (N - 1)
                v = containment_criteria(star_alpha(cfg, m), star_alpha(cfg, 1), r,
                                         star_invariants(cfg).reg, True)
                assert v.verdict == CONTAINED
    cfg = StarConfig(2, 5, 2)
    v = containment_criteria(star_alpha(cfg, 2), star_alpha(cfg, 1), 2)
    assert v.verdict == NOT_CONTAINED
    assert containment_criteria(5, 2, 2, reg=3).verdict == INCONCLUSIVE


def test_huneke():
    assert huneke_star_check(3) and huneke_star_check(10)
    assert check_symbolic_in_power(THREE_POINTS, 3, 2)


def test_generic_points():
    c = generic_points_check(2, 100, 2)
    assert c.holds and c.reg_bound == 14
    assert c.ratio_upper == SeshadriValue.nth_root(Fraction(196, 99), 2)
    c = generic_points_check(3, 1000, 2)
    assert c.holds and c.reg_bound == 18
    assert not generic_points_check(2, 5, 2).holds


def test_json_round_trip():
    assert MonomialIdeal.from_json(THREE_POINTS.to_json()) == THREE_POINTS
