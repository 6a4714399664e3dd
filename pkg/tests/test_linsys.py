import random
from fractions import Fraction
from math import comb

import pytest
import sympy

from seshadri.exactnum import DomainError
from seshadri.linsys import (CERTIFIED_EMPTY, LIKELY_NONEMPTY, LinearSystem2D, conditions_matrix,
                             evaluate, interpolation_rank, monomials, speciality, virtual_dim)


def conic_through(points):
    """Oracle: the conic through five points via a sympy nullspace, coefficients over 1,y,x,..."""
    x, y = sympy.symbols("x y")
    mons = [x ** p * y ** q for p, q in monomials(2)]
    M = sympy.Matrix([[m.subs({x: a, y: b}) for m in mons] for a, b in points])
    ns = M.nullspace()
    assert len(ns) == 1
    conic = sum(c * m for c, m in zip(ns[0], mons))
    return sympy.expand(conic ** 2), x, y


def as_poly(vec, d):
    x, y = sympy.symbols("x y")
    return sympy.expand(sum(sympy.Rational(c) * x ** p * y ** q for c, (p, q) in zip(vec, monomials(d))))


def test_virtual_dim():
    assert virtual_dim(LinearSystem2D(1, [1, 1])) == 0
    assert virtual_dim(LinearSystem2D(2, [1] * 6)) == -1
    assert virtual_dim(LinearSystem2D(4, [2] * 5)) == -1


def test_six_general_points_no_conic():
    res = interpolation_rank(LinearSystem2D(2, [1] * 6), trials=5, seed=1)
    assert res.verdict == CERTIFIED_EMPTY and res.rank == 6 and res.kernel_dim == 0


def test_double_conic_through_five_points():
    sys = LinearSystem2D(4, [2] * 5)
    res = interpolation_rank(sys, trials=20, seed=3)
    assert res.verdict == LIKELY_NONEMPTY and res.kernel_dim == 1
    assert res.kernel_dims == [1] * 20
    square, x, y = conic_through(res.points)
    ratio = sympy.simplify(as_poly(res.kernel_vector, 4) / square)
    assert ratio.is_number and ratio != 0


def test_cubic_through_nine_points():
    res = interpolation_rank(LinearSystem2D(3, [1] * 9), trials=3, seed=0)
    assert res.kernel_dim == 1
    assert speciality(LinearSystem2D(3, [1] * 9), 3, 0) == 0
    assert speciality(LinearSystem2D(4, [2] * 5), 3, 0) == 1
    assert speciality(LinearSystem2D(1, [1, 1]), 3, 0) == 0


def test_kernel_vector_annihilates_and_vanishes():
    sys = LinearSystem2D(5, [3, 2, 2, 1])
    res = interpolation_rank(sys, trials=2, seed=9)
    rows = conditions_matrix(sys, res.points)
    for row in rows:
        assert sum(Fraction(a) * b for a, b in zip(row, res.kernel_vector)) == 0
    for pt in res.points:
        assert evaluate(res.kernel_vector, 5, pt) == 0


def test_explicit_points():
    # three collinear points: the line y = x passes through them
    sys = LinearSystem2D(1, [1, 1, 1], [(0, 0), (1, 1), (2, 2)])
    res = interpolation_rank(sys)
    assert res.kernel_dim == 1 and res.trials_run == 1
    with pytest.raises(DomainError):
        LinearSystem2D(1, [1, 1], [(0, 0), (0, 0)])
    with pytest.raises(DomainError):
        LinearSystem2D(1, [1, 1], [(0, 0)])


def test_certified_empty_reproduces_at_recorded_points():
    sys = LinearSystem2D(3, [2, 1, 1, 1, 1, 1, 1, 1])
    res = interpolation_rank(sys, trials=4, seed=11)
    assert res.certified_empty
    again = interpolation_rank(sys.at(res.points))
    assert again.certified_empty and again.rank == res.rank


def test_determinism_and_parallel_agreement():
    sys = LinearSystem2D(4, [2] * 5)
    a = interpolation_rank(sys, trials=4, seed=42)
    b = interpolation_rank(sys, trials=4, seed=42)
    c = interpolation_rank(sys, trials=4, seed=42, workers=2)
    assert a.points == b.points == c.points
    assert a.kernel_vector == b.kernel_vector == c.kernel_vector
    assert a.kernel_dims == c.kernel_dims


def test_rank_monotone_in_multiplicity():
    rng = random.Random(2)
    for _ in range(15):
        d = rng.randint(2, 6)
        mults = [rng.randint(1, 3) for _ in range(rng.randint(1, 4))]
        pts = [(Fraction(rng.randint(-50, 50)), Fraction(rng.randint(-50, 50))) for _ in mults]
        if len(set(pts)) < len(pts):
            continue
        base = interpolation_rank(LinearSystem2D(d, mults, pts))
        i = rng.randrange(len(mults))
        bigger = list(mults)
        bigger[i] += 1
        more = interpolation_rank(LinearSystem2D(d, bigger, pts))
        assert more.kernel_dim <= base.kernel_dim


def test_simple_points_are_nonspecial():
    rng = random.Random(7)
    agree = 0
    for i in range(60):
        d = rng.randint(1, 8)
        r = rng.randint(1, comb(d + 2, 2))
        sys = LinearSystem2D(d, [1] * r)
        res = interpolation_rank(sys, trials=1, seed=i)
        agree += res.kernel_dim == max(0, virtual_dim(sys) + 1)
    assert agree >= 59


def test_str():
    assert str(LinearSystem2D(3, [2, 1, 1])) == "L(3; 2, 1^2)"
    assert str(LinearSystem2D.uniform(6, 2, 10, extra=1)) == "L(6; 3, 2^9)"
