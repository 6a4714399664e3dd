from fractions import Fraction
from math import isqrt

import pytest

from seshadri.exactnum import DomainError, SeshadriValue
from seshadri.surfcalc import (AbelianSurfaceSpec, Position, RuledSurfaceSpec, abelian_bounds,
                               abelian_halfperiod_multipoint, abelian_rank1,
                               canonical_slope_lower_bound, delpezzo_anticanonical,
                               embedded_surface_values, enriques_below_one, enriques_lower_bound,
                               eps_rl, gentype_small_values, k3_rank1, multipoint_lower_bound,
                               ruled_e_nonpositive, ruled_e_positive, sslope_classify,
                               steffens_lower_bound, upper_bound, very_general_floor)

from conftest import brute_pell

root = SeshadriValue.nth_root


def test_upper_bound():
    assert upper_bound(4, 2, 1) == 2
    v = upper_bound(1, 2, 10)
    assert v == root(Fraction(1, 10), 2) and v.decimal() == "0.3162277660"
    assert upper_bound(27, 3, 1) == 3


def test_floors():
    assert very_general_floor(2) == 1
    assert very_general_floor(4) == Fraction(1, 4)
    assert steffens_lower_bound(10) == 3


@pytest.mark.parametrize("d,expected", [(1, Fraction(4, 3)), (2, 2), (5, Fraction(60, 19)), (8, 4)])
def test_abelian_rank1_examples(d, expected):
    assert abelian_rank1(d) == expected


def test_abelian_rank1_against_brute_pell_and_upper_bound():
    for d in range(1, 201):
        v = abelian_rank1(d)
        s = 2 * d
        if isqrt(s) ** 2 == s:
            assert v == isqrt(s)
        else:
            ell, k = brute_pell(s) if d <= 60 else (None, None)
            if ell is not None:
                assert v == Fraction(2 * d * k, ell)
            assert v < upper_bound(s, 2)


def test_abelian_bounds():
    rep = abelian_bounds(AbelianSurfaceSpec(1, simple=True))
    assert rep.value.is_exact and rep.value == Fraction(4, 3)
    rep = abelian_bounds(AbelianSurfaceSpec(2, simple=True))
    assert rep.value.lower == Fraction(4, 3) and rep.value.upper == 2
    # the sqrt(7d)/2 term enters only through the elliptic degree
    rep = abelian_bounds(AbelianSurfaceSpec(5, simple=True, elliptic_min_degree=4))
    assert rep.value.lower == root(Fraction(35, 4), 2) and rep.value.upper == Fraction(60, 19)
    rep = abelian_bounds(AbelianSurfaceSpec(5, simple=True))
    assert rep.value.lower == Fraction(4, 3)
    rep = abelian_bounds(AbelianSurfaceSpec(5, simple=True, rank_one=True))
    assert rep.value == Fraction(60, 19)
    assert abelian_bounds(AbelianSurfaceSpec(3)).value.lower == 1
    with pytest.raises(DomainError):
        AbelianSurfaceSpec(3, rank_one=True)


def test_halfperiod_points():
    assert abelian_halfperiod_multipoint(2, 1) == 2
    assert abelian_halfperiod_multipoint(8, 4) == 2
    assert abelian_halfperiod_multipoint(1, 2) == 1
    v = abelian_halfperiod_multipoint(5, 3)
    assert v.is_interval
    assert v.lower == Fraction(1, 3) and v.upper == root(Fraction(10, 3), 2)
    with pytest.raises(DomainError):
        abelian_halfperiod_multipoint(1, 17)


def test_ruled_examples():
    assert ruled_e_positive(RuledSurfaceSpec(1, 1, 2, True)) == 1
    assert ruled_e_positive(RuledSurfaceSpec(2, 3, 7, True)) == 1
    assert ruled_e_positive(RuledSurfaceSpec(2, 3, 7, False)) == 3
    assert ruled_e_nonpositive(RuledSurfaceSpec(0, 2, 1, True)) == 1
    assert ruled_e_nonpositive(RuledSurfaceSpec(0, 1, 3, False)) == 1
    v = ruled_e_nonpositive(RuledSurfaceSpec(-2, 4, 0, False))
    assert v.is_exact and v == 4
    v = ruled_e_nonpositive(RuledSurfaceSpec(0, 4, 1, False))
    assert v.lower == 2 and v.upper == root(8, 2)


def test_ruled_nefness_and_branch_errors():
    with pytest.raises(DomainError):
        RuledSurfaceSpec(2, 3, 5)
    with pytest.raises(DomainError):
        RuledSurfaceSpec(-2, 2, -3)
    with pytest.raises(DomainError):
        ruled_e_positive(RuledSurfaceSpec(0, 1, 1))
    with pytest.raises(DomainError):
        ruled_e_nonpositive(RuledSurfaceSpec(1, 1, 1))


def test_ruled_values_below_upper_bound_and_maximality():
    for e in range(1, 5):
        for a in range(0, 21):
            for b in range(a * e, 21):
                for on in (False, True):
                    spec = RuledSurfaceSpec(e, a, b, on)
                    v = ruled_e_positive(spec)
                    A2 = spec.self_intersection
                    assert v.exact ** 2 <= A2
                    maximal = v.exact ** 2 == A2
                    assert maximal == (a == 0 or (e == 1 and b == a and not on))
    for e in range(-4, 1):
        for a in range(0, 15):
            for b in range(-10, 15):
                if 2 * b < a * e:
                    continue
                spec = RuledSurfaceSpec(e, a, b)
                v = ruled_e_nonpositive(spec)
                if spec.self_intersection > 0:
                    top = v.upper if v.is_interval else v
                    assert top <= upper_bound(spec.self_intersection, 2)


def test_delpezzo():
    grid = {1: 2, 2: 2, 3: 2, 4: 2, 5: 2, 6: Fraction(3, 2), 7: Fraction(4, 3), 8: 1}
    for r, val in grid.items():
        assert delpezzo_anticanonical(r, Position.GENERAL) == val
        assert delpezzo_anticanonical(r, "special") == 1
    assert delpezzo_anticanonical(8, "special12") == Fraction(1, 2)
    assert delpezzo_anticanonical(0, "general") == 3
    with pytest.raises(DomainError):
        delpezzo_anticanonical(7, "special12")
    with pytest.raises(DomainError):
        delpezzo_anticanonical(9, "general")
    for r in range(1, 9):
        assert delpezzo_anticanonical(r, "general") <= upper_bound(9 - r, 2)


def test_k3():
    rep = k3_rank1(16)
    assert rep.value.is_exact and rep.value == 4
    rep = k3_rank1(4)
    assert (4, Fraction(4, 3)) in rep.exceptions and rep.lower == 2
    rep = k3_rank1(8)
    assert rep.exceptions == () and rep.lower == 2
    assert rep.value.lower == 2 and rep.value.upper == root(8, 2)
    # alpha = 3 gives the second exceptional family: 2*9 + 3 - 1 = 20 = 2 L^2
    assert (10, Fraction(3) - Fraction(1, 7)) in k3_rank1(10).exceptions
    with pytest.raises(DomainError):
        k3_rank1(5)


def test_gentype():
    assert set(gentype_small_values(3).members) == {Fraction(1, 2)}
    assert set(gentype_small_values(2).members) == {Fraction(1, 2), Fraction(2, 3)}
    one = gentype_small_values(1)
    assert one.infinite and one.members[:3] == (Fraction(1, 2), Fraction(2, 3), Fraction(3, 4))
    assert Fraction(99, 100) in one and Fraction(2, 5) not in one
    for K2 in range(1, 6):
        for K2p in range(1, K2 + 1):
            assert gentype_small_values(K2).issubset(gentype_small_values(K2p))


def test_canonical_slope():
    assert canonical_slope_lower_bound(-3) == 1
    assert canonical_slope_lower_bound(3) == Fraction(1, 3)
    v = canonical_slope_lower_bound(0)
    assert v.decimal(3) == "0.434"
    # certified: the rounded value does not exceed 2/(1+sqrt(13))
    q = v.exact
    assert (2 / q - 1) ** 2 >= 13
    with pytest.raises(DomainError):
        canonical_slope_lower_bound(-4)


@pytest.mark.parametrize("r,l,expected", [(4, 1, Fraction(1, 2)), (2, 1, Fraction(1, 2)),
                                          (10, 1, Fraction(3, 10))])
def test_eps_rl_examples(r, l, expected):
    assert eps_rl(r, l) == expected


def test_eps_rl_below_upper_bound():
    for r in range(1, 51):
        for l in range(1, 51):
            v = eps_rl(r, l)
            ub = root(Fraction(l, r), 2)
            assert v <= ub
            equal = isqrt(r * l) ** 2 == r * l and l <= r
            assert (v == ub) == equal


def test_multipoint_lower_bound_and_embedded_grid():
    rep = multipoint_lower_bound(1, 10)
    assert rep.value.lower == Fraction(3, 10)
    assert multipoint_lower_bound(1, 4).value == Fraction(1, 2)
    vals = embedded_surface_values(5)
    assert vals == sorted({Fraction(3, 2), Fraction(4, 3), Fraction(5, 3), Fraction(5, 4)})
    assert all(1 < v < 2 for v in embedded_surface_values(12))


def test_enriques():
    one = SeshadriValue.of(1)
    assert enriques_lower_bound(one, one, 16) == 1
    assert enriques_lower_bound(SeshadriValue.of(2), SeshadriValue.of(3), 4) == Fraction(1, 2)
    assert enriques_lower_bound(None, None, 1, special=True) == Fraction(1, 2)
    assert enriques_below_one(0, 1, 2) and not enriques_below_one(1, 1, 2)


def test_sslope():
    c = sslope_classify(root(Fraction(3, 4), 2))
    assert c.below_threshold and "cubic" in c.cases
    c = sslope_classify(root(Fraction(7, 9), 2))
    assert "rational-genus3" in c.cases
    c = sslope_classify(root(Fraction(1, 2), 2), r=2)
    assert c.below_threshold and "minimal-degree" in c.cases
    assert sslope_classify(SeshadriValue.of(1)).cases == ("no-conclusion",)
    assert sslope_classify(SeshadriValue.of(Fraction(1, 2))).cases == ("fibered",)
    with pytest.raises(DomainError):
        sslope_classify(SeshadriValue.of(2))
