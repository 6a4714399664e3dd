"""Closed-form Seshadri values and certified bounds on surfaces.

Every calculator takes the numerical data of a polarized surface plus flags
for the geometric hypotheses (simplicity, Picard number one, position of the
point, ...).  Those hypotheses are trusted, never checked.  Results carry
short citation tags naming the result that produced each endpoint.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Optional, Union

from .exactnum import (DomainError, InconsistencyError, Number, Ordering, SeshadriValue,
                       as_fraction, exact_rational_root, floor_root, is_square,
                       pell_fundamental, vmax, vmin)

# citation tags
UPPER = "upper-bound: (L^n/r)^(1/n)"
EIN_LAZARSFELD = "ein-lazarsfeld: very general point on a surface"
EKL = "ein-kuchle-lazarsfeld: very general point, dimension n"
STEFFENS = "steffens: Picard number one"
ABELIAN_TRIVIAL = "abelian: eps >= 1"
ABELIAN_PELL = "abelian rho=1: Pell value 2d*k0/l0"
ABELIAN_PELL_UPPER = "abelian: Pell upper bound 2d*k0/l0"
ABELIAN_SQUARE = "abelian: sqrt(2d) rational"
NAKAMAYE = "nakamaye: simple abelian surface, eps >= 4/3"
ABELIAN_ELLIPTIC = "abelian: eps >= min(eps_1, sqrt(7d)/2)"
HALF_PERIODS = "abelian: half-period points"
MULTI_TRIVIAL = "multi-point: eps(L;r points) >= eps(L)/r"
RULED_POS = "ruled surface, e > 0"
RULED_NONPOS = "ruled surface, e <= 0"
DEL_PEZZO = "del Pezzo, anticanonical"
K3_SQUARE = "K3 rho=1: L^2 square"
K3_LOWER = "K3 rho=1: eps >= floor(sqrt(L^2)) or exceptional"
GENTYPE = "canonical divisor of a minimal surface of general type"
CANONICAL_SLOPE = "canonical slope: eps >= 2/(1+sqrt(4 sigma+13))"
HARBOURNE = "multi-point very ample: eps(L,r) >= eps_{r,l}"
ENRIQUES = "Enriques: eps >= min(eps_0, eps_1, sqrt(L^2)/4)"
ENRIQUES_SPECIAL = "Enriques: p_a(E)=0, L.E=1, mult_x E=2"


@dataclass(frozen=True)
class BoundReport:
    value: SeshadriValue
    citations: tuple[str, ...] = ()


# ---------------------------------------------------------------------------
# general bounds
# ---------------------------------------------------------------------------

def upper_bound(Ln: int, n: int, r: int = 1) -> SeshadriValue:
    """``(L^n / r) ** (1/n)``, the bound every r-point Seshadri constant obeys."""
    if Ln < 1 or n < 1 or r < 1:
        raise DomainError("upper_bound needs L^n, n, r >= 1")
    return SeshadriValue.nth_root(Fraction(Ln, r), n, UPPER)


def very_general_floor(n: int) -> SeshadriValue:
    """Universal lower bound at a very general point: 1 on surfaces, 1/n in dimension n."""
    if n < 1:
        raise DomainError("dimension must be >= 1")
    if n <= 2:
        return SeshadriValue.of(1, EIN_LAZARSFELD)
    return SeshadriValue.of(Fraction(1, n), EKL)


def jets_lower_bound(s: int) -> SeshadriValue:
    """An ample bundle generating s-jets at x has eps(L, x) >= s (s = 1: spanned)."""
    if s < 1:
        raise DomainError("jet order must be >= 1")
    return SeshadriValue.of(s, "generation of s-jets")


def steffens_lower_bound(L2: int) -> SeshadriValue:
    """floor(sqrt(L^2)) at a very general point when NS(S) = Z[L]."""
    if L2 < 1:
        raise DomainError("L^2 must be positive")
    return SeshadriValue.of(floor_root(L2, 2), STEFFENS)


# ---------------------------------------------------------------------------
# abelian surfaces
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AbelianSurfaceSpec:
    d: int
    simple: bool = False
    rank_one: bool = False
    elliptic_min_degree: Optional[int] = None

    def __post_init__(self):
        if self.d < 1:
            raise DomainError("polarization type (1, d) needs d >= 1")
        if self.rank_one and not self.simple:
            raise DomainError("Picard number one implies simple")
        if self.elliptic_min_degree is not None and self.elliptic_min_degree < 1:
            raise DomainError("elliptic_min_degree must be positive")


def _pell_value(d: int) -> Fraction:
    sol = pell_fundamental(2 * d)
    return Fraction(2 * d * sol.k0, sol.ell0)


def abelian_rank1(d: int) -> SeshadriValue:
    """Exact Seshadri constant of a type (1, d) polarization with Picard number one."""
    if d < 1:
        raise DomainError("d must be >= 1")
    if is_square(2 * d):
        return SeshadriValue.of(isqrt(2 * d), ABELIAN_SQUARE)
    return SeshadriValue.of(_pell_value(d), ABELIAN_PELL)


def abelian_upper(d: int) -> SeshadriValue:
    if is_square(2 * d):
        return SeshadriValue.of(isqrt(2 * d), ABELIAN_SQUARE)
    return SeshadriValue.of(_pell_value(d), ABELIAN_PELL_UPPER)


def abelian_bounds(spec: AbelianSurfaceSpec) -> BoundReport:
    """Certified [lower, upper] for eps(L) on an abelian surface of type (1, d).

    The lower end is the largest of 1, 4/3 (simple surfaces) and
    min(eps_1, sqrt(7d)/2) when the minimal elliptic degree eps_1 is supplied.
    """
    lowers = [SeshadriValue.of(1, ABELIAN_TRIVIAL)]
    if spec.simple:
        lowers.append(SeshadriValue.of(Fraction(4, 3), NAKAMAYE))
    if spec.elliptic_min_degree is not None:
        ell = vmin(SeshadriValue.of(spec.elliptic_min_degree),
                   SeshadriValue.nth_root(Fraction(7 * spec.d, 4), 2))
        lowers.append(ell.with_provenance(ABELIAN_ELLIPTIC))
    lower = vmax(*lowers)
    upper = abelian_upper(spec.d)
    if spec.rank_one:
        exact = abelian_rank1(spec.d)
        if exact < lower:
            raise InconsistencyError(f"{lower.provenance} gives {lower} above the exact value {exact}")
        return BoundReport(exact, (exact.provenance,))
    value = SeshadriValue.between(lower, upper)
    return BoundReport(value, (lower.provenance, upper.provenance))


def abelian_halfperiod_multipoint(d: int, r: int,
                                  eps_single: Optional[SeshadriValue] = None) -> SeshadriValue:
    """Seshadri constant of a (1, d) polarization at r of the 16 half-period points.

    Exact when sqrt(2d/r) is rational.  Otherwise an interval: the lower end
    is eps(L)/r (``eps_single`` defaults to the universal bound 1), the upper
    end is the smaller of the Pell value and sqrt(2d/r).
    """
    if d < 1:
        raise DomainError("d must be >= 1")
    if not 1 <= r <= 16:
        raise DomainError("there are only 16 half-period points")
    q = Fraction(2 * d, r)
    root = exact_rational_root(q, 2)
    if root is not None:
        return SeshadriValue.of(root, HALF_PERIODS)
    if eps_single is None:
        eps_single = SeshadriValue.of(1, ABELIAN_TRIVIAL)
    lower = eps_single.scaled(Fraction(1, r)).with_provenance(MULTI_TRIVIAL)
    uppers = [upper_bound(2 * d, 2, r)]
    if not is_square(2 * d):
        uppers.append(SeshadriValue.of(_pell_value(d), HALF_PERIODS))
    return SeshadriValue.between(lower, vmin(*uppers))


# ---------------------------------------------------------------------------
# ruled surfaces
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RuledSurfaceSpec:
    """Class a*sigma + b*f on a ruled surface with invariant e.

    ``point_on_sigma`` means x lies on the negative section (e > 0) or on a
    curve numerically equivalent to it (e = 0).
    """

    e: int
    a: int
    b: int
    point_on_sigma: bool = False

    def __post_init__(self):
        if self.a < 0:
            raise DomainError("a*sigma + b*f is not nef (a < 0)")
        if self.e >= 0 and self.b < self.a * self.e:
            raise DomainError("a*sigma + b*f is not nef (b < a*e)")
        if self.e < 0 and 2 * self.b < self.a * self.e:
            raise DomainError("a*sigma + b*f is not nef (b < a*e/2)")

    @property
    def self_intersection(self) -> int:
        return self.a * (2 * self.b - self.a * self.e)


def ruled_e_positive(spec: RuledSurfaceSpec) -> SeshadriValue:
    if spec.e <= 0:
        raise DomainError("this formula needs e > 0")
    if spec.point_on_sigma:
        return SeshadriValue.of(min(spec.a, spec.b - spec.a * spec.e), RULED_POS)
    return SeshadriValue.of(spec.a, RULED_POS)


def ruled_e_nonpositive(spec: RuledSurfaceSpec) -> SeshadriValue:
    if spec.e > 0:
        raise DomainError("this formula needs e <= 0")
    a = spec.a
    if spec.e == 0 and spec.point_on_sigma:
        return SeshadriValue.of(min(a, spec.b), RULED_NONPOS)
    shifted = spec.b - Fraction(a * spec.e, 2)
    # at shifted == a/2 both branches give a
    if shifted >= Fraction(a, 2):
        return SeshadriValue.of(a, RULED_NONPOS)
    return SeshadriValue.between(SeshadriValue.of(2 * shifted, RULED_NONPOS),
                                 SeshadriValue.nth_root(2 * a * shifted, 2, UPPER))


# ---------------------------------------------------------------------------
# del Pezzo, K3, general type
# ---------------------------------------------------------------------------

class Position(str, enum.Enum):
    GENERAL = "general"
    SPECIAL = "special"
    SPECIAL12 = "special12"


_DEL_PEZZO_GENERAL = {6: Fraction(3, 2), 7: Fraction(4, 3), 8: Fraction(1)}


def delpezzo_anticanonical(r: int, position: Union[Position, str]) -> SeshadriValue:
    """eps(-K_S, x) on the blow-up of P^2 in r general points, 0 <= r <= 8.

    ``special12`` is the (at most twelve) exceptional points of S_8.  For
    r = 0 the surface is P^2 itself and eps(O(3), x) = 3 at every point.
    """
    position = Position(position)
    if not 0 <= r <= 8:
        raise DomainError("del Pezzo blow-ups need 0 <= r <= 8")
    if r == 0 and position is not Position.SPECIAL12:
        return SeshadriValue.of(3, DEL_PEZZO)
    if position is Position.SPECIAL12:
        if r != 8:
            raise DomainError("the special12 position only exists for r = 8")
        return SeshadriValue.of(Fraction(1, 2), DEL_PEZZO)
    if position is Position.SPECIAL:
        return SeshadriValue.of(1, DEL_PEZZO)
    return SeshadriValue.of(_DEL_PEZZO_GENERAL.get(r, Fraction(2)), DEL_PEZZO)


@dataclass(frozen=True)
class K3Report:
    L2: int
    value: SeshadriValue
    lower: int
    upper: SeshadriValue
    exceptions: tuple[tuple[int, Fraction], ...]
    citations: tuple[str, ...]


def k3_exceptional_pairs(L2: int) -> list[tuple[int, Fraction]]:
    """The pairs (L^2, eps) allowed to violate eps >= floor(sqrt(L^2))."""
    out = []
    alpha = floor_root(L2, 2)
    if alpha * alpha + alpha - 2 == L2:
        out.append((L2, alpha - Fraction(2, alpha + 1)))
    if 2 * alpha * alpha + alpha - 1 == 2 * L2:
        out.append((L2, alpha - Fraction(1, 2 * alpha + 1)))
    return out


def k3_rank1(L2: int) -> K3Report:
    if L2 < 2 or L2 % 2:
        raise DomainError("an ample class on a K3 surface has positive even L^2")
    lower = floor_root(L2, 2)
    upper = upper_bound(L2, 2)
    exc = k3_exceptional_pairs(L2)
    if exc:
        lo = min([Fraction(lower)] + [e for _, e in exc])
        value = SeshadriValue.between(SeshadriValue.of(lo, K3_LOWER), upper)
        return K3Report(L2, value, lower, upper, tuple(exc), (K3_LOWER, UPPER))
    if lower * lower == L2:
        return K3Report(L2, SeshadriValue.of(lower, K3_SQUARE), lower, upper, (), (K3_SQUARE,))
    value = SeshadriValue.between(SeshadriValue.of(lower, K3_LOWER), upper)
    return K3Report(L2, value, lower, upper, (), (K3_LOWER, UPPER))


@dataclass(frozen=True)
class GentypeValues:
    """Possible values of eps(K_S, x) in (0, 1).

    For K^2 = 1 the set {(m-1)/m : m >= 2} is infinite; ``members`` then lists
    its first ten elements and ``infinite`` is set.
    """

    K2: int
    members: tuple[Fraction, ...]
    infinite: bool
    description: str

    def __contains__(self, q) -> bool:
        q = as_fraction(q)
        if self.infinite:
            return q.denominator >= 2 and q.numerator + 1 == q.denominator
        return q in self.members

    def issubset(self, other: "GentypeValues") -> bool:
        if self.infinite:
            return other.infinite
        return all(q in other for q in self.members)


def gentype_small_values(K2: int) -> GentypeValues:
    if K2 < 1:
        raise DomainError("K_S big and nef needs K^2 >= 1")
    if K2 == 1:
        return GentypeValues(1, tuple(Fraction(m - 1, m) for m in range(2, 12)), True,
                             "(m-1)/m for an integer m >= 2")
    if K2 == 2:
        return GentypeValues(2, (Fraction(1, 2), Fraction(2, 3)), False, "1/2 or 2/3")
    return GentypeValues(K2, (Fraction(1, 2),), False, "1/2")


# ---------------------------------------------------------------------------
# bounds on arbitrary surfaces
# ---------------------------------------------------------------------------

def canonical_slope_lower_bound(sigma: Number, digits: int = 30) -> SeshadriValue:
    """Lower bound 2/(1 + sqrt(4*sigma + 13)).

    Exact when the radicand is a rational square.  Otherwise the returned
    rational is the bound rounded down at ``digits`` decimal places, so it
    is still a valid (marginally weaker) lower bound.
    """
    rad = 4 * as_fraction(sigma) + 13
    if rad < 0:
        raise DomainError("4*sigma + 13 must be nonnegative")
    root = exact_rational_root(rad, 2)
    if root is not None:
        return SeshadriValue.of(2 / (1 + root), CANONICAL_SLOPE)
    scale = 10 ** digits
    t = rad * scale * scale
    root_up = Fraction(floor_root(t.numerator // t.denominator, 2) + 1, scale)
    bound = 2 / (1 + root_up)
    bound = Fraction(bound.numerator * scale // bound.denominator, scale)
    return SeshadriValue.of(bound, f"{CANONICAL_SLOPE} (rounded down, {digits} digits)")


def eps_rl(r: int, l: int) -> Fraction:
    """Largest element of the three finite candidate sets defining eps_{r,l}."""
    if r < 1 or l < 1:
        raise DomainError("r and l must be positive")
    c = 1
    while c * c * l < r:
        c += 1
    best = Fraction(1, c)
    d = 1
    while d * d * l <= r:
        s = d * d * r * l
        fl = isqrt(s)
        ce = fl if fl * fl == s else fl + 1
        best = max(best, Fraction(fl, d * r), Fraction(d * l, ce))
        d += 1
    return best


def multipoint_lower_bound(L2: int, r: int) -> BoundReport:
    """General r-point Seshadri constant of a very ample L with L^2 = l."""
    if L2 < 1 or r < 1:
        raise DomainError("L^2 and r must be positive")
    lower = SeshadriValue.of(eps_rl(r, L2), HARBOURNE)
    return BoundReport(SeshadriValue.between(lower, upper_bound(L2, 2, r)), (HARBOURNE, UPPER))


def embedded_surface_values(d: int) -> list[Fraction]:
    """Admissible values a/b (3 <= a <= d, a/2 < b < a) of eps(O_S(1), x) in (1, 2)."""
    vals = {Fraction(a, b) for a in range(3, d + 1) for b in range(a // 2 + 1, a)}
    return sorted(vals)


def enriques_below_one(pa_E: int, LE: int, mult_E: int) -> bool:
    """eps(L, x) < 1 exactly in this configuration, and then eps(L, x) = 1/2."""
    return pa_E == 0 and LE == 1 and mult_E == 2


def enriques_lower_bound(eps0: SeshadriValue, eps1: SeshadriValue, L2: int,
                         special: bool = False) -> SeshadriValue:
    if special:
        return SeshadriValue.of(Fraction(1, 2), ENRIQUES_SPECIAL)
    if L2 < 1:
        raise DomainError("L^2 must be positive")
    if eps0 <= 0 or eps1 <= 0:
        raise DomainError("genus Seshadri constants must be positive")
    return vmin(eps0, eps1, SeshadriValue.nth_root(Fraction(L2, 16), 2)).with_provenance(ENRIQUES)


# ---------------------------------------------------------------------------
# S-slope
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SSlopeClassification:
    mode: str
    r: int
    threshold: SeshadriValue
    below_threshold: bool
    cases: tuple[str, ...]


def sslope_classify(sigma: SeshadriValue, r: Optional[int] = None) -> SSlopeClassification:
    """Classify a surface by its S-slope; ``r=None`` is the single-point version."""
    if not (sigma > 0 and sigma <= 1):
        raise DomainError("S-slope must lie in (0, 1]")
    if r is None:
        threshold = SeshadriValue.nth_root(Fraction(7, 8), 2)
        special = [("cubic", SeshadriValue.nth_root(Fraction(3, 4), 2)),
                   ("rational-genus3", SeshadriValue.nth_root(Fraction(7, 9), 2))]
        mode, rr = "single", 1
    else:
        if r < 2:
            raise DomainError("multi-point S-slope needs r >= 2")
        threshold = SeshadriValue.nth_root(Fraction(2 * r - 1, 2 * r), 2)
        special = [("minimal-degree", SeshadriValue.nth_root(Fraction(r - 1, r), 2))]
        mode, rr = "multi", r
    if sigma < threshold:
        cases = ("fibered",) + tuple(name for name, v in special if sigma == v)
        return SSlopeClassification(mode, rr, threshold, True, cases)
    return SSlopeClassification(mode, rr, threshold, False, ("no-conclusion",))
