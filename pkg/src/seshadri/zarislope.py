"""Zariski decomposition from intersection numbers, and slope (in)stability.

Everything here is numerical: the caller supplies the intersection matrix of
finitely many curves and the relevant intersection numbers with K and L.
No ampleness is required of L when evaluating mu or mu_c, so the formulas can
be used formally on nef-but-not-ample classes as well.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .exactnum import DomainError, Number, as_fraction, floor_root
from .intlinalg import is_negative_definite, solve


class ZariskiError(DomainError):
    """The supplied components cannot carry the negative part of D."""


@dataclass
class IntersectionData:
    labels: list[str]
    gram: list[list[int]]
    KdotC: Optional[list[int]] = None
    LdotC: Optional[list[int]] = None
    L2: Optional[int] = None
    KL: Optional[int] = None
    n: int = 2

    def __post_init__(self):
        m = len(self.labels)
        if len(self.gram) != m or any(len(row) != m for row in self.gram):
            raise DomainError("Gram matrix size does not match the number of components")
        for i in range(m):
            for j in range(i):
                if self.gram[i][j] != self.gram[j][i]:
                    raise DomainError(f"Gram matrix not symmetric at ({i}, {j})")
        for name in ("KdotC", "LdotC"):
            vec = getattr(self, name)
            if vec is not None and len(vec) != m:
                raise DomainError(f"{name} has the wrong length")

    def __len__(self):
        return len(self.labels)

    def dot(self, D: Sequence[Fraction], j: int) -> Fraction:
        """D . C_j for a divisor given by coefficients over the components."""
        return sum((Fraction(c) * self.gram[i][j] for i, c in enumerate(D)), Fraction(0))

    def sub_gram(self, support: Sequence[int]) -> list[list[int]]:
        return [[self.gram[i][j] for j in support] for i in support]


@dataclass(frozen=True)
class ZariskiDecomposition:
    P: tuple[Fraction, ...]
    N: tuple[Fraction, ...]
    support: tuple[int, ...]


def zariski_decompose(data: IntersectionData, D: Sequence[Number]) -> ZariskiDecomposition:
    """D = P + N by the iterative enlargement of the negative support.

    Start with the components that D meets negatively, solve P.C = 0 on the
    support, and add any component the current P still meets negatively.
    """
    D = [as_fraction(c) for c in D]
    m = len(data)
    if len(D) != m:
        raise DomainError("divisor length does not match the components")
    if any(c < 0 for c in D):
        raise DomainError("D must be effective")
    support: list[int] = []
    N = [Fraction(0)] * m
    while True:
        P = [d - x for d, x in zip(D, N)]
        neg = [j for j in range(m) if j not in support and data.dot(P, j) < 0]
        if not neg:
            break
        support = sorted(support + neg)
        sub = data.sub_gram(support)
        if not is_negative_definite(sub):
            raise ZariskiError("no Zariski decomposition within given components: "
                               f"support {[data.labels[i] for i in support]} is not negative definite")
        rhs = [data.dot(D, j) for j in support]
        x = solve(sub, rhs)
        N = [Fraction(0)] * m
        for i, v in zip(support, x):
            N[i] = v
        if any(v < 0 for v in N):
            raise ZariskiError("no Zariski decomposition within given components: "
                               "negative part is not effective")
    support = [i for i in support if N[i] != 0]
    return ZariskiDecomposition(tuple(P), tuple(N), tuple(support))


# ---------------------------------------------------------------------------
# slopes
# ---------------------------------------------------------------------------

def slope_mu(n: int, KLn1: Number, Ln: Number) -> Fraction:
    """mu(X, L) = -n K.L^(n-1) / (2 L^n)."""
    if n < 1:
        raise DomainError("dimension must be positive")
    Ln = as_fraction(Ln)
    if Ln <= 0:
        raise DomainError("L^n must be positive")
    return -n * as_fraction(KLn1) / (2 * Ln)


def _mu_c_parts(LZ, KZ, Z2, c):
    num = 3 * (2 * LZ - c * (KZ + Z2))
    den = 2 * c * (3 * LZ - c * Z2)
    return num, den


def slope_mu_c(LZ: Number, KZ: Number, Z2: Number, c: Number) -> Fraction:
    """Slope of a divisor Z on a surface at parameter c."""
    LZ, KZ, Z2, c = map(as_fraction, (LZ, KZ, Z2, c))
    if c <= 0:
        raise DomainError("c must be positive")
    num, den = _mu_c_parts(LZ, KZ, Z2, c)
    if den == 0:
        raise DomainError(f"mu_c has a pole at c = {c}")
    return num / den


def arithmetic_genus(KZ: Number, Z2: Number) -> Fraction:
    """p_a from adjunction: 2 p_a - 2 = K.Z + Z^2."""
    return 1 + (as_fraction(KZ) + as_fraction(Z2)) / 2


@dataclass(frozen=True)
class Verdict:
    destabilizes: bool
    witness: Optional[Fraction] = None
    mu_c: Optional[Fraction] = None


def _poly_roots(coeffs: Sequence[Fraction]) -> list[tuple[Fraction, Fraction, int]]:
    """Real roots of a*c^2 + b*c + k (coeffs = [k, b, a]) as isolating data.

    Each root is returned as (num0, num1, disc) meaning (num0 + num1*sqrt(disc));
    disc = 0 for rational roots.
    """
    k, b, a = coeffs
    if a == 0:
        if b == 0:
            return []
        return [(-k / b, Fraction(0), 0)]
    disc = b * b - 4 * a * k
    if disc < 0:
        return []
    out = []
    for sign in (1, -1):
        out.append((-b / (2 * a), sign / (2 * a), disc))
    return out


def _bracket(root: tuple[Fraction, Fraction, Fraction], digits: int) -> tuple[Fraction, Fraction]:
    base, coef, disc = root
    if disc == 0 or coef == 0:
        return base, base
    disc = Fraction(disc)
    sq = disc.numerator * disc.denominator  # sqrt(disc) = sqrt(sq) / den
    scale = 10 ** digits
    lo_int = floor_root(sq * scale * scale, 2)
    if lo_int * lo_int == sq * scale * scale:
        r = Fraction(lo_int, scale * disc.denominator)
        return base + coef * r, base + coef * r
    lo = Fraction(lo_int, scale * disc.denominator)
    hi = Fraction(lo_int + 1, scale * disc.denominator)
    a, b = base + coef * lo, base + coef * hi
    return (a, b) if a <= b else (b, a)


def simplest_between(a: Fraction, b: Fraction) -> Fraction:
    """Rational with the smallest denominator in the open interval (a, b), 0 <= a < b."""
    if not 0 <= a < b:
        raise ValueError("need 0 <= a < b")
    fl = a.numerator // a.denominator
    if fl + 1 < b:
        return Fraction(fl + 1)
    if a == fl or b == fl + 1:
        # one end is an integer: the answer is fl + 1/k or fl + 1 - 1/k with
        # k the least integer such that 1/k fits inside the gap
        options = []
        if a == fl:
            k = int((1 / (b - fl)) // 1) + 1
            options.append((k, fl + Fraction(1, k)))
        if b == fl + 1:
            k = int((1 / (fl + 1 - a)) // 1) + 1
            options.append((k, fl + 1 - Fraction(1, k)))
        return min(options)[1]
    return fl + 1 / simplest_between(1 / (b - fl), 1 / (a - fl))


def destabilizes(LZ: Number, KZ: Number, Z2: Number, mu: Number, c_max: Number) -> Verdict:
    """Is mu_c < mu for some c in (0, c_max]?

    mu_c - mu = h(c) / den(c) with h quadratic and den = 2c(3 LZ - c Z^2).
    The sign is constant between consecutive real roots of h and den, so one
    rational test point per region (and c_max itself) decides the question.
    Poles inside the range just split it further.  The witness is the first
    test point, scanning from 0, at which mu_c < mu.
    """
    LZ, KZ, Z2, mu, c_max = map(as_fraction, (LZ, KZ, Z2, mu, c_max))
    if c_max <= 0:
        raise DomainError("c_max must be positive")
    if LZ == 0 and Z2 == 0:
        raise DomainError("mu_c is undefined for every c (L.Z = Z^2 = 0)")
    s = KZ + Z2
    # h(c) = 3(2LZ - c s) - mu * 2c(3LZ - c Z2)
    h = [6 * LZ, -3 * s - 6 * mu * LZ, 2 * mu * Z2]
    den = [Fraction(0), 6 * LZ, -2 * Z2]
    roots = _poly_roots(h) + _poly_roots(den)
    digits = 20
    while True:
        brackets = []
        for root in roots:
            lo, hi = _bracket(root, digits)
            if hi <= 0 or lo >= c_max:
                continue
            brackets.append((lo, hi))
        brackets.sort()
        ok = all(lo > 0 or hi == 0 for lo, hi in brackets) and \
            all(hi < c_max or lo == c_max for lo, hi in brackets) and \
            all(brackets[i][1] < brackets[i + 1][0] or brackets[i] == brackets[i + 1]
                for i in range(len(brackets) - 1))
        if ok:
            break
        digits *= 2
    cuts = [Fraction(0)]
    for lo, hi in brackets:
        if (lo, hi) == (cuts[-1], cuts[-1]) or lo <= 0:
            continue
        cuts.append(lo)
        cuts.append(hi)
    cuts.append(c_max)
    tests = []
    for i in range(0, len(cuts) - 1, 2):
        left, right = cuts[i], cuts[i + 1]
        if left < right:
            tests.append(simplest_between(left, right))
    tests.append(c_max)
    for c in tests:
        num, d = _mu_c_parts(LZ, KZ, Z2, c)
        if d == 0:
            continue
        val = num / d
        if val < mu:
            return Verdict(True, c, val)
    return Verdict(False)
