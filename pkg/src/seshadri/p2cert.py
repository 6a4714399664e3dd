"""Certified lower bounds for Seshadri constants at r >= 10 general points of P^2.

A curve that would push eps(O(1); r points) below alpha must have a class
tL - m(E_1 + ... + E_r) - kE_i obeying the four restrictions checked by
``satisfies_restrictions``.  For alpha < 1/sqrt(r) only finitely many such
classes have ratio t/(mr + k) < alpha; showing every corresponding plane
system L(t; m+k, m^(r-1)) empty proves eps >= alpha.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Optional

from .exactnum import DomainError, Number, Ordering, as_fraction, compare_root
from .linsys import LinearSystem2D, ProbeResult, interpolation_rank

CERTIFIED = "certified"
REFUTED = "refuted"
UNKNOWN = "unknown"


@dataclass(frozen=True, order=True)
class CandidateTriple:
    t: int
    m: int
    k: int
    r: int

    def system(self) -> LinearSystem2D:
        return LinearSystem2D(self.t, [self.m + self.k] + [self.m] * (self.r - 1))

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.t, self.m, self.k, self.r)


def _t2_range(m: int, k: int, r: int) -> tuple[Fraction, Fraction, bool]:
    """(lower, upper, upper_strict) for t^2 from the third restriction."""
    base = m * m * r + 2 * m * k
    if k > 0:
        return Fraction(base + max(k * k - m, 0)), base + Fraction(k * k, r), False
    if k == 0:
        return Fraction(base - m), Fraction(base), True
    return Fraction(base + max(k * k - (m + k), 0)), base + Fraction(k * k, r), False


def _b_holds(m: int, k: int, r: int) -> bool:
    return -m < k and k * k * (r - 1) < r * min(m, m + k)


def _d_holds(t: int, m: int, k: int, r: int) -> bool:
    return t * t - (m + k) ** 2 - (r - 1) * m * m - 3 * t + m * r + k >= -2


def satisfies_restrictions(c: CandidateTriple) -> bool:
    t, m, k, r = c.as_tuple()
    if r < 10:
        raise DomainError("the restrictions are only proven for r >= 10 general points")
    if t < 1 or m < 1:
        return False
    if not _b_holds(m, k, r):
        return False
    lo, hi, strict = _t2_range(m, k, r)
    t2 = t * t
    if t2 < lo or t2 > hi or (strict and t2 == hi):
        return False
    return _d_holds(t, m, k, r)


def ratio(c: CandidateTriple) -> Fraction:
    den = c.m * c.r + c.k
    if den <= 0:
        raise DomainError("mr + k must be positive")
    return Fraction(c.t, den)


def completeness_bound(r: int, alpha: Number) -> Fraction:
    """Every candidate with ratio < alpha has m < this bound.

    With s = mr + k, the lower bound on t^2 is at least s^2/r - m, and
    s > m(r - 1) because k > -m.  So alpha^2 s^2 > t^2 forces
    m^2 (r-1)^2 (1/r - alpha^2) < m.
    """
    alpha = as_fraction(alpha)
    gap = Fraction(1, r) - alpha * alpha
    if gap <= 0:
        raise DomainError("alpha must be below 1/sqrt(r)")
    return 1 / ((r - 1) ** 2 * gap)


def _check_alpha(r: int, alpha: Fraction) -> None:
    if r < 10:
        raise DomainError("the restrictions are only proven for r >= 10 general points")
    if alpha <= 0:
        raise DomainError("alpha must be positive")
    if compare_root(alpha, Fraction(1, r), 2) is not Ordering.LESS:
        raise DomainError(f"alpha = {alpha} is not below 1/sqrt({r})")


def _ceil_sqrt(q: Fraction) -> int:
    if q <= 0:
        return 0
    n = q.numerator // q.denominator
    s = isqrt(n)
    while s * s < q:
        s += 1
    return s


def _floor_sqrt(q: Fraction) -> int:
    if q < 0:
        return -1
    return isqrt(q.numerator // q.denominator)


@dataclass
class CandidateList:
    candidates: list[CandidateTriple]
    complete: bool
    m_max: int
    bound: Fraction

    @property
    def truncated(self) -> bool:
        return not self.complete


def enumerate_candidates(r: int, alpha: Number, m_max: Optional[int] = None) -> CandidateList:
    """All triples with m <= m_max obeying the restrictions and ratio < alpha, sorted by ratio.

    ``m_max=None`` uses the smallest value that makes the list complete.
    """
    alpha = as_fraction(alpha)
    _check_alpha(r, alpha)
    bound = completeness_bound(r, alpha)
    needed = -(-bound.numerator // bound.denominator) - 1  # largest integer m < bound
    if m_max is None:
        m_max = max(1, needed)
    if m_max < 1:
        raise DomainError("m_max must be >= 1")
    out = []
    for m in range(1, m_max + 1):
        k_hi = isqrt(2 * m) + 2
        for k in range(-m + 1, k_hi + 1):
            if not _b_holds(m, k, r):
                continue
            lo, hi, strict = _t2_range(m, k, r)
            t_lo, t_hi = max(1, _ceil_sqrt(lo)), _floor_sqrt(hi)
            for t in range(t_lo, t_hi + 1):
                if strict and t * t == hi:
                    continue
                if Fraction(t, m * r + k) >= alpha:
                    break
                if _d_holds(t, m, k, r):
                    out.append(CandidateTriple(t, m, k, r))
    out.sort(key=lambda c: (ratio(c), c.m, c.k, c.t))
    return CandidateList(out, m_max >= needed, m_max, bound)


@dataclass
class CandidateCheck:
    candidate: CandidateTriple
    probe: Optional[ProbeResult]  # None when the system exceeded the size budget


@dataclass
class CertificationReport:
    r: int
    alpha: Fraction
    verdict: str
    checks: list[CandidateCheck]
    complete: bool
    unchecked: list[CandidateTriple] = field(default_factory=list)
    witness: Optional[CandidateCheck] = None


def certify_lower_bound(r: int, alpha: Number, m_max: Optional[int] = None, trials: int = 5,
                        seed: int = 0, size_budget: int = 2000, workers: int = 1) -> CertificationReport:
    """Try to prove eps(O(1); r general points) >= alpha.

    Each candidate system gets its own sub-seed (seed, index) so the report
    is reproducible.  Systems with more than ``size_budget`` columns or rows
    are skipped and leave the verdict unknown.
    """
    alpha = as_fraction(alpha)
    cl = enumerate_candidates(r, alpha, m_max)
    checks, unchecked = [], []
    witness = None
    for idx, cand in enumerate(cl.candidates):
        sys = cand.system()
        if max(sys.ncols, sys.nconditions) > size_budget:
            checks.append(CandidateCheck(cand, None))
            unchecked.append(cand)
            continue
        probe = interpolation_rank(sys, trials, _sub_seed(seed, idx), workers)
        check = CandidateCheck(cand, probe)
        checks.append(check)
        if not probe.certified_empty and witness is None:
            witness = check
    if witness is not None:
        verdict = REFUTED
    elif unchecked or not cl.complete:
        verdict = UNKNOWN
    else:
        verdict = CERTIFIED
    return CertificationReport(r, alpha, verdict, checks, cl.complete, unchecked, witness)


def _sub_seed(seed: int, idx: int) -> int:
    return (seed * 1_000_003 + idx) % (1 << 64)


# ---------------------------------------------------------------------------
# published table of estimates, r = 10..32 nonsquare
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TableRow:
    r: int
    num: int  # printed lower estimate num/den (unreduced)
    den: int
    approx: str
    t: int  # non-checked system L(t; m^r)
    m: int
    conjectured: str


TABLE = [TableRow(*row) for row in [
    (10, 313, 990, "0.3161616162", 313, 99, "0.3162277660"),
    (11, 242, 803, "0.3013698630", 242, 73, "0.3015113446"),
    (12, 277, 960, "0.2885416667", 277, 80, "0.2886751346"),
    (13, 602, 2171, "0.2772915707", 602, 167, "0.2773500981"),
    (14, 389, 1456, "0.2671703297", 389, 104, "0.2672612419"),
    (15, 484, 1875, "0.2581333333", 484, 125, "0.2581988897"),
    (17, 305, 1258, "0.2424483307", 305, 74, "0.2425356250"),
    (18, 369, 1566, "0.2356321839", 369, 87, "0.2357022604"),
    (19, 741, 3230, "0.2294117647", 741, 170, "0.2294157339"),
    (20, 796, 3560, "0.2235955056", 796, 178, "0.2236067977"),
    (21, 1865, 8547, "0.2182052182", 1865, 407, "0.2182178902"),
    (22, 924, 4334, "0.2131979695", 924, 197, "0.2132007164"),
    (23, 585, 2806, "0.2084818247", 585, 122, "0.2085144141"),
    (24, 965, 4728, "0.2041032149", 965, 197, "0.2041241452"),
    (26, 622, 3172, "0.1960907945", 622, 122, "0.1961161351"),
    (27, 956, 4968, "0.1924315620", 956, 184, "0.1924500897"),
    (28, 2434, 12880, "0.1889751553", 2434, 460, "0.1889822365"),
    (29, 2364, 12731, "0.1856884769", 2364, 439, "0.1856953382"),
    (30, 2388, 13080, "0.1825688073", 2388, 436, "0.1825741858"),
    (31, 10729, 59737, "0.1796039306", 10729, 1927, "0.1796053020"),
    (32, 1137, 6432, "0.1767723881", 1137, 201, "0.1767766953"),
]]

DECIMAL_TOL = Fraction(5, 10 ** 10)


@dataclass
class RowReport:
    row: TableRow
    fraction_ok: bool
    decimal_ok: bool
    conjectured_ok: bool
    restrictions_ok: bool
    non_checked_system: str

    @property
    def ok(self) -> bool:
        return self.fraction_ok and self.decimal_ok and self.conjectured_ok and self.restrictions_ok


def _within_root(dec: Fraction, q: Fraction, tol: Fraction) -> bool:
    """|dec - sqrt(q)| <= tol, decided exactly."""
    lo, hi = dec - tol, dec + tol
    return (lo <= 0 or lo * lo <= q) and hi >= 0 and q <= hi * hi


def verify_table() -> list[RowReport]:
    out = []
    for row in TABLE:
        frac = Fraction(row.num, row.den)
        fraction_ok = (frac == Fraction(row.t, row.m * row.r)
                       and row.num == row.t and row.den == row.m * row.r)
        decimal_ok = abs(frac - Fraction(row.approx)) <= DECIMAL_TOL
        conj_ok = _within_root(Fraction(row.conjectured), Fraction(1, row.r), DECIMAL_TOL)
        restr_ok = satisfies_restrictions(CandidateTriple(row.t, row.m, 0, row.r))
        out.append(RowReport(row, fraction_ok, decimal_ok, conj_ok, restr_ok,
                             f"L({row.t}; {row.m}^{row.r})"))
    return out
