"""Plane linear systems L(d; m_1, ..., m_r) through fat points.

The conditions matrix has one row for every partial derivative of order
< m_i at p_i and one column for every monomial x^p y^q of degree <= d.  Full
column rank at some choice of points proves the system empty for general
points (rank only drops under specialization).  A kernel at random points
is only evidence of nonemptiness, so that verdict is reported as "likely".
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, lcm
from typing import Optional, Sequence

from .exactnum import DomainError, as_fraction
from .intlinalg import integral_vector, nullspace, rank_int

COORD_RANGE = 1000
CERTIFIED_EMPTY = "certified_empty"
LIKELY_NONEMPTY = "likely_nonempty"

Point = tuple[Fraction, Fraction]


@dataclass
class LinearSystem2D:
    """Degree d curves with multiplicity >= mults[i] at the i-th point.

    ``points=None`` means general points (sampled when probing); otherwise
    an explicit list of distinct affine rational points.
    """

    d: int
    mults: list[int]
    points: Optional[list[Point]] = None

    def __post_init__(self):
        if self.d < 0:
            raise DomainError("degree must be nonnegative")
        self.mults = [int(m) for m in self.mults]
        if any(m < 1 for m in self.mults):
            raise DomainError("multiplicities must be positive")
        if self.points is not None:
            self.points = [(as_fraction(x), as_fraction(y)) for x, y in self.points]
            if len(self.points) != len(self.mults):
                raise DomainError("number of points does not match the multiplicities")
            if len(set(self.points)) != len(self.points):
                raise DomainError("explicit points must be distinct")

    @classmethod
    def uniform(cls, d: int, m: int, r: int, extra: int = 0) -> "LinearSystem2D":
        """L(d; m+extra, m, ..., m) with r points in total."""
        return cls(d, [m + extra] + [m] * (r - 1))

    @property
    def ncols(self) -> int:
        return comb(self.d + 2, 2)

    @property
    def nconditions(self) -> int:
        return sum(comb(m + 1, 2) for m in self.mults)

    def at(self, points: Sequence[Point]) -> "LinearSystem2D":
        return LinearSystem2D(self.d, list(self.mults), list(points))

    def __str__(self):
        groups: list[list[int]] = []
        for m in self.mults:
            if groups and groups[-1][0] == m:
                groups[-1][1] += 1
            else:
                groups.append([m, 1])
        ms = ", ".join(f"{m}^{c}" if c > 1 else str(m) for m, c in groups)
        return f"L({self.d}; {ms})"


def virtual_dim(sys: LinearSystem2D) -> int:
    return comb(sys.d + 2, 2) - sys.nconditions - 1


def monomials(d: int) -> list[tuple[int, int]]:
    return [(p, e - p) for e in range(d + 1) for p in range(e, -1, -1)]


def condition_rows(d: int, point: Point, m: int) -> list[list[Fraction]]:
    """Taylor coefficients of order < m of f(x + a, y + b), as linear forms in f's coefficients."""
    a, b = point
    mons = monomials(d)
    rows = []
    for order in range(m):
        for i in range(order, -1, -1):
            j = order - i
            row = []
            for p, q in mons:
                if p < i or q < j:
                    row.append(Fraction(0))
                else:
                    row.append(comb(p, i) * comb(q, j) * a ** (p - i) * b ** (q - j))
            rows.append(row)
    return rows


def conditions_matrix(sys: LinearSystem2D, points: Optional[Sequence[Point]] = None) -> list[list[Fraction]]:
    pts = points if points is not None else sys.points
    if pts is None:
        raise DomainError("points are needed to build the conditions matrix")
    rows = []
    for pt, m in zip(pts, sys.mults):
        rows.extend(condition_rows(sys.d, pt, m))
    return rows


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    out = []
    for r in rows:
        den = 1
        for x in r:
            den = lcm(den, Fraction(x).denominator)
        out.append([int(x * den) for x in r])
    return out


def sample_points(r: int, rng: random.Random) -> list[Point]:
    pts: list[Point] = []
    seen = set()
    while len(pts) < r:
        p = (rng.randint(-COORD_RANGE, COORD_RANGE), rng.randint(-COORD_RANGE, COORD_RANGE))
        if p in seen:
            continue
        seen.add(p)
        pts.append((Fraction(p[0]), Fraction(p[1])))
    return pts


def trial_rng(seed: int, i: int) -> random.Random:
    """Independent generator for trial i; the same (seed, i) always gives the same draw."""
    return random.Random(f"{seed}:{i}")


@dataclass
class ProbeResult:
    verdict: str
    rank: int
    ncols: int
    trials: int
    seed: int
    trials_run: int = 1
    kernel_dims: list[int] = field(default_factory=list)
    kernel_vector: Optional[list[int]] = None
    points: Optional[list[Point]] = None

    @property
    def kernel_dim(self) -> int:
        return self.ncols - self.rank

    @property
    def certified_empty(self) -> bool:
        return self.verdict == CERTIFIED_EMPTY


def _rank_at(sys: LinearSystem2D, points: Sequence[Point]) -> int:
    return rank_int(_integer_rows(conditions_matrix(sys, points)), sys.ncols)


def _kernel_vector(sys: LinearSystem2D, points: Sequence[Point]) -> list[int]:
    basis = nullspace(conditions_matrix(sys, points), sys.ncols)
    return integral_vector(basis[0])


def _trial(args) -> tuple[int, list[Point]]:
    sys, seed, i = args
    pts = sample_points(len(sys.mults), trial_rng(seed, i))
    return _rank_at(sys, pts), pts


def interpolation_rank(sys: LinearSystem2D, trials: int = 5, seed: int = 0,
                       workers: int = 1) -> ProbeResult:
    """Exact rank of the conditions matrix, at explicit points or over seeded random trials.

    With general points the trials stop at the first full-rank draw.  With
    ``workers > 1`` trials run in batches in separate processes; the result
    is the same as the sequential run because each trial has its own seed.
    """
    n = sys.ncols
    if sys.points is not None:
        rk = _rank_at(sys, sys.points)
        return _finish(sys, rk, 1, seed, 1, [n - rk], sys.points)
    if trials < 1:
        raise DomainError("need at least one trial")
    best_rank, best_pts = -1, None
    dims: list[int] = []
    batch = max(1, workers)
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        for start in range(0, trials, batch):
            jobs = [(sys, seed, i) for i in range(start, min(trials, start + batch))]
            results = list(pool.map(_trial, jobs)) if pool else [_trial(j) for j in jobs]
            for rk, pts in results:
                dims.append(n - rk)
                if rk > best_rank:
                    best_rank, best_pts = rk, pts
                if rk == n:
                    return _finish(sys, rk, trials, seed, len(dims), dims, pts)
    finally:
        if pool:
            pool.shutdown()
    return _finish(sys, best_rank, trials, seed, len(dims), dims, best_pts)


def _finish(sys, rank, trials, seed, run, dims, pts) -> ProbeResult:
    if rank == sys.ncols:
        return ProbeResult(CERTIFIED_EMPTY, rank, sys.ncols, trials, seed, run, dims, None, list(pts))
    return ProbeResult(LIKELY_NONEMPTY, rank, sys.ncols, trials, seed, run, dims,
                       _kernel_vector(sys, pts), list(pts))


def speciality(sys: LinearSystem2D, trials: int = 5, seed: int = 0) -> int:
    """Observed kernel dimension minus the expected max(0, vdim + 1); 0 means nonspecial."""
    res = interpolation_rank(sys, trials, seed)
    return res.kernel_dim - max(0, virtual_dim(sys) + 1)


def evaluate(coeffs: Sequence, d: int, point: Point) -> Fraction:
    """Value at a point of the polynomial with the given coefficient vector."""
    x, y = point
    return sum((Fraction(c) * Fraction(x) ** p * Fraction(y) ** q
                for c, (p, q) in zip(coeffs, monomials(d))), Fraction(0))
