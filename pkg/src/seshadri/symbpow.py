"""Symbolic powers of squarefree monomial ideals and star-configuration numerics.

Monomials are exponent vectors.  A squarefree monomial ideal is radical and
its minimal primes are generated by variables, so I^(m) is the intersection
of the powers P^m over the minimal primes P.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Optional, Sequence

from .exactnum import DomainError, Ordering, SeshadriValue, as_fraction, compare_root

Mono = tuple[int, ...]


def _divides(a: Mono, b: Mono) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _minimalize(gens) -> tuple[Mono, ...]:
    uniq = sorted(set(gens), key=lambda g: (sum(g), g))
    out: list[Mono] = []
    for g in uniq:
        if not any(_divides(h, g) for h in out):
            out.append(g)
    return tuple(sorted(out, key=lambda g: (sum(g), tuple(-x for x in g))))


@dataclass(frozen=True)
class MonomialIdeal:
    num_vars: int
    gens: tuple[Mono, ...]

    def __post_init__(self):
        gens = tuple(tuple(int(x) for x in g) for g in self.gens)
        if any(len(g) != self.num_vars for g in gens):
            raise DomainError("generator length does not match the number of variables")
        if any(x < 0 for g in gens for x in g):
            raise DomainError("exponents must be nonnegative")
        object.__setattr__(self, "gens", _minimalize(gens))

    @classmethod
    def from_json(cls, data) -> "MonomialIdeal":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["vars"]), tuple(tuple(g) for g in data["gens"]))

    def to_json(self) -> dict:
        return {"vars": self.num_vars, "gens": [list(g) for g in self.gens]}

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, ((0,) * n,))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return any(sum(g) == 0 for g in self.gens)

    @property
    def is_squarefree(self) -> bool:
        return all(x <= 1 for g in self.gens for x in g)

    def contains_monomial(self, mono: Sequence[int]) -> bool:
        mono = tuple(mono)
        return any(_divides(g, mono) for g in self.gens)

    def __str__(self):
        names = "xyzw" if self.num_vars <= 4 else None

        def mono_str(g):
            parts = []
            for i, e in enumerate(g):
                v = names[i] if names else f"x{i}"
                if e == 1:
                    parts.append(v)
                elif e > 1:
                    parts.append(f"{v}^{e}")
            return "*".join(parts) or "1"
        return "(" + ", ".join(mono_str(g) for g in self.gens) + ")"


def _same_ring(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.num_vars != J.num_vars:
        raise DomainError("ideals live in different polynomial rings")


def mono_intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal(I.num_vars, tuple(tuple(max(a, b) for a, b in zip(g, h))
                                           for g in I.gens for h in J.gens))


def mono_product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal(I.num_vars, tuple(tuple(a + b for a, b in zip(g, h))
                                           for g in I.gens for h in J.gens))


def mono_power(I: MonomialIdeal, m: int) -> MonomialIdeal:
    """I^m; m = 0 gives the unit ideal by convention."""
    if m < 0:
        raise DomainError("power must be nonnegative")
    if m == 0:
        return MonomialIdeal.unit(I.num_vars)
    gens = []
    for combo in combinations_with_replacement(I.gens, m):
        gens.append(tuple(sum(col) for col in zip(*combo)))
    return MonomialIdeal(I.num_vars, tuple(gens))


def mono_contains(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """J is a subset of I."""
    _same_ring(I, J)
    return all(I.contains_monomial(g) for g in J.gens)


def _require_squarefree(I: MonomialIdeal) -> None:
    if not I.is_squarefree:
        raise DomainError("ideal is not squarefree")


def minimal_primes_squarefree(I: MonomialIdeal) -> list[frozenset[int]]:
    """Minimal primes as sets of variable indices (minimal covers of the generator supports)."""
    _require_squarefree(I)
    if I.is_zero:
        return [frozenset()]
    if I.is_unit:
        return []
    supports = [frozenset(i for i, x in enumerate(g) if x) for g in I.gens]
    found: set[frozenset[int]] = set()

    def split(chosen: frozenset[int]):
        for s in supports:
            if not s & chosen:
                for v in sorted(s):
                    split(chosen | {v})
                return
        found.add(chosen)

    split(frozenset())
    minimal = [p for p in found if not any(q < p for q in found)]
    return sorted(minimal, key=lambda p: (len(p), sorted(p)))


def prime_power(n: int, P: frozenset[int], m: int) -> MonomialIdeal:
    """(x_i : i in P)^m."""
    gens = []
    for combo in combinations_with_replacement(sorted(P), m):
        g = [0] * n
        for i in combo:
            g[i] += 1
        gens.append(tuple(g))
    return MonomialIdeal(n, tuple(gens))


def symbolic_power_squarefree(I: MonomialIdeal, m: int) -> MonomialIdeal:
    if m < 1:
        raise DomainError("symbolic power needs m >= 1")
    primes = minimal_primes_squarefree(I)
    if not primes:
        return MonomialIdeal.unit(I.num_vars)
    out = prime_power(I.num_vars, primes[0], m)
    for P in primes[1:]:
        out = mono_intersect(out, prime_power(I.num_vars, P, m))
    return out


def big_height(I: MonomialIdeal) -> int:
    """Largest size of a minimal prime."""
    return max(len(p) for p in minimal_primes_squarefree(I))


def check_symbolic_in_power(I: MonomialIdeal, m: int, r: int) -> bool:
    """Is I^(m) contained in I^r?"""
    if I.is_zero or I.is_unit:
        raise DomainError("need a proper nonzero ideal")
    return mono_contains(mono_power(I, r), symbolic_power_squarefree(I, m))


def alpha(I: MonomialIdeal) -> int:
    """Least degree of a nonzero element."""
    if I.is_zero:
        raise DomainError("the zero ideal has no initial degree")
    return min(sum(g) for g in I.gens)


# ---------------------------------------------------------------------------
# star configurations: codimension e subspaces cut out by s generic hyperplanes in P^N
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StarConfig:
    N: int
    s: int
    e: int

    def __post_init__(self):
        if self.N < 1:
            raise DomainError("N must be >= 1")
        if self.s <= self.N:
            raise DomainError("a star configuration needs s > N hyperplanes")
        if not 1 <= self.e <= self.N:
            raise DomainError("codimension must satisfy 1 <= e <= N")


def star_alpha(cfg: StarConfig, m: int) -> Optional[int]:
    """alpha(I^(m)) when a closed form is known, else None."""
    if m < 1:
        raise DomainError("m must be >= 1")
    s, e, N = cfg.s, cfg.e, cfg.N
    if m == 1:
        return s - e + 1
    if m % e == 0:
        return m * s // e
    if e == N:
        i, j = divmod(m, N)
        if j == 0:
            i, j = i - 1, N
        return (i + 1) * s - N + j
    return None


@dataclass(frozen=True)
class StarInvariants:
    gamma: Fraction
    rho_lower: Fraction
    reg: Optional[int] = None
    rho_exact: Optional[Fraction] = None
    seshadri: Optional[SeshadriValue] = None


def star_invariants(cfg: StarConfig) -> StarInvariants:
    s, e, N = cfg.s, cfg.e, cfg.N
    gamma = Fraction(s, e)
    rho_lower = Fraction(e * (s - e + 1), s)
    if e != N:
        return StarInvariants(gamma, rho_lower)
    eps = None
    if N >= 2:
        eps = SeshadriValue.nth_root(Fraction(s, N * comb(s, N)), N - 1, "points of a star configuration")
    return StarInvariants(gamma, rho_lower, s - N + 1, Fraction(N * (s - N + 1), s), eps)


def star_points_plane(s: int) -> list[tuple[Fraction, Fraction]]:
    """Pairwise intersections of the lines y = i x + i^2, i = 1..s (tangents to a conic)."""
    return [(Fraction(-(i + j)), Fraction(-i * j)) for i, j in combinations(range(1, s + 1), 2)]


NOT_CONTAINED = "not_contained"
CONTAINED = "contained"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ContainmentVerdict:
    verdict: str
    via: Optional[str] = None


def containment_criteria(alpha_m: int, alpha_I: int, r: int, reg: Optional[int] = None,
                         codim_is_N: bool = False) -> ContainmentVerdict:
    """Decide I^(m) in I^r from initial degrees and regularity when possible.

    alpha(I^(m)) < r alpha(I) rules containment out; for points
    (codimension N) r reg(I) <= alpha(I^(m)) forces it.
    """
    if alpha_m < 1 or alpha_I < 1 or r < 1:
        raise DomainError("alpha values and r must be positive")
    if alpha_m < r * alpha_I:
        return ContainmentVerdict(NOT_CONTAINED, "alpha-criterion")
    if codim_is_N and reg is not None and r * reg <= alpha_m:
        return ContainmentVerdict(CONTAINED, "regularity-criterion")
    return ContainmentVerdict(INCONCLUSIVE)


def huneke_star_check(s: int) -> bool:
    """I^(3) in I^2 for s lines' worth of star points in P^2, via the regularity criterion."""
    if s < 3:
        raise DomainError("need s >= 3")
    cfg = StarConfig(2, s, 2)
    v = containment_criteria(star_alpha(cfg, 3), star_alpha(cfg, 1), 2,
                             reg=star_invariants(cfg).reg, codim_is_N=True)
    return v.verdict == CONTAINED


@dataclass(frozen=True)
class GenericPointsCertificate:
    N: int
    j: int
    r: int
    reg_bound: int
    eps_lower: SeshadriValue
    gamma_lower: SeshadriValue
    ratio_upper: SeshadriValue  # reg_bound / gamma_lower
    threshold: Fraction  # (rN - (N-1)) / r
    holds: bool


def generic_points_check(N: int, j: int, r: int) -> GenericPointsCertificate:
    """Check rho(I) < (rN - (N-1))/r for j generic points of P^N via reg/gamma.

    reg(I) is at most one more than the least t with C(t+N, N) >= j; the
    multi-point Seshadri constant at j very general points is at least
    ((j-1)/j) (j-1)^(-1/N), and gamma(I) >= j eps^(N-1).
    """
    if N < 2 or j < 2 or r < 2:
        raise DomainError("need N >= 2, j >= 2, r >= 2")
    t = 0
    while comb(t + N, N) < j:
        t += 1
    reg = t + 1
    eps_pow = Fraction((j - 1) ** (N - 1), j ** N)  # eps^N
    eps = SeshadriValue.nth_root(eps_pow, N, "very general points lower bound")
    gamma_pow = j ** N * eps_pow ** (N - 1)  # gamma^N
    gamma = SeshadriValue.nth_root(gamma_pow, N, "gamma >= j * eps^(N-1)")
    ratio_pow = Fraction(reg ** N) / gamma_pow
    ratio = SeshadriValue.nth_root(ratio_pow, N, "reg / gamma")
    threshold = Fraction(r * N - (N - 1), r)
    holds = compare_root(threshold, ratio_pow, N) is Ordering.GREATER
    return GenericPointsCertificate(N, j, r, reg, eps, gamma, ratio, threshold, holds)
