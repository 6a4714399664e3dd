"""Exact number kernel.

Everything here works over Python integers and :class:`fractions.Fraction`;
no floating point is used for any decision.  Seshadri values are either
rationals, a single n-th root of a positive rational, or a certified interval
whose endpoints are one of the former two.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional, Union

Number = Union[int, Fraction]


class DomainError(ValueError):
    """Input lies outside the domain of an operation."""


class InconsistencyError(ValueError):
    """Two certified bounds contradict each other."""


class Ordering(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @classmethod
    def of(cls, a, b) -> "Ordering":
        return cls.LESS if a < b else cls.GREATER if a > b else cls.EQUAL


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


# ---------------------------------------------------------------------------
# integer roots
# ---------------------------------------------------------------------------

def floor_root(a: int, n: int) -> int:
    """Return ``floor(a ** (1/n))`` exactly."""
    if n < 1:
        raise DomainError("root index must be >= 1")
    if a < 0:
        raise DomainError("floor_root needs a >= 0")
    if n == 1 or a < 2:
        return a
    if n == 2:
        return isqrt(a)
    # Newton iteration from an overestimate
    x = 1 << ((a.bit_length() + n - 1) // n)
    while True:
        y = ((n - 1) * x + a // x ** (n - 1)) // n
        if y >= x:
            break
        x = y
    while x ** n > a:
        x -= 1
    while (x + 1) ** n <= a:
        x += 1
    return x


def exact_int_root(a: int, n: int) -> Optional[int]:
    """Integer n-th root of ``a`` if it exists, else None."""
    if a < 0:
        return None
    r = floor_root(a, n)
    return r if r ** n == a else None


def exact_rational_root(q: Fraction, n: int) -> Optional[Fraction]:
    """Rational n-th root of ``q >= 0`` if it exists, else None."""
    q = as_fraction(q)
    if q < 0:
        return None
    p = exact_int_root(q.numerator, n)
    if p is None:
        return None
    d = exact_int_root(q.denominator, n)
    if d is None:
        return None
    return Fraction(p, d)


def is_square(a: int) -> bool:
    return a >= 0 and isqrt(a) ** 2 == a


# ---------------------------------------------------------------------------
# comparisons with roots
# ---------------------------------------------------------------------------

def compare_root(x: Number, q: Number, n: int) -> Ordering:
    """Order ``x`` against ``q ** (1/n)`` without floating point."""
    if n < 1:
        raise DomainError("root index must be >= 1")
    x, q = as_fraction(x), as_fraction(q)
    if q < 0:
        raise DomainError("radicand must be nonnegative")
    if x < 0:
        return Ordering.EQUAL if q == 0 and x == 0 else Ordering.LESS
    return Ordering.of(x ** n, q)


def _compare_roots(p: Fraction, n: int, q: Fraction, m: int) -> Ordering:
    # p^(1/n) vs q^(1/m) for p, q >= 0
    return Ordering.of(p ** m, q ** n)


# ---------------------------------------------------------------------------
# Pell equation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PellSolution:
    D: int
    ell0: int
    k0: int


def pell_fundamental(D: int) -> PellSolution:
    """Fundamental solution of ``l^2 - D k^2 = 1`` via the continued fraction of sqrt(D).

    The convergents p/q of sqrt(D) are walked until ``p^2 - D q^2 == 1``;
    this happens at the end of the first or second period.
    """
    if D < 2 or is_square(D):
        raise DomainError(f"Pell equation needs a positive nonsquare D >= 2, got {D}")
    a0 = isqrt(D)
    m, d, a = 0, 1, a0
    p_prev, p = 1, a0
    q_prev, q = 0, 1
    while p * p - D * q * q != 1:
        m = d * a - m
        d = (D - m * m) // d
        a = (a0 + m) // d
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
    return PellSolution(D, p, q)


# ---------------------------------------------------------------------------
# root values
# ---------------------------------------------------------------------------

def _prime_factors(n: int) -> list[int]:
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class RootValue:
    """The positive real ``radicand ** (1/index)``, kept in normalized form.

    Use :func:`make_root` to build one; it reduces the index as far as the
    radicand allows and returns a plain Fraction for perfect powers.
    """

    radicand: Fraction
    index: int

    def __post_init__(self):
        if self.index < 2:
            raise DomainError("RootValue index must be >= 2; use a Fraction instead")
        if self.radicand <= 0:
            raise DomainError("RootValue radicand must be positive")
        if exact_rational_root(self.radicand, self.index) is not None:
            raise DomainError("radicand is a perfect power; use make_root")

    def __str__(self):
        base = f"({self.radicand})" if self.radicand.denominator != 1 else str(self.radicand)
        return f"sqrt{base}" if self.index == 2 else f"root{self.index}{base}"


def make_root(q: Number, n: int) -> Union[Fraction, RootValue]:
    """``q ** (1/n)`` as an exact Fraction when possible, else a normalized RootValue."""
    if n < 1:
        raise DomainError("root index must be >= 1")
    q = as_fraction(q)
    if q < 0:
        raise DomainError("radicand must be nonnegative")
    r = exact_rational_root(q, n)
    if r is not None:
        return r
    # strip prime factors of the index while the radicand is a perfect power
    changed = True
    while changed:
        changed = False
        for p in _prime_factors(n):
            s = exact_rational_root(q, p)
            if s is not None:
                q, n = s, n // p
                changed = True
                break
    if n == 1:
        return q
    return RootValue(q, n)


# ---------------------------------------------------------------------------
# Seshadri values
# ---------------------------------------------------------------------------

EXACT, ROOT, INTERVAL = "exact", "root", "interval"


@dataclass(frozen=True)
class SeshadriValue:
    kind: str
    exact: Optional[Fraction] = None
    root: Optional[RootValue] = None
    lower: Optional["SeshadriValue"] = None
    upper: Optional["SeshadriValue"] = None
    provenance: str = ""

    # constructors -------------------------------------------------------

    @classmethod
    def of(cls, q: Number, provenance: str = "") -> "SeshadriValue":
        return cls(EXACT, exact=as_fraction(q), provenance=provenance)

    @classmethod
    def nth_root(cls, q: Number, n: int, provenance: str = "") -> "SeshadriValue":
        v = make_root(q, n)
        if isinstance(v, Fraction):
            return cls(EXACT, exact=v, provenance=provenance)
        return cls(ROOT, root=v, provenance=provenance)

    @classmethod
    def interval(cls, lower: "SeshadriValue", upper: "SeshadriValue",
                 provenance: str = "") -> "SeshadriValue":
        if lower.is_interval or upper.is_interval:
            raise DomainError("interval endpoints must be single values")
        if lower.compare(upper) is Ordering.GREATER:
            raise InconsistencyError(
                f"lower bound {lower} [{lower.provenance}] exceeds "
                f"upper bound {upper} [{upper.provenance}]")
        return cls(INTERVAL, lower=lower, upper=upper, provenance=provenance)

    @classmethod
    def between(cls, lower: "SeshadriValue", upper: "SeshadriValue",
                provenance: str = "") -> "SeshadriValue":
        """Like :meth:`interval` but collapses to a single value when the bounds pinch."""
        iv = cls.interval(lower, upper, provenance)
        if lower.compare(upper) is Ordering.EQUAL:
            cites = "; ".join(c for c in (lower.provenance, upper.provenance) if c)
            return lower.with_provenance(cites or provenance)
        return iv

    def with_provenance(self, provenance: str) -> "SeshadriValue":
        return SeshadriValue(self.kind, self.exact, self.root, self.lower, self.upper, provenance)

    # queries ------------------------------------------------------------

    @property
    def is_interval(self) -> bool:
        return self.kind == INTERVAL

    @property
    def is_exact(self) -> bool:
        return self.kind == EXACT

    def power_form(self) -> tuple[Fraction, int]:
        """(radicand, index) such that the value is radicand ** (1/index)."""
        if self.kind == EXACT:
            return self.exact, 1
        if self.kind == ROOT:
            return self.root.radicand, self.root.index
        raise DomainError("an interval has no single power form")

    def compare(self, other: Union["SeshadriValue", Number]) -> Ordering:
        if not isinstance(other, SeshadriValue):
            other = SeshadriValue.of(other)
        if self.is_interval or other.is_interval:
            raise DomainError("intervals are not totally ordered")
        p, n = self.power_form()
        q, m = other.power_form()
        if n == 1 and m == 1:
            return Ordering.of(p, q)
        if n == 1 and p < 0:
            return Ordering.LESS
        if m == 1 and q < 0:
            return Ordering.GREATER
        return _compare_roots(p, n, q, m)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SeshadriValue.of(other)
        if not isinstance(other, SeshadriValue):
            return NotImplemented
        if self.is_interval or other.is_interval:
            return (self.kind == other.kind and self.lower == other.lower
                    and self.upper == other.upper)
        return self.compare(other) is Ordering.EQUAL

    def __hash__(self):
        if self.is_interval:
            return hash((INTERVAL, self.lower, self.upper))
        return hash(self.power_form())

    def __lt__(self, other):
        return self.compare(other) is Ordering.LESS

    def __le__(self, other):
        return self.compare(other) is not Ordering.GREATER

    def __gt__(self, other):
        return self.compare(other) is Ordering.GREATER

    def __ge__(self, other):
        return self.compare(other) is not Ordering.LESS

    def scaled(self, factor: Number) -> "SeshadriValue":
        """The value multiplied by a positive rational."""
        factor = as_fraction(factor)
        if factor <= 0:
            raise DomainError("scale factor must be positive")
        if self.is_interval:
            return SeshadriValue.interval(self.lower.scaled(factor), self.upper.scaled(factor),
                                          self.provenance)
        q, n = self.power_form()
        if n == 1:
            return SeshadriValue.of(q * factor, self.provenance)
        return SeshadriValue.nth_root(q * factor ** n, n, self.provenance)

    def floor_scaled(self, digits: int) -> int:
        """``floor(value * 10**digits)``, exact."""
        if self.is_interval:
            raise DomainError("use the interval endpoints")
        q, n = self.power_form()
        scale = 10 ** (digits * n)
        t = q * scale
        if n == 1:
            return t.numerator // t.denominator
        return floor_root(t.numerator // t.denominator, n)

    def decimal(self, digits: int = 10) -> str:
        """Decimal rendering truncated to ``digits`` places (rounded toward zero for positives)."""
        if self.is_interval:
            return f"[{self.lower.decimal(digits)}, {self.upper.decimal(digits)}]"
        q, n = self.power_form()
        if n == 1 and q < 0:
            v = SeshadriValue.of(-q).floor_scaled(digits)
            sign = "-"
        else:
            v = self.floor_scaled(digits)
            sign = ""
        if digits == 0:
            return f"{sign}{v}"
        s = str(v).rjust(digits + 1, "0")
        return f"{sign}{s[:-digits]}.{s[-digits:]}"

    def __float__(self):
        if self.is_interval:
            raise DomainError("an interval has no single float value")
        q, n = self.power_form()
        return float(q) ** (1.0 / n)

    def __str__(self):
        if self.kind == EXACT:
            return str(self.exact)
        if self.kind == ROOT:
            return str(self.root)
        return f"[{self.lower}, {self.upper}]"

    def __repr__(self):
        return f"SeshadriValue({self})"


def vmin(*values: SeshadriValue) -> SeshadriValue:
    out = values[0]
    for v in values[1:]:
        if v < out:
            out = v
    return out


def vmax(*values: SeshadriValue) -> SeshadriValue:
    out = values[0]
    for v in values[1:]:
        if v > out:
            out = v
    return out
