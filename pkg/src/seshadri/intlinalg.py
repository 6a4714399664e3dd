"""Exact linear algebra over Z and Q used by the toric, linsys and zarislope modules."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence


def _content(row: list[int]) -> int:
    g = 0
    for x in row:
        g = gcd(g, x)
        if g == 1:
            break
    return g


def det_int(mat: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by Bareiss elimination."""
    n = len(mat)
    if n == 0:
        return 1
    a = [list(r) for r in mat]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * piv - a[i][k] * a[k][j]) // prev
        prev = piv
    return sign * a[n - 1][n - 1]


def rank_int(rows: Sequence[Sequence[int]], ncols: int | None = None) -> int:
    """Rank of an integer matrix.

    Fraction-free forward elimination; each reduced row is divided by its
    content so entries stay small.  Rows are consumed one at a time against
    the current echelon basis.
    """
    if not rows:
        return 0
    if ncols is None:
        ncols = len(rows[0])
    basis: dict[int, list[int]] = {}  # pivot column -> row
    for r in rows:
        row = list(r)
        for col in range(ncols):
            x = row[col]
            if x == 0:
                continue
            b = basis.get(col)
            if b is None:
                g = _content(row)
                if g > 1:
                    row = [v // g for v in row]
                if row[col] < 0:
                    row = [-v for v in row]
                basis[col] = row
                break
            p = b[col]
            g = gcd(p, x)
            fp, fx = p // g, x // g
            row = [fp * u - fx * v for u, v in zip(row, b)]
            g = _content(row)
            if g > 1:
                row = [v // g for v in row]
        if len(basis) == ncols:
            break
    return len(basis)


def rref(rows: Sequence[Sequence], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (nonzero rows, pivot columns)."""
    a = [[Fraction(x) for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of the right kernel over Q, one vector per free column."""
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def primitive(vec: Sequence[int]) -> tuple[int, ...]:
    g = _content(list(vec))
    return tuple(v // g for v in vec) if g else tuple(vec)


def integral_vector(vec: Sequence[Fraction]) -> list[int]:
    """Scale a rational vector to a primitive integer vector."""
    den = 1
    for x in vec:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in vec]
    return list(primitive(ints))


def solve(mat: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """Solve a nonsingular square system exactly; raises ValueError when singular."""
    n = len(mat)
    aug = [list(map(Fraction, r)) + [Fraction(b)] for r, b in zip(mat, rhs)]
    red, pivots = rref(aug, n)
    if pivots != list(range(n)):
        raise ValueError("singular system")
    return [red[i][n] for i in range(n)]


def leading_minors(mat: Sequence[Sequence]) -> list[Fraction]:
    """Leading principal minors of a square rational matrix."""
    out = []
    for k in range(1, len(mat) + 1):
        sub = [[Fraction(x) for x in row[:k]] for row in mat[:k]]
        out.append(_det_frac(sub))
    return out


def _det_frac(a: list[list[Fraction]]) -> Fraction:
    n = len(a)
    a = [r[:] for r in a]
    d = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            d = -d
        d *= a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return d


def is_negative_definite(mat: Sequence[Sequence]) -> bool:
    """Sylvester's criterion: leading minors alternate in sign starting negative."""
    for k, m in enumerate(leading_minors(mat), start=1):
        if m == 0 or (m > 0) != (k % 2 == 0):
            return False
    return True
