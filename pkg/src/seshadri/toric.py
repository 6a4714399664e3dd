"""Lattice polytopes of polarized nonsingular toric varieties.

A polytope is given by its vertices in Z^n.  Facets, vertices and edges are
recovered by a direct support-hyperplane search in integer arithmetic, which
is fine for the small dimensions (n <= 4) this is meant for.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from .exactnum import DomainError
from .intlinalg import det_int, primitive, rank_int

Point = tuple[int, ...]
Edge = tuple[Point, Point]


def _normal(points: Sequence[Point]) -> tuple[int, ...]:
    """Integer normal of the affine hyperplane through n points in Z^n (zero if degenerate)."""
    p0 = points[0]
    rows = [[a - b for a, b in zip(p, p0)] for p in points[1:]]
    n = len(p0)
    normal = []
    for i in range(n):
        minor = [[r[j] for j in range(n) if j != i] for r in rows]
        normal.append((-1) ** i * det_int(minor))
    return primitive(normal)


def _dot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))


@dataclass(frozen=True)
class Facet:
    normal: tuple[int, ...]
    offset: int  # facet is {v : <v, normal> >= offset} on the boundary

    def contains(self, p: Point) -> bool:
        return _dot(p, self.normal) == self.offset


@dataclass
class LatticePolytope:
    dim: int
    vertices: tuple[Point, ...]
    facets: tuple[Facet, ...] = field(init=False)
    edges: tuple[Edge, ...] = field(init=False)

    def __post_init__(self):
        verts = tuple(tuple(int(c) for c in v) for v in self.vertices)
        if any(len(v) != self.dim for v in verts):
            raise DomainError("vertex coordinates do not match the dimension")
        if len(set(verts)) != len(verts):
            raise DomainError("duplicate vertices")
        if len(verts) <= self.dim:
            raise DomainError("polytope is not full-dimensional")
        p0 = verts[0]
        if rank_int([[a - b for a, b in zip(v, p0)] for v in verts[1:]], self.dim) < self.dim:
            raise DomainError("polytope is not full-dimensional")
        self.vertices = verts
        self.facets = tuple(self._find_facets())
        for v in verts:
            if not self._is_vertex(v):
                raise DomainError(f"{v} is not a vertex of the convex hull")
        self.edges = tuple(self._find_edges())

    @classmethod
    def from_json(cls, data) -> "LatticePolytope":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["dim"]), tuple(tuple(v) for v in data["vertices"]))

    def to_json(self) -> dict:
        return {"dim": self.dim, "vertices": [list(v) for v in self.vertices]}

    # hull -----------------------------------------------------------------

    def _find_facets(self) -> Iterable[Facet]:
        seen = set()
        for combo in combinations(self.vertices, self.dim):
            nrm = _normal(combo)
            if not any(nrm):
                continue
            off = _dot(combo[0], nrm)
            vals = [_dot(v, nrm) - off for v in self.vertices]
            if all(x >= 0 for x in vals):
                f = Facet(nrm, off)
            elif all(x <= 0 for x in vals):
                f = Facet(tuple(-c for c in nrm), -off)
            else:
                continue
            if f in seen:
                continue
            on = [v for v in self.vertices if f.contains(v)]
            q0 = on[0]
            if rank_int([[a - b for a, b in zip(q, q0)] for q in on[1:]], self.dim) == self.dim - 1:
                seen.add(f)
                yield f

    def incident_facets(self, pts: Iterable[Point]) -> list[Facet]:
        pts = list(pts)
        return [f for f in self.facets if all(f.contains(p) for p in pts)]

    def _face_dim(self, pts) -> int:
        return self.dim - rank_int([list(f.normal) for f in self.incident_facets(pts)], self.dim)

    def _is_vertex(self, v: Point) -> bool:
        return self._face_dim([v]) == 0

    def _find_edges(self) -> Iterable[Edge]:
        for u, v in combinations(self.vertices, 2):
            if self._face_dim([u, v]) == 1:
                yield (u, v)

    # queries --------------------------------------------------------------

    def edges_at(self, v: Point) -> list[Edge]:
        v = tuple(v)
        return [e for e in self.edges if v in e]

    def has_edge(self, e) -> bool:
        u, v = tuple(e[0]), tuple(e[1])
        return (u, v) in self.edges or (v, u) in self.edges

    def transformed(self, matrix: Sequence[Sequence[int]], shift: Sequence[int]) -> "LatticePolytope":
        verts = [tuple(_dot(row, v) + s for row, s in zip(matrix, shift)) for v in self.vertices]
        return LatticePolytope(self.dim, tuple(verts))

    def scaled(self, t: int) -> "LatticePolytope":
        return LatticePolytope(self.dim, tuple(tuple(t * c for c in v) for v in self.vertices))


@dataclass(frozen=True)
class DelzantReport:
    is_delzant: bool
    failures: tuple[tuple[Point, str], ...]


def edge_lattice_length(P: LatticePolytope, e) -> int:
    """Number of lattice points on the edge minus one."""
    if not P.has_edge(e):
        raise DomainError(f"{e} is not an edge of the polytope")
    u, v = e
    g = 0
    for a, b in zip(u, v):
        g = gcd(g, a - b)
    return g


def is_delzant(P: LatticePolytope) -> DelzantReport:
    failures = []
    for v in P.vertices:
        edges = P.edges_at(v)
        if len(edges) != P.dim:
            failures.append((v, "edge-count"))
            continue
        dirs = []
        for e in edges:
            w = e[1] if e[0] == v else e[0]
            dirs.append(primitive([a - b for a, b in zip(w, v)]))
        if abs(det_int(dirs)) != 1:
            failures.append((v, "basis-determinant"))
    return DelzantReport(not failures, tuple(failures))


def _require_delzant(P: LatticePolytope) -> None:
    rep = is_delzant(P)
    if not rep.is_delzant:
        v, why = rep.failures[0]
        raise DomainError(f"polytope is not Delzant (vertex {v}: {why})")


def seshadri_at_fixed_point(P: LatticePolytope, v) -> int:
    """Seshadri constant at the torus-fixed point of vertex ``v``: its shortest edge length.

    This is also the order of jets the line bundle generates there.
    """
    _require_delzant(P)
    v = tuple(v)
    if v not in P.vertices:
        raise DomainError(f"{v} is not a vertex")
    return min(edge_lattice_length(P, e) for e in P.edges_at(v))


def seshadri_global_toric(P: LatticePolytope) -> int:
    _require_delzant(P)
    return min(min(edge_lattice_length(P, e) for e in P.edges_at(v)) for v in P.vertices)


def simplex(n: int, k: int = 1) -> LatticePolytope:
    """k times the standard unimodular simplex in Z^n; polytope of (P^n, O(k))."""
    verts = [tuple(0 for _ in range(n))]
    for i in range(n):
        verts.append(tuple(k if j == i else 0 for j in range(n)))
    return LatticePolytope(n, tuple(verts))


# del Pezzo surface of degree 6 with -K = 3H - E1 - E2 - E3: the reflexive hexagon
HEXAGON = LatticePolytope(2, ((1, 0), (2, 0), (2, 1), (1, 2), (0, 2), (0, 1)))
