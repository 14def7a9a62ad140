"""From 2-faces to facets and back, spanned faces, and the face lattice.

For an edge ``(v, w)`` the map ``psi(v, w)`` sends a set ``S`` of neighbors
of ``v`` (other than ``w``) to the neighbors ``T`` of ``w`` such that
``S + {v, w}`` and ``T + {w, v}`` span the same face.  On singletons it is
read directly off the 2-face cycles: if the 2-face through ``u - v - w``
continues with ``x`` after ``w`` then ``psi(v, w)({u}) = {x}``.  It
preserves unions, so larger sets are images of their elements.

A face spanned at ``v`` by neighbor set ``S`` is grown breadth-first: a
vertex ``a`` of the face with in-face neighbors ``S_a`` passes
``{a} + psi(a, b)(S_a - {b})`` to each ``b`` in ``S_a``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    CornerNotCovered,
    InconsistentPropagation,
    InvalidParameter,
    NotACycle,
    RankInconsistent,
)
from .graph import PolytopeGraph, induced_regularity, is_k_regular_connected
from .walks import FacoidalSystem, canonical_walk, corner_index, validate_facoidal, walk_corners

__all__ = [
    "TwoFaceSet",
    "VertexFacetIncidence",
    "FaceLattice",
    "psi_singleton",
    "psi_subset",
    "spanned_face",
    "facets_from_twofaces",
    "twofaces_from_facets",
    "face_lattice",
    "lattice_from_faces",
    "cycle_order",
]


class TwoFaceSet:
    """A facoidal system of simple cycles with a corner -> (walk, position) index."""

    def __init__(self, g: PolytopeGraph, walks: FacoidalSystem | Iterable[Sequence[int]]):
        fs = walks if isinstance(walks, FacoidalSystem) else validate_facoidal(g, walks)
        for w in fs.walks:
            if len(set(w)) != len(w):
                raise NotACycle(f"walk {list(w)} repeats a vertex")
        self.graph = g
        self.system = fs
        idx = corner_index(g)
        self._where: dict[int, tuple[int, int]] = {}
        for k, w in enumerate(fs.walks):
            for i, (a, v, b) in enumerate(walk_corners(w)):
                self._where[idx.id(v, a, b)] = (k, i)

    @property
    def walks(self) -> tuple[tuple[int, ...], ...]:
        return self.system.walks

    def __len__(self) -> int:
        return len(self.system)

    def locate(self, u: int, v: int, w: int) -> tuple[int, int]:
        try:
            return self._where[corner_index(self.graph).id(v, u, w)]
        except Exception:
            raise CornerNotCovered(f"corner {u}-{v}-{w} is not covered") from None

    def vertex_sets(self) -> list[tuple[int, ...]]:
        return sorted(tuple(sorted(w)) for w in self.walks)


@dataclass(frozen=True)
class VertexFacetIncidence:
    facets: tuple[tuple[int, ...], ...]
    n: int

    @cached_property
    def vertex_facets(self) -> tuple[tuple[int, ...], ...]:
        per: list[list[int]] = [[] for _ in range(self.n)]
        for i, f in enumerate(self.facets):
            for v in f:
                per[v].append(i)
        return tuple(tuple(p) for p in per)

    @property
    def incidences(self) -> int:
        return sum(len(f) for f in self.facets)

    def to_json(self) -> dict:
        return {"facets": [list(f) for f in self.facets]}

    @classmethod
    def from_json(cls, data: dict, n: int) -> "VertexFacetIncidence":
        return cls(tuple(sorted(tuple(sorted(f)) for f in data["facets"])), n)


@dataclass(frozen=True)
class FaceLattice:
    """Faces grouped by dimension ``-1..d`` plus cover relations.

    Faces are indexed globally by dimension, then lexicographically;
    ``hasse`` holds ``(lower, upper)`` index pairs.
    """

    dim: int
    faces: dict
    hasse: tuple[tuple[int, int], ...]

    @property
    def fvector(self) -> tuple[int, ...]:
        return tuple(len(self.faces[k]) for k in range(self.dim + 1))

    def nonempty_faces(self) -> list[tuple[int, ...]]:
        return [f for k in range(self.dim + 1) for f in self.faces[k]]

    def face_list(self) -> list[tuple[int, ...]]:
        return [f for k in range(-1, self.dim + 1) for f in self.faces[k]]

    @property
    def complexity_counts(self) -> dict:
        """Sizes entering the O(eta * alpha * lambda) lattice bound."""
        facets = self.faces[self.dim - 1] if self.dim >= 1 else []
        n = len(self.faces[0])
        return {
            "eta": min(n, len(facets)),
            "alpha": sum(len(f) for f in facets),
            "lambda": len(self.face_list()),
        }

    def to_json(self) -> dict:
        return {
            "fvector": list(self.fvector),
            "faces": {str(k): [list(f) for f in self.faces[k]] for k in range(-1, self.dim + 1)},
            "hasse": [list(p) for p in self.hasse],
        }


# --------------------------------------------------------------------------
# psi maps
# --------------------------------------------------------------------------


def psi_singleton(g: PolytopeGraph, twofaces: TwoFaceSet, v: int, w: int, u: int) -> int:
    if u == w or not g.has_edge(v, w) or not g.has_edge(v, u):
        raise InvalidParameter(f"{u}-{v}-{w} is not a corner")
    k, i = twofaces.locate(u, v, w)
    walk = twofaces.walks[k]
    l = len(walk)
    if walk[(i + 1) % l] == w:
        return walk[(i + 2) % l]
    return walk[(i - 2) % l]


def psi_subset(g: PolytopeGraph, twofaces: TwoFaceSet, v: int, w: int, s: Iterable[int]) -> tuple[int, ...]:
    s = set(s)
    if w in s or not s <= set(g.adjacency[v]):
        raise InvalidParameter(f"{sorted(s)} is not a subset of N({v}) - {{{w}}}")
    return tuple(sorted({psi_singleton(g, twofaces, v, w, u) for u in s}))


def spanned_face(g: PolytopeGraph, twofaces: TwoFaceSet, v: int, s: Iterable[int]) -> tuple[int, ...]:
    """Vertex set of the face containing ``v`` whose neighbors at ``v`` are ``s``."""
    start = frozenset(s)
    if not start <= set(g.adjacency[v]):
        raise InvalidParameter(f"{sorted(start)} is not a subset of N({v})")
    inside = {v: start}
    queue = deque([v])
    while queue:
        a = queue.popleft()
        sa = inside[a]
        for b in sorted(sa):
            t = frozenset(psi_subset(g, twofaces, a, b, sa - {b})) | {a}
            seen = inside.get(b)
            if seen is None:
                inside[b] = t
                queue.append(b)
            elif seen != t:
                raise InconsistentPropagation(
                    f"vertex {b} reached with neighbor sets {sorted(seen)} and {sorted(t)}"
                )
    return tuple(sorted(inside))


def facets_from_twofaces(g: PolytopeGraph, twofaces: TwoFaceSet) -> VertexFacetIncidence:
    facets: set[tuple[int, ...]] = set()
    for v in range(g.n):
        nbrs = g.adjacency[v]
        for skip in nbrs:
            facets.add(spanned_face(g, twofaces, v, (u for u in nbrs if u != skip)))
    vfi = VertexFacetIncidence(tuple(sorted(facets)), g.n)
    for v, fs in enumerate(vfi.vertex_facets):
        if len(fs) != g.degree:
            raise InconsistentPropagation(f"vertex {v} lies in {len(fs)} facets, expected {g.degree}")
    return vfi


def cycle_order(g: PolytopeGraph, vertices: Iterable[int]) -> tuple[int, ...]:
    """Order a vertex set inducing a cycle: start at the minimum, step to the smaller neighbor."""
    keep = set(vertices)
    if len(keep) < 3 or not is_k_regular_connected(g, keep, 2):
        raise NotACycle(f"{sorted(keep)} does not induce a cycle")
    start = min(keep)
    prev, cur = start, min(u for u in g.adjacency[start] if u in keep)
    seq = [start]
    while cur != start:
        seq.append(cur)
        nxt = [u for u in g.adjacency[cur] if u in keep and u != prev]
        prev, cur = cur, nxt[0]
    return tuple(seq)


def twofaces_from_facets(g: PolytopeGraph, vfi: VertexFacetIncidence) -> TwoFaceSet:
    facet_sets = [frozenset(f) for f in vfi.facets]
    everything = frozenset(range(g.n))
    walks: set[tuple[int, ...]] = set()
    for c in corner_index(g).corners:
        common = set(vfi.vertex_facets[c.center]) & set(vfi.vertex_facets[c.a]) & set(vfi.vertex_facets[c.b])
        inter = everything
        for i in common:
            inter = inter & facet_sets[i]
        walks.add(canonical_walk(cycle_order(g, inter)))
    return TwoFaceSet(g, sorted(walks))


# --------------------------------------------------------------------------
# lattice
# --------------------------------------------------------------------------


def lattice_from_faces(g: PolytopeGraph, nonempty: Iterable[Iterable[int]]) -> FaceLattice:
    """Rank nonempty faces by the regularity of their induced subgraphs and add covers."""
    by_dim: dict[int, set[tuple[int, ...]]] = {}
    for f in nonempty:
        f = tuple(sorted(f))
        k = induced_regularity(g, f)
        if k is None:
            raise RankInconsistent(f"{list(f)} does not induce a regular connected subgraph")
        by_dim.setdefault(k, set()).add(f)
    dim = g.degree
    faces = {-1: [()]}
    for k in range(dim + 1):
        faces[k] = sorted(by_dim.get(k, ()))
    if set(by_dim) - set(range(dim + 1)):
        raise RankInconsistent("face dimension out of range")
    offset = {}
    total = 0
    for k in range(-1, dim + 1):
        offset[k] = total
        total += len(faces[k])
    hasse = []
    for k in range(-1, dim):
        lower = [frozenset(f) for f in faces[k]]
        for j, hi in enumerate(faces[k + 1]):
            hs = frozenset(hi)
            for i, lo in enumerate(lower):
                if lo <= hs:
                    hasse.append((offset[k] + i, offset[k + 1] + j))
    return FaceLattice(dim, faces, tuple(sorted(hasse)))


def face_lattice(g: PolytopeGraph, vfi: VertexFacetIncidence) -> FaceLattice:
    """All intersections of facets, plus the whole polytope and the empty face."""
    facets = [frozenset(f) for f in vfi.facets]
    found = {frozenset(range(g.n))} | set(facets)
    frontier = list(facets)
    while frontier:
        fresh = []
        for a in frontier:
            for b in facets:
                c = a & b
                if c and c not in found:
                    found.add(c)
                    fresh.append(c)
        frontier = fresh
    return lattice_from_faces(g, found)
