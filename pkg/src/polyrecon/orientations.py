"""Acyclic orientations, H-sums, AOF recognition and Kalai's exhaustive oracle.

Conventions
-----------
A vertex order is a sequence listing every vertex once, from the vertex with
the smallest objective value to the largest.  The orientation it induces
directs every edge from its larger end-node to its smaller end-node, so
``order[0]`` is the global sink.

An :class:`Orientation` records, for each canonical edge ``(u, v)`` with
``u < v``, which endpoint is the head.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import FacesMissing, InvalidParameter, InvalidPermutation, TooLarge
from .graph import PolytopeGraph, induced_regularity

DEFAULT_BUDGET = 1 << 22

__all__ = [
    "DEFAULT_BUDGET",
    "Orientation",
    "check_order",
    "orient_by_order",
    "orientation_from_arcs",
    "is_acyclic",
    "h_vector",
    "h_sum",
    "h2_sum",
    "sinks_in_subset",
    "is_terminal",
    "is_aof_given_faces",
    "is_aof_via_twofaces",
    "enumerate_acyclic",
    "kalai_aofs",
    "faces_via_aofs",
    "aof_making_terminal",
    "descendants",
    "topological_order",
]


@dataclass(frozen=True)
class Orientation:
    graph: PolytopeGraph = field(compare=False, repr=False)
    heads: tuple[int, ...]

    def __post_init__(self):
        if len(self.heads) != self.graph.m:
            raise InvalidParameter("orientation must direct every edge exactly once")
        for (u, v), h in zip(self.graph.edges, self.heads):
            if h != u and h != v:
                raise InvalidParameter(f"head {h} is not an endpoint of edge ({u}, {v})")

    @cached_property
    def indegree(self) -> tuple[int, ...]:
        deg = [0] * self.graph.n
        for h in self.heads:
            deg[h] += 1
        return tuple(deg)

    @cached_property
    def out_adjacency(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.graph.n)]
        for (u, v), h in zip(self.graph.edges, self.heads):
            if h == v:
                out[u].append(v)
            else:
                out[v].append(u)
        return tuple(tuple(sorted(o)) for o in out)

    @cached_property
    def acyclic(self) -> bool:
        return topological_order(self) is not None

    @cached_property
    def signature(self) -> int:
        """Bit ``i`` is set iff canonical edge ``i`` points to its larger endpoint."""
        sig = 0
        for i, ((_, v), h) in enumerate(zip(self.graph.edges, self.heads)):
            if h == v:
                sig |= 1 << i
        return sig

    def head(self, u: int, v: int) -> int:
        return self.heads[self.graph.edge_id(u, v)]

    def points_to(self, tail: int, head: int) -> bool:
        return self.head(tail, head) == head

    def reversed(self) -> "Orientation":
        return Orientation(self.graph, tuple(u if h == v else v for (u, v), h in zip(self.graph.edges, self.heads)))

    def arcs(self) -> list[tuple[int, int]]:
        """Arcs ``(tail, head)`` in canonical edge order."""
        return [(v, u) if h == u else (u, v) for (u, v), h in zip(self.graph.edges, self.heads)]

    def to_strings(self) -> list[str]:
        return [f"{t}>{h}" for t, h in self.arcs()]


def check_order(g: PolytopeGraph, order: Sequence[int]) -> tuple[int, ...]:
    """Return the rank array of a vertex order; raises InvalidPermutation."""
    if sorted(order) != list(range(g.n)):
        raise InvalidPermutation(f"not a permutation of 0..{g.n - 1}: {list(order)}")
    rank = [0] * g.n
    for i, v in enumerate(order):
        rank[v] = i
    return tuple(rank)


def orient_by_order(g: PolytopeGraph, order: Sequence[int]) -> Orientation:
    rank = check_order(g, order)
    return Orientation(g, tuple(u if rank[u] < rank[v] else v for u, v in g.edges))


def orientation_from_arcs(g: PolytopeGraph, arcs: Iterable) -> Orientation:
    """Build an orientation from ``(tail, head)`` pairs or ``"t>h"`` strings."""
    heads: list[int | None] = [None] * g.m
    for arc in arcs:
        if isinstance(arc, str):
            t, h = (int(x) for x in arc.split(">"))
        else:
            t, h = int(arc[0]), int(arc[1])
        if not (0 <= t < g.n and 0 <= h < g.n and g.has_edge(t, h)):
            raise InvalidParameter(f"arc {t}>{h} is not an edge")
        i = g.edge_id(t, h)
        if heads[i] is not None:
            raise InvalidParameter(f"edge {g.edges[i]} directed twice")
        heads[i] = h
    if any(h is None for h in heads):
        raise InvalidParameter("some edges are not directed")
    return Orientation(g, tuple(heads))


def topological_order(o: Orientation) -> list[int] | None:
    """Vertices listed sinks-first (reverse topological order), or None if cyclic."""
    out = o.out_adjacency
    remaining = [len(a) for a in out]
    into: list[list[int]] = [[] for _ in range(o.graph.n)]
    for t, nbrs in enumerate(out):
        for h in nbrs:
            into[h].append(t)
    queue = deque(v for v in range(o.graph.n) if remaining[v] == 0)
    result = []
    while queue:
        v = queue.popleft()
        result.append(v)
        for t in into[v]:
            remaining[t] -= 1
            if remaining[t] == 0:
                queue.append(t)
    return result if len(result) == o.graph.n else None


def is_acyclic(g: PolytopeGraph, o: Orientation) -> bool:
    return o.acyclic


def h_vector(o: Orientation) -> list[int]:
    h = [0] * (o.graph.degree + 1)
    for k in o.indegree:
        h[k] += 1
    return h


def h_sum(o: Orientation) -> int:
    return sum(c << k for k, c in enumerate(h_vector(o)))


def h2_sum(o: Orientation) -> int:
    return sum(c * math.comb(k, 2) for k, c in enumerate(h_vector(o)))


def sinks_in_subset(g: PolytopeGraph, o: Orientation, s: Iterable[int]) -> list[int]:
    keep = set(s)
    out = o.out_adjacency
    return sorted(v for v in keep if not any(u in keep for u in out[v]))


def is_terminal(g: PolytopeGraph, o: Orientation, s: Iterable[int]) -> bool:
    keep = set(s)
    out = o.out_adjacency
    return all(u in keep for v in keep for u in out[v])


def is_aof_given_faces(g: PolytopeGraph, o: Orientation, faces: Sequence[Iterable[int]]) -> bool:
    if not faces:
        raise FacesMissing("face list is empty")
    if not o.acyclic:
        return False
    return all(len(sinks_in_subset(g, o, f)) == 1 for f in faces)


def is_aof_via_twofaces(g: PolytopeGraph, o: Orientation, twofaces: Iterable[Sequence[int]]) -> bool:
    from .walks import walk_sink_positions

    if not o.acyclic:
        return False
    return all(len(walk_sink_positions(w, o)) == 1 for w in twofaces)


def descendants(o: Orientation, s: int) -> frozenset[int]:
    """All vertices reachable from ``s`` along arcs, ``s`` included."""
    out = o.out_adjacency
    seen = {s}
    stack = [s]
    while stack:
        v = stack.pop()
        for u in out[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return frozenset(seen)


# --------------------------------------------------------------------------
# exhaustive enumeration
# --------------------------------------------------------------------------


def _enumerate_edges(g: PolytopeGraph, budget: int) -> Iterator[Orientation]:
    edges = g.edges
    out: list[set[int]] = [set() for _ in range(g.n)]
    heads: list[int] = [0] * g.m
    states = 0

    def reaches(src: int, dst: int) -> bool:
        if src == dst:
            return True
        seen = {src}
        stack = [src]
        while stack:
            x = stack.pop()
            for y in out[x]:
                if y == dst:
                    return True
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return False

    def rec(i: int) -> Iterator[Orientation]:
        nonlocal states
        states += 1
        if states > budget:
            raise TooLarge(f"acyclic enumeration exceeded budget of {budget} states")
        if i == len(edges):
            yield Orientation(g, tuple(heads))
            return
        u, v = edges[i]
        # head v first (arc u -> v), then head u
        for tail, head in ((u, v), (v, u)):
            if not reaches(head, tail):
                out[tail].add(head)
                heads[i] = head
                yield from rec(i + 1)
                out[tail].discard(head)

    yield from rec(0)


def _enumerate_permutations(g: PolytopeGraph, budget: int) -> Iterator[Orientation]:
    if math.factorial(g.n) > budget:
        raise TooLarge(f"{g.n}! vertex orders exceed budget of {budget}")
    seen: set[int] = set()
    for order in itertools.permutations(range(g.n)):
        o = orient_by_order(g, order)
        if o.signature not in seen:
            seen.add(o.signature)
            yield o


def enumerate_acyclic(g: PolytopeGraph, mode: str = "edges", budget: int = DEFAULT_BUDGET) -> Iterator[Orientation]:
    """Yield every acyclic orientation of ``g`` exactly once.

    ``mode="edges"`` runs a DFS over edge directions with cycle pruning;
    ``mode="permutations"`` sweeps all ``n!`` vertex orders and deduplicates.
    Raises TooLarge once more than ``budget`` states would be visited.
    """
    if mode == "edges":
        return _enumerate_edges(g, budget)
    if mode == "permutations":
        return _enumerate_permutations(g, budget)
    raise InvalidParameter(f"unknown enumeration mode {mode!r}")


def kalai_aofs(g: PolytopeGraph, mode: str = "edges", budget: int = DEFAULT_BUDGET) -> tuple[int, list[Orientation]]:
    """All acyclic orientations of minimum H-sum, i.e. all AOF-orientations."""
    best = None
    aofs: list[Orientation] = []
    for o in enumerate_acyclic(g, mode, budget):
        value = h_sum(o)
        if best is None or value < best:
            best, aofs = value, [o]
        elif value == best:
            aofs.append(o)
    return best, aofs


def faces_via_aofs(g: PolytopeGraph, aofs: Sequence[Orientation]) -> list[tuple[int, ...]]:
    """Nonempty faces as the regular connected descendant closures under AOFs.

    Sorted by size, then lexicographically.
    """
    faces: set[tuple[int, ...]] = set()
    candidates: set[frozenset] = set()
    for o in aofs:
        for s in range(g.n):
            candidates.add(descendants(o, s))
    for c in candidates:
        if induced_regularity(g, c) is not None:
            faces.add(tuple(sorted(c)))
    return sorted(faces, key=lambda f: (len(f), f))


def aof_making_terminal(g: PolytopeGraph, aofs: Sequence[Orientation], w: Iterable[int]) -> Orientation | None:
    """First AOF in ``aofs`` for which ``w`` is terminal, else None."""
    keep = set(w)
    for o in aofs:
        if is_terminal(g, o, keep):
            return o
    return None
