"""Closed smooth walks, corners, the corner graph and facoidal systems.

A corner is a path of length two ``a - v - b`` identified by its center ``v``
and the unordered endpoint pair ``{a, b}``.  A facoidal system is a set of
closed smooth walks that traverses every corner exactly once.

Facoidal systems are built constructively from an *edge pairing*: for each
graph edge ``{u, v}`` a bijection between the ``d - 1`` corners at ``u``
that contain ``v`` and the ``d - 1`` corners at ``v`` that contain ``u``.
Following the links of all pairings decomposes the corners into cycles, and
every cycle reads back as a closed smooth walk.  Conversely every facoidal
system determines a unique pairing.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    CornerDuplicated,
    CornerMissing,
    DegreeTooSmall,
    IncoherentFactor,
    InvalidPairing,
    InvalidParameter,
    NotAWalk,
)
from .graph import PolytopeGraph
from .orientations import Orientation

__all__ = [
    "Corner",
    "CornerGraph",
    "CornerIndex",
    "EdgePairing",
    "FacoidalSystem",
    "canonical_walk",
    "corners",
    "corner_index",
    "corner_graph",
    "walks_from_pairing",
    "pairing_from_facoidal",
    "canonical_pairing",
    "random_pairing",
    "validate_facoidal",
    "facoidal_to_two_factor",
    "two_factor_to_facoidal",
    "pairing_from_factor",
    "find_facoidal",
    "walk_corners",
    "walk_sink_positions",
    "walk_source_positions",
]


class Corner(NamedTuple):
    center: int
    a: int
    b: int

    def other(self, x: int) -> int:
        return self.b if x == self.a else self.a


def _require_degree(g: PolytopeGraph) -> None:
    if g.degree < 2:
        raise DegreeTooSmall(f"walks need degree >= 2, graph has degree {g.degree}")


def corners(g: PolytopeGraph) -> list[Corner]:
    """All ``n * C(d, 2)`` corners ordered by (center, a, b) with ``a < b``."""
    _require_degree(g)
    return [Corner(v, a, b) for v in range(g.n) for i, a in enumerate(g.adjacency[v]) for b in g.adjacency[v][i + 1:]]


class CornerIndex:
    """Corner list plus lookups used by every walk algorithm."""

    def __init__(self, g: PolytopeGraph):
        self.graph = g
        self.corners = corners(g)
        self._id = {c: i for i, c in enumerate(self.corners)}
        # per canonical edge (u, v): corners at u containing v, corners at v containing u
        self.sides: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
        for u, v in g.edges:
            self.sides.append((self._side(u, v), self._side(v, u)))

    def _side(self, center: int, nbr: int) -> tuple[int, ...]:
        return tuple(self.id(center, nbr, x) for x in self.graph.adjacency[center] if x != nbr)

    def id(self, center: int, x: int, y: int) -> int:
        key = Corner(center, x, y) if x < y else Corner(center, y, x)
        try:
            return self._id[key]
        except KeyError:
            raise NotAWalk(f"{x}-{center}-{y} is not a corner") from None

    def __len__(self) -> int:
        return len(self.corners)


_INDEX_CACHE: dict[int, tuple[PolytopeGraph, CornerIndex]] = {}


def corner_index(g: PolytopeGraph) -> CornerIndex:
    hit = _INDEX_CACHE.get(id(g))
    if hit is not None and hit[0] is g:
        return hit[1]
    idx = CornerIndex(g)
    if len(_INDEX_CACHE) > 64:
        _INDEX_CACHE.clear()
    _INDEX_CACHE[id(g)] = (g, idx)
    return idx


@dataclass(frozen=True)
class CornerGraph:
    corners: tuple[Corner, ...]
    edges: tuple[tuple[int, int], ...]
    via: tuple[tuple[int, int], ...]  # graph edge shared by each corner-graph edge

    @property
    def n(self) -> int:
        return len(self.corners)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in self.corners]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def via_map(self) -> dict[tuple[int, int], tuple[int, int]]:
        return {e: w for e, w in zip(self.edges, self.via)}

    def shared_edge(self, i: int, j: int) -> tuple[int, int]:
        return self.via_map[(i, j) if i < j else (j, i)]


def corner_graph(g: PolytopeGraph) -> CornerGraph:
    """Graph on corners; two corners are adjacent iff they share a graph edge
    and have different centers."""
    idx = corner_index(g)
    edges: dict[tuple[int, int], tuple[int, int]] = {}
    for e, (left, right) in zip(g.edges, idx.sides):
        for i in left:
            for j in right:
                key = (i, j) if i < j else (j, i)
                edges[key] = e
    keys = sorted(edges)
    return CornerGraph(tuple(idx.corners), tuple(keys), tuple(edges[k] for k in keys))


def canonical_walk(seq: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically least rotation of the walk or of its reversal."""
    seq = tuple(seq)
    rev = seq[::-1]
    best = None
    for s in (seq, rev):
        for i in range(len(s)):
            r = s[i:] + s[:i]
            if best is None or r < best:
                best = r
    return best


def walk_corners(w: Sequence[int]) -> list[tuple[int, int, int]]:
    """Corner triples ``(w[i-1], w[i], w[i+1])`` for every position ``i``."""
    n = len(w)
    return [(w[i - 1], w[i], w[(i + 1) % n]) for i in range(n)]


@dataclass(frozen=True)
class FacoidalSystem:
    walks: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.walks)

    def __iter__(self):
        return iter(self.walks)

    @property
    def cardinality(self) -> int:
        return len(self.walks)

    def to_json(self) -> dict:
        return {"walks": [list(w) for w in self.walks]}

    @classmethod
    def from_walks(cls, walks: Iterable[Sequence[int]]) -> "FacoidalSystem":
        return cls(tuple(sorted(canonical_walk(w) for w in walks)))


# --------------------------------------------------------------------------
# edge pairings
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class EdgePairing:
    """``perms[e][i] = j`` links corner ``sides[e][0][i]`` with ``sides[e][1][j]``."""

    perms: tuple[tuple[int, ...], ...]


def canonical_pairing(g: PolytopeGraph) -> EdgePairing:
    _require_degree(g)
    return EdgePairing(tuple(tuple(range(g.degree - 1)) for _ in g.edges))


def random_pairing(g: PolytopeGraph, rng: random.Random) -> EdgePairing:
    _require_degree(g)
    perms = []
    for _ in g.edges:
        p = list(range(g.degree - 1))
        rng.shuffle(p)
        perms.append(tuple(p))
    return EdgePairing(tuple(perms))


def _check_pairing(g: PolytopeGraph, p: EdgePairing) -> None:
    if len(p.perms) != g.m:
        raise InvalidPairing(f"pairing covers {len(p.perms)} edges, graph has {g.m}")
    target = list(range(g.degree - 1))
    for e, perm in enumerate(p.perms):
        if sorted(perm) != target:
            raise InvalidPairing(f"pairing at edge {g.edges[e]} is not a bijection: {perm}")


def _links(g: PolytopeGraph, p: EdgePairing) -> list[list[int]]:
    """Per corner, the linked corner through endpoint ``a`` and through ``b``."""
    idx = corner_index(g)
    link = [[-1, -1] for _ in idx.corners]
    for e, ((u, v), (left, right), perm) in enumerate(zip(g.edges, idx.sides, p.perms)):
        for i, j in enumerate(perm):
            ci, cj = left[i], right[j]
            # ci is centered at u and reaches v; cj is centered at v and reaches u
            link[ci][0 if idx.corners[ci].a == v else 1] = cj
            link[cj][0 if idx.corners[cj].a == u else 1] = ci
    return link


def _trace_cycles(g: PolytopeGraph, link: list[list[int]]) -> list[list[int]]:
    """Decompose the corner linkage into cycles of corner ids."""
    cs = corner_index(g).corners
    seen = [False] * len(cs)
    cycles = []
    for start in range(len(cs)):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        prev, cur = start, link[start][1]
        while cur != start:
            seen[cur] = True
            cyc.append(cur)
            # leave cur through the endpoint that is not prev's center
            pc = cs[prev].center
            nxt = link[cur][1] if cs[cur].a == pc else link[cur][0]
            prev, cur = cur, nxt
        cycles.append(cyc)
    return cycles


def walks_from_pairing(g: PolytopeGraph, p: EdgePairing) -> FacoidalSystem:
    _require_degree(g)
    _check_pairing(g, p)
    cs = corner_index(g).corners
    cycles = _trace_cycles(g, _links(g, p))
    return FacoidalSystem.from_walks([cs[c].center for c in cyc] for cyc in cycles)


def pairing_from_facoidal(g: PolytopeGraph, fs: FacoidalSystem | Iterable[Sequence[int]]) -> EdgePairing:
    """The unique edge pairing whose walks are ``fs``."""
    idx = corner_index(g)
    walks = fs.walks if isinstance(fs, FacoidalSystem) else list(fs)
    pos = [({c: i for i, c in enumerate(left)}, {c: j for j, c in enumerate(right)}) for left, right in idx.sides]
    perms: list[list[int]] = [[-1] * (g.degree - 1) for _ in g.edges]
    for w in walks:
        l = len(w)
        ids = [idx.id(w[i], w[i - 1], w[(i + 1) % l]) for i in range(l)]
        for i in range(l):
            x, y = w[i], w[(i + 1) % l]
            e = g.edge_id(x, y)
            a, b = (ids[i], ids[(i + 1) % l]) if x < y else (ids[(i + 1) % l], ids[i])
            perms[e][pos[e][0][a]] = pos[e][1][b]
    if any(j < 0 for perm in perms for j in perm):
        raise CornerMissing("walks do not cover every corner")
    return EdgePairing(tuple(tuple(perm) for perm in perms))


# --------------------------------------------------------------------------
# validation
# --------------------------------------------------------------------------


def _check_walk(g: PolytopeGraph, w: Sequence[int]) -> None:
    l = len(w)
    if l < 3:
        raise NotAWalk(f"walk {list(w)} is shorter than 3")
    for i in range(l):
        x, y = w[i], w[(i + 1) % l]
        if not (0 <= x < g.n and 0 <= y < g.n) or not g.has_edge(x, y):
            raise NotAWalk(f"walk {list(w)}: {x}-{y} is not an edge")
        if w[i - 1] == w[(i + 1) % l]:
            raise NotAWalk(f"walk {list(w)} backtracks at position {i}")


def validate_facoidal(g: PolytopeGraph, ws: Iterable[Sequence[int]]) -> FacoidalSystem:
    """Check that ``ws`` is a facoidal system and return it canonicalized."""
    _require_degree(g)
    idx = corner_index(g)
    walks = [tuple(int(x) for x in w) for w in ws]
    seen = [0] * len(idx)
    for w in walks:
        _check_walk(g, w)
        for a, v, b in walk_corners(w):
            c = idx.id(v, a, b)
            if seen[c]:
                raise CornerDuplicated(f"corner {a}-{v}-{b} traversed more than once")
            seen[c] = 1
    missing = [idx.corners[c] for c, s in enumerate(seen) if not s]
    if missing:
        c = missing[0]
        raise CornerMissing(f"{len(missing)} corner(s) not covered, e.g. {c.a}-{c.center}-{c.b}")
    return FacoidalSystem.from_walks(walks)


# --------------------------------------------------------------------------
# 2-factors of the corner graph
# --------------------------------------------------------------------------


def facoidal_to_two_factor(g: PolytopeGraph, fs: FacoidalSystem) -> list[tuple[int, ...]]:
    """Corner-graph cycles (lists of corner ids) matching the walks of ``fs``."""
    idx = corner_index(g)
    return [tuple(idx.id(v, a, b) for a, v, b in walk_corners(w)) for w in fs.walks]


def two_factor_to_facoidal(g: PolytopeGraph, tf: Iterable[Sequence[int]]) -> FacoidalSystem:
    """Read a coherent 2-factor of the corner graph back as a facoidal system.

    Raises IncoherentFactor when some corner is entered and left through the
    same graph edge.
    """
    idx = corner_index(g)
    cs = idx.corners
    cycles = [tuple(c) for c in tf]
    covered = [0] * len(cs)
    for cyc in cycles:
        for c in cyc:
            covered[c] += 1
    if any(k != 1 for k in covered):
        raise InvalidParameter("2-factor must cover every corner exactly once")
    walks = []
    for cyc in cycles:
        l = len(cyc)
        if l < 3:
            raise InvalidParameter(f"cycle {cyc} is too short")
        for i in range(l):
            p, c, q = cs[cyc[i - 1]], cs[cyc[i]], cs[cyc[(i + 1) % l]]
            for other in (p, q):
                if other.center == c.center or c.center not in (other.a, other.b) or other.center not in (c.a, c.b):
                    raise InvalidParameter(f"cycle {cyc}: consecutive corners at position {i} are not adjacent")
            if p.center == q.center:
                raise IncoherentFactor(
                    f"corner {c.a}-{c.center}-{c.b} uses edge {c.center}-{p.center} twice"
                )
        walks.append([cs[c].center for c in cyc])
    return FacoidalSystem.from_walks(walks)


def pairing_from_factor(g: PolytopeGraph, tf: Iterable[Sequence[int]]) -> EdgePairing:
    """Pairing implied by a (possibly incoherent) 2-factor, completed canonically.

    Links are taken edge by edge in cycle order as long as neither corner
    already has a partner on that edge; leftover corners are paired in
    sorted order.
    """
    idx = corner_index(g)
    cs = idx.corners
    pos = [({c: i for i, c in enumerate(left)}, {c: j for j, c in enumerate(right)}) for left, right in idx.sides]
    perms: list[list[int]] = [[-1] * (g.degree - 1) for _ in g.edges]
    used_right: list[set[int]] = [set() for _ in g.edges]
    for cyc in tf:
        l = len(cyc)
        for i in range(l):
            x, y = cyc[i], cyc[(i + 1) % l]
            cx, cy = cs[x], cs[y]
            e = g.edge_id(cx.center, cy.center)
            left, right = (x, y) if cx.center < cy.center else (y, x)
            li, rj = pos[e][0][left], pos[e][1][right]
            if perms[e][li] < 0 and rj not in used_right[e]:
                perms[e][li] = rj
                used_right[e].add(rj)
    for e, perm in enumerate(perms):
        free = iter(j for j in range(g.degree - 1) if j not in used_right[e])
        for i in range(len(perm)):
            if perm[i] < 0:
                perm[i] = next(free)
    return EdgePairing(tuple(tuple(p) for p in perms))


def find_facoidal(g: PolytopeGraph, strategy: str = "pairing", seed: int | None = None) -> FacoidalSystem:
    """Some facoidal system of ``g``.

    ``strategy="pairing"`` uses the canonical pairing (``seed=None``) or a
    seeded random one.  ``strategy="matching"`` computes a 2-factor of the
    corner graph with Tutte's gadget and blossom matching; an incoherent
    factor is repaired through :func:`pairing_from_factor`.
    """
    _require_degree(g)
    if strategy == "pairing":
        p = canonical_pairing(g) if seed is None else random_pairing(g, random.Random(seed))
        return walks_from_pairing(g, p)
    if strategy == "matching":
        from .matching import GenericGraph, two_factor

        cg = corner_graph(g)
        tf = two_factor(GenericGraph(cg.n, cg.edges))
        if tf is None:  # corner graphs are 2(d-1)-regular, so this cannot happen
            return walks_from_pairing(g, canonical_pairing(g))
        try:
            return two_factor_to_facoidal(g, tf)
        except IncoherentFactor:
            return walks_from_pairing(g, pairing_from_factor(g, tf))
    raise InvalidParameter(f"unknown strategy {strategy!r}")


# --------------------------------------------------------------------------
# sinks on walks
# --------------------------------------------------------------------------


def walk_sink_positions(w: Sequence[int], o: Orientation) -> list[int]:
    """Positions ``i`` where both walk edges at ``w[i]`` point to ``w[i]``."""
    l = len(w)
    return [i for i in range(l) if o.head(w[i], w[i - 1]) == w[i] and o.head(w[i], w[(i + 1) % l]) == w[i]]


def walk_source_positions(w: Sequence[int], o: Orientation) -> list[int]:
    l = len(w)
    return [i for i in range(l) if o.head(w[i], w[i - 1]) != w[i] and o.head(w[i], w[(i + 1) % l]) != w[i]]
