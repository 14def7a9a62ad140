"""Candidate simple-polytope graphs: validation, generators, subgraph queries and I/O.

Vertices are dense integers ``0..n-1``.  Every set-valued result is returned
sorted ascending, which keeps the certificate files produced downstream
byte-stable.

Polytopality is never checked.  Everything computed from a graph is only
meaningful under the assumption that it really is the graph of a simple
polytope.
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

from .errors import (
    InvalidParameter,
    NotConnected,
    NotRegular,
    NotSimple,
    ParseError,
)

__all__ = [
    "PolytopeGraph",
    "validate",
    "from_edges",
    "generate",
    "simplex",
    "cube",
    "polygon",
    "prism",
    "segment",
    "dodecahedron",
    "product",
    "relabel",
    "induced_subgraph",
    "is_k_regular_connected",
    "is_connected_subset",
    "parse_graph_text",
    "format_graph_text",
    "graph_to_json",
    "graph_from_json",
    "read_graph",
    "write_graph",
]


@dataclass(frozen=True)
class PolytopeGraph:
    """Immutable, validated, connected d-regular simple graph.

    Build instances through :func:`validate` or :func:`from_edges`; the
    constructor itself does not check anything.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    degree: int
    _adjsets: tuple[frozenset, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_adjsets", tuple(frozenset(a) for a in self.adjacency))

    @property
    def d(self) -> int:
        return self.degree

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Canonical edge list: pairs ``(u, v)`` with ``u < v``, sorted."""
        return tuple((u, v) for u in range(self.n) for v in self.adjacency[u] if u < v)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjsets[u]

    def edge_id(self, u: int, v: int) -> int:
        return self.edge_index[(u, v) if u < v else (v, u)]

    def vertices(self) -> range:
        return range(self.n)


def from_edges(n: int, edges: Iterable[Sequence[int]]) -> PolytopeGraph:
    """Build and validate a graph from ``n`` and an undirected edge list."""
    if n < 1:
        raise InvalidParameter(f"graph needs at least one vertex, got n={n}")
    adj: list[list[int]] = [[] for _ in range(n)]
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidParameter(f"edge ({u}, {v}) out of range for n={n}")
        adj[u].append(v)
        adj[v].append(u)
    return validate(adj)


def validate(adjacency: Sequence[Iterable[int]]) -> PolytopeGraph:
    """Check raw adjacency lists and return a :class:`PolytopeGraph`.

    Raises NotSimple for loops, repeated neighbors or asymmetric lists,
    NotRegular when degrees differ, and NotConnected.
    """
    lists = [list(map(int, a)) for a in adjacency]
    n = len(lists)
    if n < 1:
        raise InvalidParameter("graph needs at least one vertex")
    sets = []
    for v, nbrs in enumerate(lists):
        s = set(nbrs)
        if v in s:
            raise NotSimple(f"loop at vertex {v}")
        if len(s) != len(nbrs):
            raise NotSimple(f"parallel edge at vertex {v}")
        if any(not 0 <= u < n for u in s):
            raise InvalidParameter(f"neighbor of {v} out of range")
        sets.append(s)
    for v, s in enumerate(sets):
        for u in s:
            if v not in sets[u]:
                raise NotSimple(f"asymmetric adjacency between {v} and {u}")
    degrees = {len(s) for s in sets}
    if len(degrees) != 1:
        raise NotRegular(f"vertex degrees differ: {sorted(degrees)}")
    if not is_connected_subset(sets, range(n)):
        raise NotConnected("graph is not connected")
    return PolytopeGraph(n, tuple(tuple(sorted(s)) for s in sets), degrees.pop())


# --------------------------------------------------------------------------
# generators
# --------------------------------------------------------------------------


def simplex(d: int) -> PolytopeGraph:
    """Graph of the d-simplex: the complete graph on d+1 vertices."""
    if d < 1:
        raise InvalidParameter(f"simplex dimension must be >= 1, got {d}")
    return from_edges(d + 1, itertools.combinations(range(d + 1), 2))


def segment() -> PolytopeGraph:
    return simplex(1)


def cube(d: int) -> PolytopeGraph:
    """Graph of the d-cube. Vertex ``i`` is the 0/1 vector of the bits of ``i``."""
    if d < 1:
        raise InvalidParameter(f"cube dimension must be >= 1, got {d}")
    n = 1 << d
    return from_edges(n, ((v, v ^ (1 << k)) for v in range(n) for k in range(d) if v < v ^ (1 << k)))


def polygon(m: int) -> PolytopeGraph:
    if m < 3:
        raise InvalidParameter(f"polygon needs m >= 3, got {m}")
    return from_edges(m, ((i, (i + 1) % m) for i in range(m)))


def prism(m: int) -> PolytopeGraph:
    """Prism over an m-gon; vertex ``i`` on the bottom, ``m + i`` on top."""
    if m < 3:
        raise InvalidParameter(f"prism needs m >= 3, got {m}")
    return product(segment(), polygon(m))


_DODECAHEDRON_EDGES = (
    (0, 1), (0, 10), (0, 19), (1, 2), (1, 8), (2, 3), (2, 6), (3, 4), (3, 19),
    (4, 5), (4, 17), (5, 6), (5, 15), (6, 7), (7, 8), (7, 14), (8, 9), (9, 10),
    (9, 13), (10, 11), (11, 12), (11, 18), (12, 13), (12, 16), (13, 14),
    (14, 15), (15, 16), (16, 17), (17, 18), (18, 19),
)


def dodecahedron() -> PolytopeGraph:
    return from_edges(20, _DODECAHEDRON_EDGES)


def product(g1: PolytopeGraph, g2: PolytopeGraph) -> PolytopeGraph:
    """Cartesian product graph; vertex ``(a, b)`` gets label ``a * g2.n + b``."""
    n2 = g2.n
    edges = [(a * n2 + b, a * n2 + c) for a in range(g1.n) for (b, c) in g2.edges]
    edges += [(a * n2 + b, c * n2 + b) for (a, c) in g1.edges for b in range(n2)]
    return from_edges(g1.n * n2, edges)


def relabel(g: PolytopeGraph, perm: Sequence[int]) -> PolytopeGraph:
    """Isomorphic copy in which vertex ``v`` becomes ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise InvalidParameter("relabelling must be a permutation")
    return from_edges(g.n, ((perm[u], perm[v]) for u, v in g.edges))


_GENERATORS = {
    "simplex": (simplex, 1),
    "cube": (cube, 1),
    "polygon": (polygon, 1),
    "prism": (prism, 1),
    "segment": (segment, 0),
    "dodecahedron": (dodecahedron, 0),
}


def generate(kind: str, *params) -> PolytopeGraph:
    """Dispatch on a generator name.

    ``generate("cube", 3)``, ``generate("product", g1, g2)``.  For
    ``product`` the parameters may also be ``(kind, *params)`` tuples.
    """
    if kind == "product":
        if len(params) != 2:
            raise InvalidParameter("product takes exactly two factors")
        factors = [p if isinstance(p, PolytopeGraph) else generate(*p) for p in params]
        return product(*factors)
    try:
        fn, arity = _GENERATORS[kind]
    except KeyError:
        raise InvalidParameter(f"unknown generator {kind!r}") from None
    if len(params) != arity:
        raise InvalidParameter(f"{kind} takes {arity} parameter(s), got {len(params)}")
    return fn(*(int(p) for p in params))


# --------------------------------------------------------------------------
# subgraph queries
# --------------------------------------------------------------------------


def induced_subgraph(g: PolytopeGraph, s: Iterable[int]) -> dict[int, tuple[int, ...]]:
    """Adjacency of the subgraph induced by ``s`` as ``{v: sorted neighbors}``."""
    keep = set(s)
    return {v: tuple(u for u in g.adjacency[v] if u in keep) for v in sorted(keep)}


def is_connected_subset(adj, s: Iterable[int]) -> bool:
    """True iff ``s`` is nonempty and induces a connected subgraph of ``adj``."""
    keep = set(s)
    if not keep:
        return False
    start = next(iter(keep))
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if u in keep and u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == len(keep)


def is_k_regular_connected(g: PolytopeGraph, s: Iterable[int], k: int) -> bool:
    keep = set(s)
    if not keep:
        return False
    for v in keep:
        if sum(1 for u in g.adjacency[v] if u in keep) != k:
            return False
    return is_connected_subset(g.adjacency, keep)


def induced_regularity(g: PolytopeGraph, s: Iterable[int]) -> int | None:
    """Common degree of the subgraph induced by ``s``, or None if irregular/disconnected."""
    keep = set(s)
    if not keep:
        return None
    degs = {sum(1 for u in g.adjacency[v] if u in keep) for v in keep}
    if len(degs) != 1 or not is_connected_subset(g.adjacency, keep):
        return None
    return degs.pop()


# --------------------------------------------------------------------------
# I/O
# --------------------------------------------------------------------------


def format_graph_text(g: PolytopeGraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_graph_text(text: str) -> PolytopeGraph:
    """Parse the ``"n m"`` header + ``"u v"`` lines format; ``#`` starts a comment."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"line {lineno}: expected two integers, got {raw!r}") from None
    if not rows:
        raise ParseError("empty graph file")
    (n, m), edges = rows[0], rows[1:]
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}")
    return from_edges(n, edges)


def graph_to_json(g: PolytopeGraph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def graph_from_json(data: dict) -> PolytopeGraph:
    try:
        return from_edges(int(data["n"]), data["edges"])
    except (KeyError, TypeError, IndexError) as exc:
        raise ParseError(f"malformed graph JSON: {exc}") from None


def read_graph(path: str | Path) -> PolytopeGraph:
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(str(exc)) from None
        return graph_from_json(data)
    return parse_graph_text(text)


def write_graph(g: PolytopeGraph, path: str | Path, fmt: str = "text") -> None:
    if fmt == "json":
        Path(path).write_text(json.dumps(graph_to_json(g)) + "\n")
    else:
        Path(path).write_text(format_graph_text(g))
