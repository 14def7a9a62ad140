"""Maximum-cardinality matching in general graphs and 2-factors via Tutte's gadget.

The matcher is Edmonds' blossom algorithm in its O(V^3) form: one
breadth-first search per exposed vertex, with odd cycles contracted by
relabelling their vertices to a common base.  Nodes and edges are scanned in
index order, so the same input always gives the same matching.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .errors import DegreeTooSmall, InvalidParameter

__all__ = [
    "GenericGraph",
    "TutteGadget",
    "max_matching",
    "build_tutte_gadget",
    "two_factor",
    "cycles_of",
]


@dataclass(frozen=True)
class GenericGraph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        canon = []
        seen = set()
        for e in self.edges:
            u, v = int(e[0]), int(e[1])
            if u == v or not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidParameter(f"bad edge ({u}, {v})")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise InvalidParameter(f"parallel edge {key}")
            seen.add(key)
            canon.append(key)
        object.__setattr__(self, "edges", tuple(canon))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def to_text(self) -> str:
        """Debug dump in the ``"n m"`` / ``"u v"`` graph text format."""
        return "\n".join([f"{self.n} {len(self.edges)}"] + [f"{u} {v}" for u, v in sorted(self.edges)]) + "\n"


def max_matching(g: GenericGraph) -> list[tuple[int, int]]:
    """Maximum-cardinality matching as a sorted list of pairs ``(u, v)``, ``u < v``."""
    n = g.n
    adj = g.adjacency
    match = [-1] * n

    # greedy start; the blossom search only has to fix what greedy missed
    for u, v in g.edges:
        if match[u] < 0 and match[v] < 0:
            match[u], match[v] = v, u

    for root in range(n):
        if match[root] >= 0:
            continue
        end, parent = _find_augmenting_path(adj, match, root)
        v = end
        while v >= 0:
            pv = parent[v]
            ppv = match[pv]
            match[v], match[pv] = pv, v
            v = ppv
    return sorted((v, match[v]) for v in range(n) if match[v] > v)


def _find_augmenting_path(adj, match: list[int], root: int) -> tuple[int, list[int]]:
    n = len(adj)
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        on_path = [False] * n
        while True:
            a = base[a]
            on_path[a] = True
            if match[a] < 0:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if on_path[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] >= 0 and parent[match[to]] >= 0):
                # odd cycle: contract the blossom onto its base
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] < 0:
                parent[to] = v
                if match[to] < 0:
                    return to, parent
                used[match[to]] = True
                queue.append(match[to])
    return -1, parent


@dataclass(frozen=True)
class TutteGadget:
    """Node bookkeeping for the 2-factor gadget of a graph.

    ``outer[(v, e)]`` is the node standing for edge ``e`` at vertex ``v``;
    ``inner[v]`` lists the ``deg(v) - 2`` absorber nodes of ``v``;
    ``edge_of[(x, y)]`` maps an outer-outer gadget edge back to edge index ``e``.
    """

    outer: dict
    inner: tuple[tuple[int, ...], ...]
    edge_of: dict
    n: int


def build_tutte_gadget(g: GenericGraph) -> tuple[TutteGadget, GenericGraph]:
    """Gadget whose perfect matchings correspond to 2-factors of ``g``.

    Vertices of degree 2 get no absorber nodes, so both of their edges are
    forced, which is exactly the 2-factor condition there.
    """
    adj = g.adjacency
    if any(len(a) < 2 for a in adj):
        raise DegreeTooSmall("every vertex needs degree >= 2 for a 2-factor")
    eid = {e: i for i, e in enumerate(g.edges)}
    outer: dict[tuple[int, int], int] = {}
    inner: list[tuple[int, ...]] = []
    edges: list[tuple[int, int]] = []
    node = 0
    for v in range(g.n):
        outs = []
        for u in adj[v]:
            outer[(v, eid[(v, u) if v < u else (u, v)])] = node
            outs.append(node)
            node += 1
        ins = tuple(range(node, node + len(adj[v]) - 2))
        node += len(ins)
        inner.append(ins)
        edges += [(o, i) for i in ins for o in outs]
    edge_of = {}
    for i, (u, v) in enumerate(g.edges):
        x, y = outer[(u, i)], outer[(v, i)]
        edges.append((x, y))
        edge_of[(x, y) if x < y else (y, x)] = i
    gadget = TutteGadget(outer, tuple(inner), edge_of, node)
    return gadget, GenericGraph(node, tuple(edges))


def cycles_of(n: int, chosen: list[tuple[int, int]]) -> list[tuple[int, ...]]:
    """Split a 2-regular spanning edge set into cycles.

    Each cycle starts at its smallest node and continues toward the smaller
    of that node's two neighbors; cycles are sorted.
    """
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in chosen:
        nbrs[u].append(v)
        nbrs[v].append(u)
    if any(len(a) != 2 for a in nbrs):
        raise InvalidParameter("edge set is not 2-regular and spanning")
    seen = [False] * n
    cycles = []
    for s in range(n):
        if seen[s]:
            continue
        cyc = [s]
        seen[s] = True
        prev, cur = s, min(nbrs[s])
        while cur != s:
            seen[cur] = True
            cyc.append(cur)
            a, b = nbrs[cur]
            prev, cur = cur, (b if a == prev else a)
        cycles.append(tuple(cyc))
    return sorted(cycles)


def two_factor(g: GenericGraph) -> list[tuple[int, ...]] | None:
    """A 2-factor of ``g`` as a list of node cycles, or None if none exists."""
    gadget, gg = build_tutte_gadget(g)
    m = max_matching(gg)
    if 2 * len(m) != gg.n:
        return None
    chosen = [g.edges[gadget.edge_of[pair]] for pair in m if pair in gadget.edge_of]
    return cycles_of(g.n, chosen)
