"""Primal-dual search for the 2-faces and an abstract objective function.

Primal problem: maximize the number of walks in a facoidal system.
Dual problem: minimize the H2-sum over acyclic orientations.

Every walk of a facoidal system has at least one sink under an acyclic
orientation, and the total number of walk sinks equals the H2-sum, so any
primal value is a lower bound for any dual value.  When the two meet, the
walks are the 2-faces and the orientation is an AOF, and the pair is a
certificate that can be checked from scratch by :func:`verify_certificate`.

Primal moves re-cross two links of one edge pairing, which merges two walks,
splits one, or reverses a segment.  Dual moves relocate one vertex in a
vertex order, so acyclicity never has to be checked.
"""

from __future__ import annotations

import json
import logging
import math
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    DegreeTooSmall,
    DualityViolation,
    GapNotClosed,
    InvalidPermutation,
    NotAcyclic,
    TooLarge,
    WalkError,
)
from .graph import PolytopeGraph
from .orientations import (
    DEFAULT_BUDGET,
    Orientation,
    check_order,
    enumerate_acyclic,
    faces_via_aofs,
    h2_sum,
    kalai_aofs,
    orient_by_order,
    orientation_from_arcs,
    topological_order,
)
from .reconstruct import (
    FaceLattice,
    TwoFaceSet,
    VertexFacetIncidence,
    face_lattice,
    facets_from_twofaces,
    lattice_from_faces,
)
from .walks import (
    EdgePairing,
    FacoidalSystem,
    corner_index,
    find_facoidal,
    pairing_from_facoidal,
    random_pairing,
    validate_facoidal,
    walk_sink_positions,
    walks_from_pairing,
)

log = logging.getLogger(__name__)

__all__ = [
    "SolverConfig",
    "DualityState",
    "Certificate",
    "GapReport",
    "Verdict",
    "Refutation",
    "Reconstruction",
    "solve",
    "verify_certificate",
    "refute_twofaces_claim",
    "refute_aof_claim",
    "reconstruct_full",
    "kalai_reconstruct",
    "exact_min_h2",
    "exact_max_facoidal",
]


@dataclass(frozen=True)
class SolverConfig:
    seed: int = 0
    restarts: int = 16
    budget_iters: int = 100000
    budget_secs: float = 60.0
    exact: bool = False
    threads: int = 1
    enum_budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.restarts < 1 or self.budget_iters < 1 or self.budget_secs <= 0 or self.threads < 1:
            raise ValueError("restarts, budgets and threads must be positive")


@dataclass
class DualityState:
    primal: FacoidalSystem
    dual_order: tuple[int, ...]
    dual: Orientation
    primal_value: int
    dual_value: int
    checks: int = 0
    restarts_used: int = 0
    history: tuple[tuple[int, int], ...] = ()  # best (primal, dual) after each merge

    @property
    def gap(self) -> int:
        return self.dual_value - self.primal_value

    @property
    def closed(self) -> bool:
        return self.gap == 0


@dataclass(frozen=True)
class Certificate:
    walks: tuple[tuple[int, ...], ...]
    vertex_order: tuple[int, ...] | None
    sink_positions: tuple[int, ...]
    h2sum: int
    cardinality: int
    arcs: tuple[tuple[int, int], ...] | None = None
    conditional: bool = True

    def to_json(self) -> dict:
        out = {"walks": [list(w) for w in self.walks]}
        if self.vertex_order is not None:
            out["vertex_order"] = list(self.vertex_order)
        if self.arcs is not None:
            out["orientation"] = [f"{t}>{h}" for t, h in self.arcs]
        out["sink_positions"] = list(self.sink_positions)
        out["h2sum"] = self.h2sum
        out["cardinality"] = self.cardinality
        out["conditional"] = self.conditional
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, data: dict) -> "Certificate":
        order = data.get("vertex_order")
        arcs = data.get("orientation")
        return cls(
            walks=tuple(tuple(int(x) for x in w) for w in data["walks"]),
            vertex_order=None if order is None else tuple(int(x) for x in order),
            sink_positions=tuple(int(x) for x in data.get("sink_positions", ())),
            h2sum=int(data["h2sum"]),
            cardinality=int(data["cardinality"]),
            arcs=None if arcs is None else tuple(tuple(int(x) for x in a.split(">")) for a in arcs),
            conditional=bool(data.get("conditional", True)),
        )


@dataclass(frozen=True)
class GapReport:
    primal_value: int
    dual_value: int
    walks: tuple[tuple[int, ...], ...]
    vertex_order: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "status": "gap",
            "primal_value": self.primal_value,
            "dual_value": self.dual_value,
            "gap": self.dual_value - self.primal_value,
            "walks": [list(w) for w in self.walks],
            "vertex_order": list(self.vertex_order),
            "conditional": True,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True) + "\n"


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    reason: str | None = None
    conditional: bool = True

    def __bool__(self) -> bool:
        return self.accepted


@dataclass(frozen=True)
class Refutation:
    """A strictly better solution of the opposite claim's own problem."""

    kind: str  # "larger-facoidal-system" or "smaller-h2-sum"
    value: int
    walks: FacoidalSystem | None = None
    orientation: Orientation | None = None


@dataclass(frozen=True)
class Reconstruction:
    twofaces: TwoFaceSet
    incidence: VertexFacetIncidence
    lattice: FaceLattice
    certificate: Certificate


# --------------------------------------------------------------------------
# primal local search over edge pairings
# --------------------------------------------------------------------------


class _PrimalSearch:
    """Mutable edge pairing with incremental walk bookkeeping."""

    def __init__(self, g: PolytopeGraph, pairing: EdgePairing):
        idx = corner_index(g)
        self.g = g
        self.cs = idx.corners
        self.sides = idx.sides
        self.perms = [list(p) for p in pairing.perms]
        self.link = [[-1, -1] for _ in self.cs]
        for e, (u, v) in enumerate(g.edges):
            left, right = self.sides[e]
            for i, j in enumerate(self.perms[e]):
                self._connect(left[i], v, right[j], u)
        # edges incident to each corner, as (edge index, is-left-side, slot)
        self.slots: list[list[tuple[int, int, int]]] = [[] for _ in self.cs]
        for e, (left, right) in enumerate(self.sides):
            for i, c in enumerate(left):
                self.slots[c].append((e, 0, i))
            for j, c in enumerate(right):
                self.slots[c].append((e, 1, j))
        self.is_sink = [False] * len(self.cs)
        self.cycle_of = [-1] * len(self.cs)
        self.cycles: dict[int, list[int]] = {}
        self.sinks: dict[int, int] = {}
        self._next_id = 0
        for c in range(len(self.cs)):
            if self.cycle_of[c] < 0:
                self._label(self._trace(c))

    def _connect(self, cu: int, v: int, cv: int, u: int) -> None:
        """Link corner ``cu`` (centered at u, reaching v) with ``cv`` (centered at v, reaching u)."""
        self.link[cu][0 if self.cs[cu].a == v else 1] = cv
        self.link[cv][0 if self.cs[cv].a == u else 1] = cu

    def _trace(self, start: int) -> list[int]:
        cs, link = self.cs, self.link
        cyc = [start]
        prev, cur = start, link[start][1]
        while cur != start:
            cyc.append(cur)
            nxt = link[cur][1] if cs[cur].a == cs[prev].center else link[cur][0]
            prev, cur = cur, nxt
        return cyc

    def _label(self, cyc: list[int]) -> None:
        k = self._next_id
        self._next_id += 1
        for c in cyc:
            self.cycle_of[c] = k
        self.cycles[k] = cyc
        self.sinks[k] = sum(self.is_sink[c] for c in cyc)

    @property
    def value(self) -> int:
        return len(self.cycles)

    def set_orientation(self, o: Orientation | None) -> None:
        if o is None:
            self.is_sink = [False] * len(self.cs)
        else:
            self.is_sink = [o.head(c.center, c.a) == c.center and o.head(c.center, c.b) == c.center for c in self.cs]
        for k, cyc in self.cycles.items():
            self.sinks[k] = sum(self.is_sink[c] for c in cyc)

    def _swap(self, e: int, i: int, j: int) -> None:
        u, v = self.g.edges[e]
        left, right = self.sides[e]
        p = self.perms[e]
        p[i], p[j] = p[j], p[i]
        self._connect(left[i], v, right[p[i]], u)
        self._connect(left[j], v, right[p[j]], u)

    def try_swap(self, e: int, i: int, j: int) -> tuple[int, list[list[int]]]:
        """Apply the swap and return (delta, new cycles); the caller commits or reverts."""
        left = self.sides[e][0]
        a, b = left[i], left[j]
        old = {self.cycle_of[a], self.cycle_of[b]}
        self._swap(e, i, j)
        first = self._trace(a)
        if b in set(first):
            fresh = [first]
        else:
            fresh = [first, self._trace(b)]
        return len(fresh) - len(old), fresh

    def commit(self, e: int, i: int, j: int, fresh: list[list[int]]) -> None:
        left = self.sides[e][0]
        for k in {self.cycle_of[left[i]], self.cycle_of[left[j]]}:
            del self.cycles[k]
            del self.sinks[k]
        for cyc in fresh:
            self._label(cyc)

    def revert(self, e: int, i: int, j: int) -> None:
        self._swap(e, i, j)

    def pairing(self) -> EdgePairing:
        return EdgePairing(tuple(tuple(p) for p in self.perms))

    def system(self) -> FacoidalSystem:
        return FacoidalSystem.from_walks([self.cs[c].center for c in cyc] for cyc in self.cycles.values())


def _primal_search(
    g: PolytopeGraph,
    start: EdgePairing,
    rng: random.Random,
    iters: int,
    target: int | None,
    guide: Orientation | None,
    deadline: float,
    temps: tuple[float, float] = (0.6, 0.1),
) -> tuple[EdgePairing, int]:
    """Annealed pairing swaps; returns the best pairing seen and its walk count.

    Splits and segment reversals are always accepted, merges with probability
    ``exp(-1 / T)`` under a geometric cooling schedule.  With a ``guide``
    orientation, half of the moves start from a walk holding several sinks,
    since only such walks can be split.
    """
    st = _PrimalSearch(g, start)
    st.set_orientation(guide)
    best_val, best = st.value, st.pairing()
    k = g.degree - 1
    if k < 2:
        return best, best_val
    t0, t1 = temps
    ncorners = len(st.cs)
    for it in range(iters):
        if target is not None and best_val >= target:
            break
        if it & 255 == 0 and time.monotonic() > deadline:
            break
        temp = t0 * (t1 / t0) ** (it / iters)
        c = rng.randrange(ncorners)
        if guide is not None and rng.random() < 0.5:
            cyc = st.cycles[st.cycle_of[c]]
            if st.sinks[st.cycle_of[c]] < 2:
                crowded = [key for key, m in st.sinks.items() if m > 1]
                if crowded:
                    cyc = st.cycles[crowded[rng.randrange(len(crowded))]]
            c = cyc[rng.randrange(len(cyc))]
        e, side, slot = st.slots[c][rng.randrange(2)]
        other = rng.randrange(k - 1)
        if other >= slot:
            other += 1
        if side == 0:
            i, j = slot, other
        else:
            perm = st.perms[e]
            i, j = perm.index(slot), perm.index(other)
        delta, fresh = st.try_swap(e, i, j)
        if delta >= 0 or rng.random() < math.exp(delta / temp):
            st.commit(e, i, j, fresh)
            if st.value > best_val:
                best_val, best = st.value, st.pairing()
        else:
            st.revert(e, i, j)
    return best, best_val


# --------------------------------------------------------------------------
# dual local search over vertex orders
# --------------------------------------------------------------------------


def _indegrees(g: PolytopeGraph, rank: Sequence[int]) -> list[int]:
    return [sum(1 for u in g.adjacency[v] if rank[u] > rank[v]) for v in range(g.n)]


def _h2(indeg: Sequence[int]) -> int:
    return sum(k * (k - 1) // 2 for k in indeg)


def _relocate_delta(g: PolytopeGraph, rank: list[int], indeg: list[int], v: int, new_rank: float) -> int:
    """H2 change when ``v`` moves to (fractional) rank ``new_rank``."""
    changes: dict[int, int] = {}
    r = rank[v]
    for u in g.adjacency[v]:
        ru = rank[u]
        before = ru > r  # edge points to v
        after = ru > new_rank
        if before != after:
            if after:  # u now above v: edge turns toward v
                changes[v] = changes.get(v, 0) + 1
                changes[u] = changes.get(u, 0) - 1
            else:
                changes[v] = changes.get(v, 0) - 1
                changes[u] = changes.get(u, 0) + 1
    delta = 0
    for x, dk in changes.items():
        k0 = indeg[x]
        k1 = k0 + dk
        delta += k1 * (k1 - 1) // 2 - k0 * (k0 - 1) // 2
    return delta


def _dual_search(
    g: PolytopeGraph,
    start: Sequence[int],
    rng: random.Random,
    iters: int,
    target: int | None,
    deadline: float,
) -> tuple[tuple[int, ...], int]:
    order = list(start)
    n = g.n
    rank = [0] * n
    for i, v in enumerate(order):
        rank[v] = i
    indeg = _indegrees(g, rank)
    value = _h2(indeg)
    best_val, best = value, tuple(order)
    tabu = [-1] * n
    sideways = 0
    max_sideways = max(50, 4 * n)
    for it in range(iters):
        if target is not None and best_val <= target:
            break
        if it & 255 == 0 and time.monotonic() > deadline:
            break
        v = rng.randrange(n)
        if rng.random() < 0.5:
            # jump just past a neighbor, the only places where the orientation changes
            u = g.adjacency[v][rng.randrange(g.degree)] if g.degree else v
            new_rank = rank[u] + (0.5 if rank[u] > rank[v] else -0.5)
        else:
            new_rank = rng.randrange(n) + rng.choice((-0.5, 0.5))
        delta = _relocate_delta(g, rank, indeg, v, new_rank)
        if delta < 0 or (delta == 0 and sideways < max_sideways and tabu[v] < it):
            order.remove(v)
            pos = sum(1 for x in order if rank[x] < new_rank)
            order.insert(pos, v)
            for i, x in enumerate(order):
                rank[x] = i
            indeg = _indegrees(g, rank)
            value += delta
            sideways = 0 if delta < 0 else sideways + 1
            if delta == 0:
                tabu[v] = it + n
            if value < best_val:
                best_val, best = value, tuple(order)
    return best, best_val


# --------------------------------------------------------------------------
# exact fallbacks
# --------------------------------------------------------------------------


def exact_min_h2(g: PolytopeGraph, budget: int = DEFAULT_BUDGET) -> tuple[tuple[int, ...], int]:
    """Minimum H2-sum over all acyclic orientations; returns (vertex order, value)."""
    best = None
    for o in enumerate_acyclic(g, "edges", budget):
        val = h2_sum(o)
        if best is None or val < best[1]:
            best = (o, val)
    o, val = best
    order = topological_order(o)
    return tuple(order), val


def exact_max_facoidal(
    g: PolytopeGraph, upper: int | None = None, budget: int = DEFAULT_BUDGET
) -> tuple[FacoidalSystem, int]:
    """Branch and bound over edge pairings for the maximum number of walks.

    ``upper`` (a dual value) stops the search as soon as it is reached.
    A closed smooth walk has at least girth-many corners, so a partial
    pairing can close at most one more walk per open chain of that length
    plus one per girth-many corners pooled from the shorter chains.
    """
    import itertools

    if g.degree < 2:
        raise DegreeTooSmall("walks need degree >= 2")
    idx = corner_index(g)
    nc = len(idx.corners)
    girth = _girth(g)
    rank = _bfs_rank(g)
    order_edges = sorted(range(g.m), key=lambda e: (rank[g.edges[e][0]], rank[g.edges[e][1]]))
    perms_all = list(itertools.permutations(range(g.degree - 1)))
    parent = list(range(nc))
    size = [1] * nc
    # open chains of >= girth corners, and total corners in shorter open chains
    counts = [0, nc] if girth > 1 else [nc, 0]

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def drop(r: int) -> None:
        if size[r] >= girth:
            counts[0] -= 1
        else:
            counts[1] -= size[r]

    def add(r: int) -> None:
        if size[r] >= girth:
            counts[0] += 1
        else:
            counts[1] += size[r]

    best_val = -1
    best_perms: list[tuple[int, ...]] | None = None
    chosen: list[tuple[int, ...]] = [()] * g.m
    states = 0

    def rec(k: int, closed: int) -> bool:
        nonlocal best_val, best_perms, states
        states += 1
        if states > budget:
            raise TooLarge(f"exact primal search exceeded {budget} states")
        if k == len(order_edges):
            if closed > best_val:
                best_val, best_perms = closed, list(chosen)
            return upper is not None and best_val >= upper
        if closed + counts[0] + counts[1] // girth <= best_val:
            return False
        e = order_edges[k]
        left, right = idx.sides[e]
        for perm in perms_all:
            undo = []
            c_closed = closed
            for i, j in enumerate(perm):
                a, b = find(left[i]), find(right[j])
                if a == b:
                    drop(a)
                    undo.append((a, None))
                    c_closed += 1
                else:
                    if size[a] > size[b]:
                        a, b = b, a
                    drop(a)
                    drop(b)
                    parent[a] = b
                    size[b] += size[a]
                    add(b)
                    undo.append((a, b))
            chosen[e] = perm
            stop = rec(k + 1, c_closed)
            for a, b in reversed(undo):
                if b is None:
                    add(a)
                else:
                    drop(b)
                    size[b] -= size[a]
                    parent[a] = a
                    add(a)
                    add(b)
            if stop:
                return True
        return False

    rec(0, 0)
    fs = walks_from_pairing(g, EdgePairing(tuple(best_perms)))
    return fs, best_val


def _girth(g: PolytopeGraph) -> int:
    best = g.n + 1
    for s in range(g.n):
        dist = [-1] * g.n
        par = [-1] * g.n
        dist[s] = 0
        queue = [s]
        for v in queue:
            for u in g.adjacency[v]:
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    par[u] = v
                    queue.append(u)
                elif par[v] != u:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


_BFS_CACHE: dict[int, tuple[PolytopeGraph, list[int]]] = {}


def _bfs_rank(g: PolytopeGraph) -> list[int]:
    hit = _BFS_CACHE.get(id(g))
    if hit is not None and hit[0] is g:
        return hit[1]
    rank = [-1] * g.n
    rank[0] = 0
    queue = [0]
    for v in queue:
        for u in g.adjacency[v]:
            if rank[u] < 0:
                rank[u] = len(queue)
                queue.append(u)
    _BFS_CACHE[id(g)] = (g, rank)
    return rank


# --------------------------------------------------------------------------
# driver
# --------------------------------------------------------------------------


@dataclass
class _RestartResult:
    pairing: EdgePairing
    primal_value: int
    order: tuple[int, ...]
    dual_value: int
    checks: int


def _run_restart(g: PolytopeGraph, config: SolverConfig, i: int, deadline: float) -> _RestartResult:
    """Dual search, then dual-guided primal annealing, then one more dual pass."""
    rng = random.Random(config.seed + i)
    if i == 0:
        pairing = pairing_from_facoidal(g, find_facoidal(g))
    else:
        pairing = random_pairing(g, rng)
    order = list(range(g.n))
    rng.shuffle(order)
    primal = len(walks_from_pairing(g, pairing))
    order_t, dual = _dual_search(g, order, rng, config.budget_iters, primal, deadline)
    _check_weak_duality(primal, dual)
    checks = 1
    if primal < dual:
        guide = orient_by_order(g, order_t)
        pairing, primal = _primal_search(g, pairing, rng, config.budget_iters, dual, guide, deadline)
        _check_weak_duality(primal, dual)
        checks += 1
    if primal < dual:
        order_t, dual = _dual_search(g, order_t, rng, config.budget_iters, primal, deadline)
        _check_weak_duality(primal, dual)
        checks += 1
    return _RestartResult(pairing, primal, order_t, dual, checks)


def _check_weak_duality(primal: int, dual: int) -> None:
    if primal > dual:
        raise DualityViolation(f"facoidal system of {primal} walks exceeds H2-sum {dual}")


def solve(g: PolytopeGraph, config: SolverConfig | None = None) -> tuple[DualityState, Certificate | GapReport]:
    """Search both problems until their values meet or the budgets run out.

    Restarts use seeds ``seed, seed + 1, ...``.  Results are merged in
    restart order and the run stops after the first restart that closes the
    gap, so the outcome does not depend on ``threads``.
    """
    config = config or SolverConfig()
    if g.degree < 2:
        raise DegreeTooSmall(f"solver needs degree >= 2, graph has degree {g.degree}")
    deadline = time.monotonic() + config.budget_secs
    best_p: _RestartResult | None = None
    best_d: _RestartResult | None = None
    checks = 0
    used = 0
    history = []
    batch = config.threads
    pool = ThreadPoolExecutor(config.threads) if config.threads > 1 else None
    try:
        i = 0
        while i < config.restarts:
            ids = range(i, min(i + batch, config.restarts))
            if pool is not None:
                results = list(pool.map(lambda k: _run_restart(g, config, k, deadline), ids))
            else:
                results = [_run_restart(g, config, k, deadline) for k in ids]
            for res in results:
                used += 1
                checks += res.checks
                if best_p is None or res.primal_value > best_p.primal_value:
                    best_p = res
                if best_d is None or res.dual_value < best_d.dual_value:
                    best_d = res
                _check_weak_duality(best_p.primal_value, best_d.dual_value)
                checks += 1
                history.append((best_p.primal_value, best_d.dual_value))
                if best_p.primal_value == best_d.dual_value:
                    break
            i += batch
            if best_p.primal_value == best_d.dual_value or time.monotonic() > deadline:
                break
    finally:
        if pool is not None:
            pool.shutdown()

    pairing, primal = best_p.pairing, best_p.primal_value
    order, dual = best_d.order, best_d.dual_value
    if primal < dual and config.exact:
        try:
            order, dual = min((order, dual), exact_min_h2(g, config.enum_budget), key=lambda t: t[1])
            _check_weak_duality(primal, dual)
            checks += 1
            if primal < dual:
                fs, val = exact_max_facoidal(g, dual, config.enum_budget)
                if val > primal:
                    pairing, primal = pairing_from_facoidal(g, fs), val
                _check_weak_duality(primal, dual)
                checks += 1
        except TooLarge as exc:
            log.info("exact fallback skipped: %s", exc)

    system = walks_from_pairing(g, pairing)
    orientation = orient_by_order(g, order)
    history.append((primal, dual))
    state = DualityState(system, tuple(order), orientation, primal, dual, checks, used, tuple(history))
    if state.closed:
        return state, _certificate(system, tuple(order), orientation)
    return state, GapReport(primal, dual, system.walks, tuple(order))


def _certificate(system: FacoidalSystem, order: tuple[int, ...], o: Orientation) -> Certificate:
    sinks = tuple(walk_sink_positions(w, o)[0] for w in system.walks)
    return Certificate(system.walks, order, sinks, h2_sum(o), len(system))


# --------------------------------------------------------------------------
# certificates and refutations
# --------------------------------------------------------------------------


def verify_certificate(g: PolytopeGraph, cert: Certificate) -> Verdict:
    """Re-check a certificate from scratch.

    Acceptance proves, provided ``g`` is the graph of a simple polytope,
    that the walks are its 2-faces and the orientation is an AOF.
    """
    try:
        if cert.arcs is not None:
            o = orientation_from_arcs(g, cert.arcs)
        elif cert.vertex_order is not None:
            check_order(g, cert.vertex_order)
            o = orient_by_order(g, cert.vertex_order)
        else:
            return Verdict(False, "NoOrientation")
    except InvalidPermutation as exc:
        return Verdict(False, f"InvalidOrder: {exc}")
    except ValueError as exc:
        return Verdict(False, f"InvalidOrientation: {exc}")
    if not o.acyclic:
        return Verdict(False, "NotAcyclic")
    try:
        fs = validate_facoidal(g, cert.walks)
    except WalkError as exc:
        return Verdict(False, f"{type(exc).__name__}: {exc}")
    except DegreeTooSmall as exc:
        return Verdict(False, f"DegreeTooSmall: {exc}")
    for w in fs.walks:
        k = len(walk_sink_positions(w, o))
        if k != 1:
            return Verdict(False, f"TwoSinks: walk {list(w)} has {k} sinks")
    value = h2_sum(o)
    if len(fs) != value:
        return Verdict(False, f"ValueMismatch: {len(fs)} walks vs H2-sum {value}")
    if cert.h2sum != value or cert.cardinality != len(fs):
        return Verdict(False, "ValueMismatch: stated values differ from recomputed ones")
    if cert.sink_positions and len(cert.sink_positions) == len(cert.walks):
        for w, pos in zip(cert.walks, cert.sink_positions):
            if walk_sink_positions(w, o) != [pos]:
                return Verdict(False, f"SinkPositionMismatch: walk {list(w)}")
    return Verdict(True)


def refute_twofaces_claim(g: PolytopeGraph, claimed, found: DualityState) -> Refutation | None:
    """A facoidal system larger than ``claimed`` if the search found one, else None."""
    fs = validate_facoidal(g, claimed.walks if isinstance(claimed, FacoidalSystem) else claimed)
    if found.primal_value > len(fs):
        return Refutation("larger-facoidal-system", found.primal_value, walks=found.primal)
    return None


def refute_aof_claim(g: PolytopeGraph, claimed: Orientation, found: DualityState) -> Refutation | None:
    """An acyclic orientation of smaller H2-sum than ``claimed`` if known, else None."""
    if not claimed.acyclic:
        raise NotAcyclic("claimed orientation has a directed cycle")
    if found.dual_value < h2_sum(claimed):
        return Refutation("smaller-h2-sum", found.dual_value, orientation=found.dual)
    return None


def reconstruct_full(g: PolytopeGraph, config: SolverConfig | None = None) -> Reconstruction:
    state, result = solve(g, config)
    if not isinstance(result, Certificate):
        raise GapNotClosed(f"best facoidal system has {state.primal_value} walks, best H2-sum is {state.dual_value}")
    twofaces = TwoFaceSet(g, state.primal)
    vfi = facets_from_twofaces(g, twofaces)
    return Reconstruction(twofaces, vfi, face_lattice(g, vfi), result)


def kalai_reconstruct(g: PolytopeGraph, mode: str = "edges", budget: int = DEFAULT_BUDGET) -> FaceLattice:
    _, aofs = kalai_aofs(g, mode, budget)
    return lattice_from_faces(g, faces_via_aofs(g, aofs))
