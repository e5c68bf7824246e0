"""Block-graph recognition and minimal obstructions (diamonds and holes)."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .exceptions import InputError
from .graph import Graph, connected_components, raw_blocks

__all__ = [
    "Diamond",
    "Hole",
    "Obstruction",
    "is_block_graph",
    "is_block_graph_on",
    "find_obstruction",
    "has_obstruction_through",
    "obstruction_from_apath",
    "is_valid_obstruction",
    "classify_minimal",
]


@dataclass(frozen=True)
class Diamond:
    """Four vertices ``a, b`` (degree 3) and ``c, d`` (degree 2) with every
    pair adjacent except ``cd``."""

    a: int
    b: int
    c: int
    d: int

    @property
    def vertices(self) -> frozenset:
        return frozenset((self.a, self.b, self.c, self.d))

    def is_valid(self, G: Graph) -> bool:
        a, b, c, d = self.a, self.b, self.c, self.d
        if len(self.vertices) != 4 or not all(x in G for x in self.vertices):
            return False
        return (
            G.has_edge(a, b)
            and G.has_edge(a, c)
            and G.has_edge(a, d)
            and G.has_edge(b, c)
            and G.has_edge(b, d)
            and not G.has_edge(c, d)
        )


@dataclass(frozen=True)
class Hole:
    """An induced cycle of length at least four, listed in cyclic order."""

    cycle: tuple[int, ...]

    @property
    def vertices(self) -> frozenset:
        return frozenset(self.cycle)

    def __len__(self) -> int:
        return len(self.cycle)

    def is_valid(self, G: Graph) -> bool:
        cyc = self.cycle
        L = len(cyc)
        if L < 4 or len(set(cyc)) != L or not all(x in G for x in cyc):
            return False
        for i in range(L):
            for j in range(i + 1, L):
                consecutive = j == i + 1 or (i == 0 and j == L - 1)
                if G.has_edge(cyc[i], cyc[j]) != consecutive:
                    return False
        return True


Obstruction = Union[Diamond, Hole]


def is_valid_obstruction(G: Graph, obs: Obstruction) -> bool:
    return obs.is_valid(G)


def _normalize_diamond(a, b, c, d) -> Diamond:
    a, b = sorted((a, b))
    c, d = sorted((c, d))
    return Diamond(a, b, c, d)


def _normalize_cycle(cycle) -> Hole:
    cyc = list(cycle)
    i = cyc.index(min(cyc))
    cyc = cyc[i:] + cyc[:i]
    if cyc[-1] < cyc[1]:
        cyc = [cyc[0]] + cyc[1:][::-1]
    return Hole(tuple(cyc))


def is_block_graph_on(adj, vertices=None) -> bool:
    """Block-graph test for the subgraph of ``adj`` induced by ``vertices``."""
    for block, m in raw_blocks(adj, vertices):
        s = len(block)
        if m != s * (s - 1) // 2:
            return False
    return True


def is_block_graph(G: Graph) -> bool:
    """True iff every block of ``G`` induces a complete graph."""
    return is_block_graph_on(G.adjacency)


def classify_minimal(G: Graph, vertices: Iterable[int]) -> Obstruction:
    """Turn a vertex set inducing a diamond or a hole into an Obstruction."""
    vs = sorted(set(vertices))
    adj = G.adjacency
    deg = {v: len(adj[v] & set(vs)) for v in vs}
    m = sum(deg.values()) // 2
    if len(vs) == 4 and m == 5:
        high = [v for v in vs if deg[v] == 3]
        low = [v for v in vs if deg[v] == 2]
        return _normalize_diamond(*high, *low)
    if len(vs) >= 4 and all(d == 2 for d in deg.values()) and m == len(vs):
        members = set(vs)
        start = vs[0]
        cycle = [start]
        prev, cur = None, start
        while True:
            nxt = [w for w in adj[cur] if w in members and w != prev]
            step = min(nxt)
            if step == start:
                break
            cycle.append(step)
            prev, cur = cur, step
            if len(cycle) > len(vs):
                break
        if len(cycle) == len(vs):
            return _normalize_cycle(cycle)
    raise InputError(f"vertex set {vs} induces neither a diamond nor a hole")


def find_obstruction(G: Graph) -> Optional[Obstruction]:
    """Some minimal obstruction of ``G``, or ``None`` if ``G`` is a block graph.

    Takes a non-clique block and greedily drops vertices while what is left is
    still not a block graph.  Being a block graph is hereditary, so one pass in
    increasing id order already leaves a minimal failing set.
    """
    adj = G.adjacency
    bad = None
    for block, m in sorted(raw_blocks(adj), key=lambda bm: min(bm[0])):
        s = len(block)
        if m != s * (s - 1) // 2:
            bad = block
            break
    if bad is None:
        return None
    keep = set(bad)
    for v in sorted(bad):
        keep.discard(v)
        if is_block_graph_on(adj, keep):
            keep.add(v)
    return classify_minimal(G, keep)


def _has_induced_p3(adj, vertices) -> bool:
    """True iff the subgraph induced by ``vertices`` is not a disjoint union of cliques."""
    for comp in connected_components(adj, vertices):
        s = len(comp)
        if s < 3:
            continue
        if any(len(adj[x] & comp) != s - 1 for x in comp):
            return True
    return False


def has_obstruction_through(G: Graph, v: int) -> bool:
    """Whether some obstruction of ``G`` contains ``v``.

    Three shapes are possible: a diamond with ``v`` of degree three (an
    induced P3 in ``G[N(v)]``), a diamond with ``v`` of degree two (adjacent
    ``p, q`` in ``N(v)`` with a common neighbor outside ``N[v]``), or a hole
    through ``v`` (non-adjacent ``p, q`` in ``N(v)`` joined through
    ``G - N[v]``).  An N(v)-path with adjacent ends alone is not enough: it may
    close a hole that avoids ``v``.
    """
    adj = G.adjacency
    if v not in adj:
        raise InputError(f"unknown vertex {v}")
    nv = adj[v]
    if _has_induced_p3(adj, nv):
        return True
    rest = adj.keys() - nv - {v}
    for comp in connected_components(adj, rest):
        seen = set()
        for x in comp:
            hit = adj[x] & nv
            if len(hit) >= 2:
                return True
            seen |= hit
        # G[N(v)] is a union of cliques, so a non-adjacent pair is a hole
        for p in seen:
            if seen - adj[p] - {p}:
                return True
    return False


def _shortest_path(adj_fn, members, s, t):
    parent = {s: None}
    q = deque([s])
    while q:
        x = q.popleft()
        if x == t:
            break
        for y in sorted(adj_fn(x)):
            if y in members and y not in parent:
                parent[y] = x
                q.append(y)
    if t not in parent:
        return None
    path = [t]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path[::-1]


def obstruction_from_apath(G: Graph, v: int, path) -> Obstruction:
    """An obstruction inside ``G[{v} ∪ V(path)]`` for an N(v)-path ``path`` of
    ``(G - v) - E(G[N(v)])``."""
    adj = G.adjacency
    if v not in adj:
        raise InputError(f"unknown vertex {v}")
    nv = adj[v]
    path = list(path)
    if len(path) < 2 or len(set(path)) != len(path) or v in path:
        raise InputError("not a valid N(v)-path")
    if path[0] not in nv or path[-1] not in nv or any(x in nv for x in path[1:-1]):
        raise InputError("path ends must be the only neighbors of v on it")
    for a, b in zip(path, path[1:]):
        if b not in adj[a] or (a in nv and b in nv):
            raise InputError(f"({a}, {b}) is not an edge of the reduced graph")

    p, q = path[0], path[-1]
    members = set(path)

    def g1(x):
        ns = adj[x]
        return ns - nv if x in nv else ns

    short = _shortest_path(g1, members, p, q)
    if short is None or len(short) < 3:
        raise InputError("not a valid N(v)-path")
    pq = q in adj[p]
    if len(short) == 3:
        x = short[1]
        if pq:
            return _normalize_diamond(p, q, v, x)
        return _normalize_cycle([v, p, x, q])
    if pq:
        return _normalize_cycle(short)
    return _normalize_cycle([v] + short)
