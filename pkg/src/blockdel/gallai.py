"""Disjoint A-paths versus small A-path covers, and the per-vertex probe.

The A-path side follows Gallai's reduction to matching: every vertex outside
``A`` is doubled into two adjacent copies, after which the maximum number of
vertex-disjoint A-paths equals the matching number minus the number of doubled
vertices.  The Gallai-Edmonds decomposition of the same auxiliary graph yields
a set ``U`` such that each component of ``G - U`` keeps few A-vertices, which
is turned into a cover of size at most twice the packing number.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Union

from ._matching import gallai_edmonds_even, maximum_matching
from .exceptions import InputError, InternalError
from .graph import Graph, connected_components
from .obstruction import (
    Diamond,
    Obstruction,
    _has_induced_p3,
    _normalize_diamond,
    has_obstruction_through,
    obstruction_from_apath,
)

__all__ = [
    "APath",
    "Packing",
    "Cover",
    "DisjointObstructions",
    "FlowerAt",
    "Hitter",
    "ProbeOutcome",
    "apath_dichotomy",
    "has_apath",
    "is_apath",
    "p3_packing",
    "probe_vertex",
]


@dataclass(frozen=True)
class APath:
    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class Packing:
    paths: tuple[APath, ...]


@dataclass(frozen=True)
class Cover:
    vertices: frozenset


GallaiOutcome = Union[Packing, Cover]


@dataclass(frozen=True)
class DisjointObstructions:
    obstructions: tuple[Obstruction, ...]


@dataclass(frozen=True)
class FlowerAt:
    v: int
    obstructions: tuple[Obstruction, ...]


@dataclass(frozen=True)
class Hitter:
    S_v: frozenset
    clique_components: int


ProbeOutcome = Union[DisjointObstructions, FlowerAt, Hitter]


def is_apath(G: Graph, A, path) -> bool:
    path = tuple(path)
    if len(path) < 2 or len(set(path)) != len(path):
        return False
    if path[0] not in A or path[-1] not in A or any(x in A for x in path[1:-1]):
        return False
    return all(G.has_edge(a, b) for a, b in zip(path, path[1:]))


def has_apath(G: Graph, A: Iterable[int], removed: Iterable[int] = ()) -> bool:
    """Whether ``G - removed`` still has an A-path."""
    adj = G.adjacency
    gone = set(removed)
    a_set = (set(A) & adj.keys()) - gone
    for a in a_set:
        if adj[a] & a_set:
            return True
    inner = adj.keys() - a_set - gone
    for comp in connected_components(adj, inner):
        hit = set()
        for x in comp:
            hit |= adj[x] & a_set
            if len(hit) >= 2:
                return True
    return False


def _single_separator(G: Graph, members: frozenset, A: set, s: int, t: int):
    """Lowest-id vertex of ``members`` outside ``A`` separating ``s`` from ``t``
    inside ``G[members]``, or None."""
    adj = G.adjacency
    for w in sorted(members - A):
        allowed = members - {w}
        seen = {s}
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in allowed and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if t not in seen:
            return w
    return None


def apath_dichotomy(G: Graph, A: Iterable[int], p: int) -> GallaiOutcome:
    """Either ``p + 1`` vertex-disjoint A-paths or a set of at most ``2p``
    vertices meeting every A-path.

    Packing is returned whenever ``p + 1`` disjoint A-paths exist.
    """
    if p < 0:
        raise InputError("p must be non-negative")
    adj = G.adjacency
    a_set = set(A)
    if not a_set <= adj.keys():
        raise InputError(f"A has unknown vertices {sorted(a_set - adj.keys())}")

    # auxiliary graph: one node per A-vertex, two adjacent copies otherwise
    copies: dict[int, tuple[int, ...]] = {}
    owner: list[int] = []
    for a in sorted(a_set):
        copies[a] = (len(owner),)
        owner.append(a)
    doubled = sorted(adj.keys() - a_set)
    for u in doubled:
        copies[u] = (len(owner), len(owner) + 1)
        owner.extend((u, u))
    nbrs: list[list[int]] = [[] for _ in owner]
    mate0 = [-1] * len(owner)
    for u in doubled:
        i, j = copies[u]
        nbrs[i].append(j)
        nbrs[j].append(i)
        mate0[i], mate0[j] = j, i
    for x, y in G.edges():
        for cx in copies[x]:
            for cy in copies[y]:
                nbrs[cx].append(cy)
                nbrs[cy].append(cx)

    mate = maximum_matching(nbrs, mate0)
    matched = sum(1 for m in mate if m != -1) // 2
    nu = matched - len(doubled)

    if nu >= p + 1:
        paths = []
        for a in sorted(a_set):
            i = copies[a][0]
            if mate[i] == -1:
                continue
            walk = [a]
            cur = mate[i]
            while True:
                u = owner[cur]
                walk.append(u)
                if u in a_set:
                    break
                c1, c2 = copies[u]
                twin = c2 if cur == c1 else c1
                nxt = mate[twin]
                if nxt == -1:
                    walk = None
                    break
                cur = nxt
            if walk is not None and walk[0] < walk[-1]:
                paths.append(APath(tuple(walk)))
        if len(paths) < nu:
            raise InternalError("path extraction lost augmenting components")
        return Packing(tuple(paths[: p + 1]))

    even = gallai_edmonds_even(nbrs, mate)
    tutte = set()
    for d in even:
        for w in nbrs[d]:
            if w not in even:
                tutte.add(w)
    U = {owner[t] for t in tutte}
    for u in U:
        if any(c not in tutte for c in copies[u]):
            raise InternalError("twin copies split by the Gallai-Edmonds decomposition")

    cover = set(U)
    for comp in connected_components(adj, adj.keys() - U):
        in_a = sorted(comp & a_set)
        if len(in_a) < 2:
            continue
        if len(in_a) == 2:
            s, t = in_a
            w = None if G.has_edge(s, t) else _single_separator(G, comp, a_set, s, t)
            cover.add(t if w is None else w)
        else:
            cover.update(in_a[1:])

    if len(cover) > 2 * nu or has_apath(G, a_set, cover):
        raise InternalError("A-path cover failed its post-check")
    return Cover(frozenset(cover))


def p3_packing(G: Graph, W: Iterable[int]) -> list[tuple[int, int, int]]:
    """Greedy maximal family of vertex-disjoint induced P3s in ``G[W]``.

    Triples are scanned in lexicographic id order; each is reported sorted.
    """
    adj = G.adjacency
    free = set(W)
    if not free <= adj.keys():
        raise InputError("W has unknown vertices")
    out = []
    while _has_induced_p3(adj, free):
        for tri in combinations(sorted(free), 3):
            a, b, c = tri
            e = (b in adj[a]) + (c in adj[a]) + (c in adj[b])
            if e == 2:
                out.append(tri)
                free.difference_update(tri)
                break
    return out


def _p3_center(G: Graph, tri) -> tuple[int, int, int]:
    a, b, c = tri
    adj = G.adjacency
    if b in adj[a] and c in adj[a]:
        return a, b, c
    if a in adj[b] and c in adj[b]:
        return b, a, c
    return c, a, b


def probe_vertex(G: Graph, v: int, k: int) -> ProbeOutcome:
    """Find ``k + 1`` disjoint obstructions, ``k + 1`` obstructions meeting
    pairwise exactly in ``v``, or a set ``S_v`` of at most ``7k`` vertices whose
    removal leaves no obstruction through ``v``."""
    if v not in G:
        raise InputError(f"unknown vertex {v}")
    if k < 1:
        raise InputError("k must be at least 1")
    adj = G.adjacency
    nv = adj[v]

    if not has_obstruction_through(G, v):
        return Hitter(frozenset(), len(connected_components(adj, nv)))

    inside = [(a, b) for a in nv for b in adj[a] & nv if a < b]
    g1 = G.delete([v]).edit_edges(remove=inside)
    outcome = apath_dichotomy(g1, nv, 2 * k)

    if isinstance(outcome, Packing):
        found = [obstruction_from_apath(G, v, P.vertices) for P in outcome.paths]
        through = [o for o in found if v in o.vertices]
        if len(through) >= k + 1:
            return FlowerAt(v, tuple(through[: k + 1]))
        avoiding = [o for o in found if v not in o.vertices]
        return DisjointObstructions(tuple(avoiding[: k + 1]))

    X = outcome.vertices
    packed = p3_packing(G, nv - X)
    if len(packed) >= k + 1:
        diamonds = []
        for tri in packed[: k + 1]:
            mid, end1, end2 = _p3_center(G, tri)
            diamonds.append(_normalize_diamond(v, mid, end1, end2))
        return FlowerAt(v, tuple(diamonds))
    S_v = frozenset(X | {x for tri in packed for x in tri})
    return Hitter(S_v, len(connected_components(adj, nv - S_v)))
