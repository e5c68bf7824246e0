"""Exact FPT solver: branching on the disjoint version plus iterative compression.

The disjoint version gets ``(G, S, k)`` where ``G - S`` and ``G[S]`` are both
block graphs, and looks for at most ``k`` vertices outside ``S`` whose removal
leaves a block graph.  The search branches on small vertex sets that cannot
join ``S`` and on edges joining two components of ``G[S]``.  When neither
exists, a leaf block of ``G - S`` can be bypassed without branching.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .exceptions import InputError, InternalError
from .graph import Graph, connected_components, raw_blocks
from .obstruction import is_block_graph, is_block_graph_on

__all__ = [
    "SearchStats",
    "block_disjoint",
    "bypass",
    "choose_leaf_block",
    "find_violating_triple",
    "find_cross_edge",
    "compress",
    "solve",
]


@dataclass
class SearchStats:
    """Counters collected while searching.

    ``branch_excess`` is the largest value of (branching nodes on a root-to-node
    path) minus (k + l) at the root of that search, where l is the number of
    components of ``G[S]``; ``depth_excess`` does the same for the depth against
    ``n + k + l``.  Both stay non-positive when the search behaves as designed.
    """

    nodes: int = 0
    roots: int = 0
    bypasses: int = 0
    bypass_checks: int = 0
    branch_excess: int = -(10**9)
    depth_excess: int = -(10**9)
    max_branching: int = 0
    max_depth: int = 0


class _Ctx:
    def __init__(self, stats: Optional[SearchStats], check: bool):
        self.stats = stats
        self.check = check
        self.budget = 0
        self.size = 0

    def visit(self, branching: int, depth: int):
        st = self.stats
        if st is None:
            return
        st.nodes += 1
        st.max_branching = max(st.max_branching, branching)
        st.max_depth = max(st.max_depth, depth)
        st.branch_excess = max(st.branch_excess, branching - self.budget)
        st.depth_excess = max(st.depth_excess, depth - self.size)


def find_violating_triple(G: Graph, S) -> Optional[tuple[int, ...]]:
    """Smallest ``T`` (1 to 3 vertices outside ``S``) with ``G[S ∪ T]`` not a
    block graph; sizes are tried in increasing order, ties by id order."""
    adj = G.adjacency
    S = set(S)
    outside = sorted(adj.keys() - S)
    # a vertex of T needs two neighbors in S ∪ T to sit on a cycle there
    in_s = {u: len(adj[u] & S) for u in outside}
    for u in outside:
        if in_s[u] >= 2 and not is_block_graph_on(adj, S | {u}):
            return (u,)
    # T need not be connected (two vertices can close a C4 through S)
    cand2 = [u for u in outside if in_s[u] >= 1]
    for u, v in combinations(cand2, 2):
        if in_s[u] + (v in adj[u]) < 2 or in_s[v] + (v in adj[u]) < 2:
            continue
        if not is_block_graph_on(adj, S | {u, v}):
            return (u, v)
    for tri in combinations(outside, 3):
        if any(in_s[x] + len(adj[x].intersection(tri)) < 2 for x in tri):
            continue
        if not is_block_graph_on(adj, S.union(tri)):
            return tri
    return None


def find_cross_edge(G: Graph, S) -> Optional[tuple[int, int, int, int]]:
    """An edge ``uv`` outside ``S`` with neighbors ``x, y`` in different
    components of ``G[S]``, as ``(u, v, x, y)``.

    A single vertex seeing two components is reported first as ``(u, u, x, y)``;
    the leaf-block bypass is only safe once those are gone too.
    """
    adj = G.adjacency
    S = set(S)
    label = {}
    for i, comp in enumerate(connected_components(adj, S)):
        for x in comp:
            label[x] = i

    def split(around):
        around = sorted(around)
        if around:
            x = around[0]
            for y in around[1:]:
                if label[y] != label[x]:
                    return x, y
        return None

    outside = sorted(adj.keys() - S)
    for u in outside:
        hit = split(adj[u] & S)
        if hit:
            return (u, u) + hit
    for u in outside:
        for v in sorted(adj[u] - S):
            if v < u:
                continue
            hit = split((adj[u] | adj[v]) & S)
            if hit:
                return (u, v) + hit
    return None


def choose_leaf_block(G: Graph, S) -> tuple[frozenset, Optional[int]]:
    """Leaf block ``B`` of ``G - S`` with the smallest minimum id, and its
    cut vertex ``b`` (``None`` when ``B`` is a whole component)."""
    adj = G.adjacency
    rest = adj.keys() - set(S)
    blocks = [b for b, _ in raw_blocks(adj, rest)]
    count: dict[int, int] = {}
    for b in blocks:
        for x in b:
            count[x] = count.get(x, 0) + 1
    best = None
    for b in blocks:
        cuts = [x for x in b if count[x] > 1]
        if len(cuts) <= 1:
            key = min(b)
            if best is None or key < best[0]:
                best = (key, b, cuts[0] if cuts else None)
    if best is None:
        raise InputError("G - S is empty")
    return best[1], best[2]


def _check_bypass(G: Graph, S, B, stats):
    adj = G.adjacency
    S = set(S)
    ns = set()
    for u in B:
        ns |= adj[u] & S
    if ns:
        if not any(ns <= blk for blk, _ in raw_blocks(adj, S)):
            raise InternalError("neighbors of a leaf block in S span several blocks of G[S]")
    if not is_block_graph_on(adj, S | set(B)):
        raise InternalError("G[S ∪ B] is not a block graph for a leaf block B")
    if ns and not any(adj[u] & S == ns for u in B):
        raise InternalError("no vertex of the leaf block sees all of its S-neighbors")
    if stats is not None:
        stats.bypass_checks += 1
    return ns


def bypass(G: Graph, S, B=None, b=None, *, check: bool = True, stats=None) -> Graph:
    """Replace leaf block ``B`` of ``G - S`` by direct edges from its cut
    vertex ``b`` to every S-neighbor of ``B``.

    Meant for instances where neither branching rule applies; with ``check``
    the structural facts that make this safe are verified and a violation
    raises :class:`InternalError`.  When ``B`` is a whole component of
    ``G - S`` it is simply deleted.
    """
    if B is None:
        B, b = choose_leaf_block(G, S)
    B = frozenset(B)
    adj = G.adjacency
    if check:
        if find_violating_triple(G, S) is not None or find_cross_edge(G, S) is not None:
            raise InternalError("bypass called on a reducible instance")
        ns = _check_bypass(G, S, B, stats)
    else:
        ns = set()
        for u in B:
            ns |= adj[u] & set(S)
    if b is None:
        return G.delete(B)
    H = G.delete(B - {b})
    return H.edit_edges(add=[(b, w) for w in ns if w != b])


def _search(G: Graph, S: frozenset, k: int, ctx: _Ctx, branching: int, depth: int):
    ctx.visit(branching, depth)
    adj = G.adjacency
    if is_block_graph(G):
        return frozenset()
    if k <= 0:
        return None
    T = find_violating_triple(G, S)
    if T is not None:
        nb = branching + (len(T) > 1)
        for u in T:
            sol = _search(G.delete([u]), S, k - 1, ctx, nb, depth + 1)
            if sol is not None:
                return sol | {u}
        return None
    cross = find_cross_edge(G, S)
    if cross is not None:
        u, v = cross[0], cross[1]
        nb = branching + 1
        for w in sorted({u, v}):
            sol = _search(G.delete([w]), S, k - 1, ctx, nb, depth + 1)
            if sol is not None:
                return sol | {w}
        return _search(G, S | {u, v}, k, ctx, nb, depth + 1)
    B, b = choose_leaf_block(G, S)
    if ctx.check:
        _check_bypass(G, S, B, ctx.stats)
    if ctx.stats is not None:
        ctx.stats.bypasses += 1
    if b is None:
        H = G.delete(B)
    else:
        ns = set()
        for x in B:
            ns |= adj[x] & S
        H = G.delete(B - {b}).edit_edges(add=[(b, w) for w in ns])
    return _search(H, S, k, ctx, branching, depth + 1)


def block_disjoint(G: Graph, S, k: int, stats: Optional[SearchStats] = None, *, check: bool = True):
    """At most ``k`` vertices of ``V(G) - S`` whose deletion leaves a block
    graph, or ``None``.  ``G - S`` and ``G[S]`` must be block graphs."""
    S = frozenset(S)
    adj = G.adjacency
    if not S <= adj.keys():
        raise InputError("S has vertices outside G")
    if k < 0:
        raise InputError("k must be non-negative")
    if not is_block_graph_on(adj, S):
        raise InputError("G[S] is not a block graph")
    if not is_block_graph_on(adj, adj.keys() - S):
        raise InputError("G - S is not a block graph")
    ctx = _Ctx(stats, check)
    ctx.budget = k + len(connected_components(adj, S))
    ctx.size = len(G) + ctx.budget
    if stats is not None:
        stats.roots += 1
    sol = _search(G, S, k, ctx, 0, 0)
    if sol is not None and (len(sol) > k or sol & S or not is_block_graph(G.delete(sol))):
        raise InternalError("disjoint search returned an invalid solution")
    return sol


def compress(G: Graph, S, k: int, stats: Optional[SearchStats] = None, *, check: bool = True):
    """Given a solution ``S`` of size ``k + 1``, one of size at most ``k`` or ``None``."""
    S = frozenset(S)
    adj = G.adjacency
    for size in range(0, k + 1):
        for I in combinations(sorted(S), size):
            rest = S - set(I)
            if not is_block_graph_on(adj, rest):
                continue
            H = G.delete(I)
            sol = block_disjoint(H, rest, k - size, stats, check=check)
            if sol is not None:
                return frozenset(I) | sol
    return None


def solve(G: Graph, k: int, stats: Optional[SearchStats] = None, *, check: bool = True):
    """A set of at most ``k`` vertices whose deletion makes ``G`` a block
    graph, or ``None`` if there is none."""
    if k < 0:
        raise InputError("k must be non-negative")
    order = sorted(G.vertices)
    S: frozenset = frozenset()
    for i, v in enumerate(order):
        S = S | {v}
        if len(S) <= k:
            continue
        Gi = G.induced(order[: i + 1])
        S = compress(Gi, S, k, stats, check=check)
        if S is None:
            return None
    if len(S) > k or not is_block_graph(G.delete(S)):
        raise InternalError("solver produced an invalid solution")
    return S
