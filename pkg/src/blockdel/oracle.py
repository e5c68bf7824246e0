"""Reference answers and instance generators.

The recognizer here deliberately avoids the block decomposition used by the
solver: a graph is a block graph exactly when it is chordal and every edge's
common neighborhood is a clique (no diamond).  Chordality is checked with a
maximum cardinality search.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .exceptions import InputError
from .graph import Graph, build_graph
from .obstruction import is_block_graph

__all__ = [
    "PlantedSpec",
    "is_block_graph_reference",
    "min_deletion_bruteforce",
    "verify",
    "gen_planted",
    "gen_gnp",
    "gen_hub",
]


def _diamond_free(adj, vs) -> bool:
    for u in vs:
        nu = adj[u] & vs
        for v in nu:
            if v < u:
                continue
            common = sorted(nu & adj[v])
            for i, a in enumerate(common):
                if not set(common[i + 1:]) <= adj[a]:
                    return False
    return True


def _chordal(adj, vs) -> bool:
    weight = {v: 0 for v in vs}
    order = []
    pos = {}
    while weight:
        v = max(weight, key=lambda x: (weight[x], -x))
        del weight[v]
        pos[v] = len(order)
        order.append(v)
        for w in adj[v]:
            if w in weight:
                weight[w] += 1
    # reverse of the visit order must be a perfect elimination ordering
    for v in order:
        earlier = [w for w in adj[v] if w in pos and pos[w] < pos[v]]
        if len(earlier) < 2:
            continue
        parent = max(earlier, key=pos.__getitem__)
        if not set(earlier) - {parent} <= adj[parent]:
            return False
    return True


def is_block_graph_reference(G: Graph, removed=()) -> bool:
    adj = G.adjacency
    vs = set(adj) - set(removed)
    return _diamond_free(adj, vs) and _chordal(adj, vs)


def _minimal_failing(G: Graph, removed: set) -> frozenset:
    """A minimal vertex set of ``G - removed`` that is not a block graph."""
    keep = set(G.vertices) - removed
    for v in sorted(keep):
        keep.discard(v)
        if is_block_graph_reference(G, G.vertices - keep):
            keep.add(v)
    return frozenset(keep)


def min_deletion_bruteforce(G: Graph, kmax: int) -> Optional[tuple[int, frozenset]]:
    """Minimum deletion set of size at most ``kmax`` as ``(size, set)``.

    Sets are tried by increasing size and lexicographically within a size, so
    the returned set is the lexicographically least optimum.  Candidates that
    miss an obstruction seen so far are skipped without a test.
    """
    if kmax < 0:
        raise InputError("kmax must be non-negative")
    order = sorted(G.vertices)
    seen: list[frozenset] = []
    for size in range(0, min(kmax, len(order)) + 1):
        for D in combinations(order, size):
            Ds = set(D)
            if any(not (o & Ds) for o in seen):
                continue
            if is_block_graph_reference(G, Ds):
                return size, frozenset(D)
            seen.append(_minimal_failing(G, Ds))
    return None


def verify(G: Graph, S, k: int) -> bool:
    S = set(S)
    return S <= G.vertices and len(S) <= k and is_block_graph(G.delete(S))


@dataclass(frozen=True)
class PlantedSpec:
    n: int
    k: int
    seed: int
    max_block: int = 6
    noise_p: float = 0.5


def gen_planted(spec: PlantedSpec) -> tuple[Graph, frozenset]:
    """Random block graph on ``n - k`` vertices plus ``k`` noisy vertices.

    Returns the graph and the planted set (a solution of size ``k``).  Vertex
    ids are shuffled, so the planted vertices are not the largest ids.
    """
    n, k = spec.n, spec.k
    if n < 0 or k < 0 or k > n:
        raise InputError("need 0 <= k <= n")
    rng = random.Random(spec.seed)
    base = n - k
    edges = []
    placed = 1 if base else 0
    while placed < base:
        size = min(rng.randint(2, spec.max_block), base - placed + 1)
        anchor = rng.randrange(placed)
        members = [anchor] + list(range(placed, placed + size - 1))
        edges += list(combinations(members, 2))
        placed += size - 1
    for x in range(base, n):
        for y in range(x):
            if rng.random() < spec.noise_p:
                edges.append((y, x))
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    G = build_graph(n, [(perm[a], perm[b]) for a, b in edges])
    return G, frozenset(perm[x] for x in range(base, n))


def gen_gnp(n: int, p: float, seed: int) -> Graph:
    if n < 0 or not 0 <= p <= 1:
        raise InputError("need n >= 0 and 0 <= p <= 1")
    rng = random.Random(seed)
    return build_graph(n, [(u, v) for u, v in combinations(range(1, n + 1), 2) if rng.random() < p])


def gen_hub(k: int, seed: int, hitters: Optional[int] = None, components: Optional[int] = None) -> tuple[Graph, int]:
    """A hub vertex with many small block-graph components, each also tied to
    one of a few hitter vertices.  Such graphs make the hub's neighborhood
    split into many cliques, which is the situation the expansion-based rule
    handles.  Returns the graph and the hub id (ids are shuffled).
    """
    if k < 1:
        raise InputError("k must be at least 1")
    rng = random.Random(seed)
    h = hitters if hitters is not None else rng.randint(1, k)
    count = components if components is not None else rng.randint(24 * k, 30 * k)
    hub = 0
    xs = list(range(1, h + 1))
    edges = []
    nxt = h + 1
    for _ in range(count):
        shape = rng.choice(("vertex", "edge", "triangle", "path", "fan"))
        if shape == "vertex":
            comp, inner = [nxt], []
        elif shape in ("edge", "path"):
            size = 2 if shape == "edge" else 3
            comp = list(range(nxt, nxt + size))
            inner = list(zip(comp, comp[1:]))
        elif shape == "triangle":
            comp = list(range(nxt, nxt + 3))
            inner = list(combinations(comp, 2))
        else:
            # two triangles sharing a vertex
            comp = list(range(nxt, nxt + 5))
            a, b, c, d, e = comp
            inner = [(a, b), (a, c), (b, c), (a, d), (a, e), (d, e)]
        nxt += len(comp)
        edges += inner
        # attach to the hub at one vertex, or at a whole triangle when there is one
        if shape == "triangle" and rng.random() < 0.5:
            edges += [(hub, w) for w in comp]
        else:
            edges.append((hub, rng.choice(comp)))
        if rng.random() < 0.9:
            edges.append((rng.choice(xs), rng.choice(comp)))
    for x in xs:
        if rng.random() < 0.3:
            edges.append((hub, x))
    n = nxt
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    return build_graph(n, [(perm[a], perm[b]) for a, b in edges]), perm[hub]
