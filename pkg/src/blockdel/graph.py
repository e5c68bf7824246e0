"""Simple undirected graphs with stable vertex ids, and block decomposition.

Graphs are immutable values: every editing operation returns a new graph and
leaves the receiver untouched.  Vertex ids are positive integers that survive
deletions and contractions; fresh ids come from a monotone counter carried
along with the graph so an id is never handed out twice in one lineage.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .exceptions import InputError

__all__ = [
    "Graph",
    "BlockDecomposition",
    "build_graph",
    "induced_delete",
    "contract_edge",
    "block_decomposition",
    "true_twin_classes",
    "connected_components",
]


class Graph:
    """An immutable simple undirected graph.

    Parameters
    ----------
    vertices : iterable of int
        Vertex ids.
    edges : iterable of (int, int)
        Edges; duplicates collapse, loops are rejected.
    next_id : int, optional
        Smallest id that :meth:`add_vertices` may hand out.  Defaults to one
        more than the largest vertex id.
    """

    __slots__ = ("_adj", "_next_id", "_hash")

    def __init__(self, vertices=(), edges=(), next_id=None):
        adj: dict[int, set[int]] = {int(v): set() for v in vertices}
        for u, v in edges:
            if u == v:
                raise InputError(f"loop edge at vertex {u}")
            if u not in adj or v not in adj:
                raise InputError(f"edge ({u}, {v}) uses an unknown vertex")
            adj[u].add(v)
            adj[v].add(u)
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}
        top = max(self._adj, default=0) + 1
        self._next_id = top if next_id is None else max(int(next_id), top)
        self._hash = None

    @classmethod
    def _raw(cls, adj: dict[int, frozenset], next_id: int) -> "Graph":
        g = cls.__new__(cls)
        g._adj = adj
        g._next_id = next_id
        g._hash = None
        return g

    # -- queries ---------------------------------------------------------
    @property
    def adjacency(self) -> Mapping[int, frozenset]:
        return self._adj

    @property
    def vertices(self) -> frozenset:
        return frozenset(self._adj)

    @property
    def next_id(self) -> int:
        return self._next_id

    def __len__(self) -> int:
        return len(self._adj)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self._adj))

    def __contains__(self, v) -> bool:
        return v in self._adj

    def neighbors(self, v: int) -> frozenset:
        try:
            return self._adj[v]
        except KeyError:
            raise InputError(f"unknown vertex {v}") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj.get(u, ())

    def edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u, ns in self._adj.items() for v in ns if u < v)

    def number_of_edges(self) -> int:
        return sum(len(ns) for ns in self._adj.values()) // 2

    def neighborhood(self, vertices: Iterable[int]) -> frozenset:
        """Open neighborhood of a vertex set: N(X) minus X."""
        xs = set(vertices)
        out = set()
        for x in xs:
            out |= self.neighbors(x)
        return frozenset(out - xs)

    def components(self) -> list[frozenset]:
        return connected_components(self._adj)

    # -- editing (all return new graphs) ----------------------------------
    def delete(self, vertices: Iterable[int]) -> "Graph":
        xs = set(vertices)
        unknown = xs - self._adj.keys()
        if unknown:
            raise InputError(f"unknown vertices {sorted(unknown)}")
        if not xs:
            return self
        adj = {v: (ns - xs if ns & xs else ns) for v, ns in self._adj.items() if v not in xs}
        return Graph._raw(adj, self._next_id)

    def induced(self, vertices: Iterable[int]) -> "Graph":
        keep = set(vertices)
        unknown = keep - self._adj.keys()
        if unknown:
            raise InputError(f"unknown vertices {sorted(unknown)}")
        return self.delete(self._adj.keys() - keep)

    def contract(self, u: int, v: int) -> "Graph":
        """Merge ``v`` into ``u``; the result keeps id ``u``."""
        if not self.has_edge(u, v):
            raise InputError(f"({u}, {v}) is not an edge")
        merged = (self._adj[u] | self._adj[v]) - {u, v}
        adj = {}
        for w, ns in self._adj.items():
            if w == v:
                continue
            if w == u:
                adj[w] = merged
            elif v in ns:
                adj[w] = (ns - {v}) | {u}
            else:
                adj[w] = ns
        return Graph._raw(adj, self._next_id)

    def add_vertices(self, count: int) -> tuple["Graph", tuple[int, ...]]:
        new = tuple(range(self._next_id, self._next_id + count))
        adj = dict(self._adj)
        for w in new:
            adj[w] = frozenset()
        return Graph._raw(adj, self._next_id + count), new

    def edit_edges(self, add=(), remove=()) -> "Graph":
        adj = {v: set(ns) for v, ns in self._adj.items()}
        for a, b in remove:
            adj[a].discard(b)
            adj[b].discard(a)
        for a, b in add:
            if a == b:
                raise InputError(f"loop edge at vertex {a}")
            if a not in adj or b not in adj:
                raise InputError(f"edge ({a}, {b}) uses an unknown vertex")
            adj[a].add(b)
            adj[b].add(a)
        return Graph._raw({v: frozenset(ns) for v, ns in adj.items()}, self._next_id)

    # -- value semantics ---------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset((v, ns) for v, ns in self._adj.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={len(self)}, m={self.number_of_edges()})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on vertices ``1..n`` with the given edges."""
    if n < 0:
        raise InputError("vertex count must be non-negative")
    edges = list(edges)
    for u, v in edges:
        if not (1 <= u <= n and 1 <= v <= n):
            raise InputError(f"edge ({u}, {v}) has an id outside 1..{n}")
    return Graph(range(1, n + 1), edges)


def induced_delete(G: Graph, X: Iterable[int]) -> Graph:
    return G.delete(X)


def contract_edge(G: Graph, u: int, v: int) -> Graph:
    return G.contract(u, v)


def connected_components(adj: Mapping[int, Iterable[int]], vertices=None) -> list[frozenset]:
    """Components of the subgraph induced by ``vertices`` (default: all),
    sorted by smallest member."""
    verts = adj.keys() if vertices is None else vertices
    seen = set()
    comps = []
    for s in sorted(verts):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen and (vertices is None or y in vertices):
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        comps.append(frozenset(comp))
    return comps


def raw_blocks(adj: Mapping[int, Iterable[int]], vertices=None) -> list[tuple[frozenset, int]]:
    """Blocks of the subgraph induced by ``vertices`` as ``(vertex set, edge count)``.

    Iterative Hopcroft-Tarjan with an edge stack.  Isolated vertices come out
    as single-vertex blocks with zero edges.
    """
    if vertices is None:
        vertices = adj.keys()
        nbrs = adj
    else:
        nbrs = {v: [w for w in adj[v] if w in vertices] for v in vertices}
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks = []
    counter = 0
    for root in vertices:
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        if not nbrs[root]:
            blocks.append((frozenset((root,)), 0))
            continue
        edge_stack = []
        stack = [(root, None, iter(nbrs[root]))]
        while stack:
            v, parent, it = stack[-1]
            descended = False
            for w in it:
                if w == parent:
                    continue
                iw = index.get(w)
                if iw is None:
                    index[w] = low[w] = counter
                    counter += 1
                    edge_stack.append((v, w))
                    stack.append((w, v, iter(nbrs[w])))
                    descended = True
                    break
                if iw < index[v]:
                    edge_stack.append((v, w))
                    if iw < low[v]:
                        low[v] = iw
            if descended:
                continue
            stack.pop()
            if parent is None:
                continue
            if low[v] < low[parent]:
                low[parent] = low[v]
            if low[v] >= index[parent]:
                verts = set()
                count = 0
                while True:
                    e = edge_stack.pop()
                    verts.update(e)
                    count += 1
                    if e[0] == parent and e[1] == v:
                        break
                blocks.append((frozenset(verts), count))
    return blocks


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks, cut vertices and the block-cut tree of a graph.

    Tree nodes are ``("B", i)`` for ``blocks[i]`` and ``("C", v)`` for a cut
    vertex ``v``; ``tree`` maps each node to its neighbors.
    """

    blocks: tuple[frozenset, ...]
    cut_vertices: frozenset
    tree: Mapping[tuple, frozenset] = field(repr=False)

    def boundary(self, i: int) -> frozenset:
        return self.blocks[i] & self.cut_vertices

    def leaf_blocks(self) -> list[tuple[frozenset, frozenset]]:
        """Blocks with at most one cut vertex, paired with that boundary set."""
        out = []
        for i, b in enumerate(self.blocks):
            bd = self.boundary(i)
            if len(bd) <= 1:
                out.append((b, bd))
        return out

    def blocks_containing(self, v: int) -> list[frozenset]:
        return [b for b in self.blocks if v in b]


def block_decomposition(G: Graph) -> BlockDecomposition:
    found = sorted((b for b, _ in raw_blocks(G.adjacency)), key=lambda b: (min(b), len(b)))
    membership = defaultdict(int)
    for b in found:
        for v in b:
            membership[v] += 1
    cuts = frozenset(v for v, c in membership.items() if c > 1)
    tree: dict[tuple, set] = {("B", i): set() for i in range(len(found))}
    for c in cuts:
        tree[("C", c)] = set()
    for i, b in enumerate(found):
        for c in b & cuts:
            tree[("B", i)].add(("C", c))
            tree[("C", c)].add(("B", i))
    return BlockDecomposition(
        blocks=tuple(found),
        cut_vertices=cuts,
        tree={k: frozenset(v) for k, v in tree.items()},
    )


def true_twin_classes(G: Graph) -> list[frozenset]:
    """Partition of V(G) into classes of pairwise true twins (equal closed
    neighborhoods), sorted by smallest member."""
    groups: dict[frozenset, list[int]] = defaultdict(list)
    for v, ns in G.adjacency.items():
        groups[ns | {v}].append(v)
    return sorted((frozenset(g) for g in groups.values()), key=min)
