"""Maximum cardinality matching in general graphs (Edmonds' blossom algorithm).

Vertices are ``0..n-1`` and ``graph[i]`` lists the neighbors of ``i``.  Besides
the matching itself, :func:`gallai_edmonds_even` reports which vertices are
missed by at least one maximum matching, which the A-path cover needs.
"""
from __future__ import annotations

from collections import deque


class _Search:
    def __init__(self, graph, mate):
        self.g = graph
        self.mate = mate
        self.n = len(graph)

    def _lca(self, a, b):
        base, mate, p = self.base, self.mate, self.parent
        seen = set()
        while True:
            a = base[a]
            seen.add(a)
            if mate[a] == -1:
                break
            a = p[mate[a]]
        while True:
            b = base[b]
            if b in seen:
                return b
            b = p[mate[b]]

    def _mark(self, v, b, child, blossom):
        base, mate, p = self.base, self.mate, self.parent
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[mate[v]]] = True
            p[v] = child
            child = mate[v]
            v = p[mate[v]]

    def run(self, root):
        """Grow an alternating tree from exposed ``root``.

        Returns the exposed endpoint of an augmenting path, or -1.  After a
        failed run ``self.outer`` holds exactly the vertices reachable from
        ``root`` by an even-length alternating path.
        """
        n, g, mate = self.n, self.g, self.mate
        self.base = base = list(range(n))
        self.parent = p = [-1] * n
        self.outer = used = [False] * n
        used[root] = True
        q = deque([root])
        while q:
            v = q.popleft()
            for to in g[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and p[mate[to]] != -1):
                    cur = self._lca(v, to)
                    blossom = [False] * n
                    self._mark(v, cur, to, blossom)
                    self._mark(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                q.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if mate[to] == -1:
                        return to
                    used[mate[to]] = True
                    q.append(mate[to])
        return -1

    def augment(self, end):
        mate, p = self.mate, self.parent
        v = end
        while v != -1:
            pv = p[v]
            nxt = mate[pv]
            mate[v] = pv
            mate[pv] = v
            v = nxt


def maximum_matching(graph, mate=None) -> list[int]:
    """Mate array of a maximum matching; ``-1`` marks exposed vertices.

    ``mate`` may seed the search with any valid matching.
    """
    n = len(graph)
    mate = [-1] * n if mate is None else list(mate)
    search = _Search(graph, mate)
    for v in range(n):
        if mate[v] == -1:
            end = search.run(v)
            if end != -1:
                search.augment(end)
    return mate


def gallai_edmonds_even(graph, mate) -> set[int]:
    """Vertices missed by some maximum matching, given a maximum ``mate``."""
    search = _Search(graph, mate)
    even = set()
    for r in range(len(graph)):
        if mate[r] == -1 and r not in even:
            if search.run(r) != -1:
                raise ValueError("matching is not maximum")
            even.update(i for i, flag in enumerate(search.outer) if flag)
    return even
