import sys
from itertools import combinations

import networkx as nx
import pytest

from blockdel.graph import Graph, build_graph


def from_nx(g) -> Graph:
    ids = {v: i + 1 for i, v in enumerate(sorted(g.nodes()))}
    return build_graph(len(ids), [(ids[a], ids[b]) for a, b in g.edges()])


def to_nx(G: Graph):
    g = nx.Graph()
    g.add_nodes_from(G.vertices)
    g.add_edges_from(G.edges())
    return g


def cycle(n):
    return build_graph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def path(n):
    return build_graph(n, [(i, i + 1) for i in range(1, n)])


def complete(n):
    return build_graph(n, list(combinations(range(1, n + 1), 2)))


def diamond():
    # 1, 2 have degree three
    return build_graph(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)])


def bowtie():
    # center 1
    return build_graph(5, [(1, 2), (1, 3), (2, 3), (1, 4), (1, 5), (4, 5)])


def petersen():
    return from_nx(nx.petersen_graph())


def disjoint_union(*graphs):
    edges, off = [], 0
    for G in graphs:
        edges += [(u + off, v + off) for u, v in G.edges()]
        off += len(G)
    return build_graph(off, edges)


def all_graphs(n):
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield build_graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def brute_is_block(G: Graph) -> bool:
    """No induced diamond, no induced cycle of length >= 4 (exhaustive)."""
    g = to_nx(G)
    for size in range(4, len(G) + 1):
        for sub in combinations(sorted(G.vertices), size):
            h = g.subgraph(sub)
            degs = sorted(d for _, d in h.degree())
            if size == 4 and degs == [2, 2, 3, 3]:
                return False
            if all(d == 2 for d in degs) and nx.is_connected(h):
                return False
    return True


@pytest.fixture
def named():
    return {
        "C4": cycle(4),
        "C5": cycle(5),
        "diamond": diamond(),
        "bowtie": bowtie(),
        "K4": complete(4),
        "P3": path(3),
        "petersen": petersen(),
    }


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        ok, detail = results[n]
        terminalreporter.write_line(f"CRITERION {n}: {'PASS' if ok else 'FAIL'} - {detail}")
