import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from blockdel.exceptions import InputError
from blockdel.graph import (
    Graph,
    block_decomposition,
    build_graph,
    connected_components,
    contract_edge,
    induced_delete,
    true_twin_classes,
)
from conftest import all_graphs, bowtie, complete, cycle, diamond, path, to_nx


def test_build_graph_examples():
    assert path(3).edges() == [(1, 2), (2, 3)]
    c4 = build_graph(4, [(1, 2), (2, 3), (3, 4), (4, 1)])
    assert c4 == cycle(4)
    dup = build_graph(4, [(1, 2), (1, 2)])
    assert len(dup) == 4 and dup.number_of_edges() == 1


@pytest.mark.parametrize("edges", [[(1, 1)], [(0, 1)], [(1, 5)]])
def test_build_graph_rejects(edges):
    with pytest.raises(InputError):
        build_graph(4, edges)


def test_induced_delete():
    assert induced_delete(cycle(4), [1]).edges() == [(2, 3), (3, 4)]
    G = complete(4)
    assert induced_delete(G, []) == G
    assert induced_delete(G, [2]).edges() == [(1, 3), (1, 4), (3, 4)]
    assert len(G) == 4  # unchanged
    with pytest.raises(InputError):
        induced_delete(G, [9])


def test_contract_edge():
    C4 = contract_edge(cycle(5), 1, 2)
    assert sorted(C4.vertices) == [1, 3, 4, 5] and C4.number_of_edges() == 4
    tri = contract_edge(cycle(4), 2, 3)
    assert tri.number_of_edges() == 3 and len(tri) == 3
    k2 = contract_edge(complete(3), 1, 2)
    assert k2.edges() == [(1, 3)]
    with pytest.raises(InputError):
        contract_edge(cycle(4), 1, 3)


@pytest.mark.parametrize("n", range(5, 10))
def test_contracting_hole_edge_shortens_it(n):
    H = contract_edge(cycle(n), 1, 2)
    g = to_nx(H)
    assert all(d == 2 for _, d in g.degree()) and nx.is_connected(g) and len(H) == n - 1


def test_block_decomposition_examples():
    d = block_decomposition(path(3))
    assert set(d.blocks) == {frozenset({1, 2}), frozenset({2, 3})}
    assert d.cut_vertices == {2}
    d = block_decomposition(complete(3))
    assert d.blocks == (frozenset({1, 2, 3}),) and not d.cut_vertices
    d = block_decomposition(bowtie())
    assert len(d.blocks) == 2 and d.cut_vertices == {1}
    leaves = d.leaf_blocks()
    assert len(leaves) == 2 and all(b == frozenset({1}) for _, b in leaves)


def test_isolated_vertices_are_blocks():
    d = block_decomposition(build_graph(3, [(1, 2)]))
    assert frozenset({3}) in d.blocks
    assert (frozenset({3}), frozenset()) in d.leaf_blocks()


def _check_decomposition(G):
    d = block_decomposition(G)
    for u, v in G.edges():
        assert sum(1 for b in d.blocks if u in b and v in b) == 1
    for i, a in enumerate(d.blocks):
        for b in d.blocks[i + 1:]:
            common = a & b
            assert len(common) <= 1 and common <= d.cut_vertices
    tree = nx.Graph()
    tree.add_nodes_from(d.tree)
    tree.add_edges_from((a, b) for a, nbrs in d.tree.items() for b in nbrs)
    assert nx.is_forest(tree)
    for (kind, key), nbrs in d.tree.items():
        if kind == "B":
            assert {c for _, c in nbrs} == d.blocks[key] & d.cut_vertices
    ref = {frozenset(c) for c in nx.biconnected_components(to_nx(G))}
    ours = {b for b in d.blocks if len(b) > 1}
    assert ours == ref
    assert d.cut_vertices == set(nx.articulation_points(to_nx(G)))


def test_decomposition_exhaustive_small():
    for n in range(1, 6):
        for G in all_graphs(n):
            _check_decomposition(G)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 7), st.data())
def test_decomposition_random_seven(n, data):
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    chosen = data.draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    _check_decomposition(build_graph(n, chosen))


def test_true_twins():
    assert true_twin_classes(complete(4)) == [frozenset({1, 2, 3, 4})]
    assert len(true_twin_classes(cycle(4))) == 4
    classes = true_twin_classes(diamond())
    assert frozenset({1, 2}) in classes and frozenset({3}) in classes and frozenset({4}) in classes


def test_twin_classes_are_cliques():
    for G in all_graphs(5):
        for cls in true_twin_classes(G):
            for u in cls:
                for v in cls:
                    if u != v:
                        assert G.has_edge(u, v)
                        assert G.neighbors(u) - {v} == G.neighbors(v) - {u}


def test_fresh_ids_never_reused():
    G = cycle(4).delete([4])
    G2, ids = G.add_vertices(2)
    assert ids == (5, 6)
    G3, more = G2.delete([5, 6]).add_vertices(1)
    assert more == (7,)


def test_components_sorted():
    G = build_graph(5, [(4, 5), (1, 2)])
    assert connected_components(G.adjacency) == [frozenset({1, 2}), frozenset({3}), frozenset({4, 5})]


def test_graph_is_immutable_value():
    G = cycle(4)
    H = G.edit_edges(add=[(1, 3)])
    assert not G.has_edge(1, 3) and H.has_edge(1, 3)
    assert hash(G) == hash(cycle(4))
    assert isinstance(G, Graph)
