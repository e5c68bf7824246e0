import json
from fractions import Fraction

import pytest

from blockdel.exceptions import InternalError
from blockdel.graph import build_graph
from blockdel.kernel import (
    Answer,
    Instance,
    Reduced,
    ReductionEvent,
    apply_rule1,
    apply_rule2,
    apply_rule3,
    apply_rule4,
    apply_rule5,
    apply_rule6,
    find_rule4_pattern,
    g1,
    g2,
    kernelize,
    m_star,
    replay,
    size_bound,
)
from blockdel.obstruction import is_block_graph
from blockdel.oracle import PlantedSpec, gen_hub, gen_planted, min_deletion_bruteforce
from conftest import complete, cycle, diamond, disjoint_union, path
from crafted import rule5_instances, rule6_toys


def test_size_bound_constants():
    assert g1(1, 29) == 11180
    assert g2(1, 29) == Fraction(65, 2)
    assert size_bound(1) == 363351
    assert size_bound(2) == 2 + g1(2, 58) * g2(2, 58)


def test_rule1():
    out = apply_rule1(Instance(disjoint_union(complete(3), cycle(5)), 1))
    assert sorted(out.graph.vertices) == [4, 5, 6, 7, 8] and out.graph.number_of_edges() == 5
    assert apply_rule1(Instance(cycle(4), 1)) is None
    forest = build_graph(6, [(1, 2), (2, 3), (4, 5)])
    I = Instance(forest, 0)
    while (nxt := apply_rule1(I)) is not None:
        I = nxt
    assert len(I.graph) == 0


def test_rule2():
    tri = cycle(5).edit_edges()
    G, new = tri.add_vertices(2)
    G = G.edit_edges(add=[(1, 6), (1, 7), (6, 7)])
    out = apply_rule2(Instance(G, 1))
    assert out.graph == cycle(5)
    G, _ = cycle(5).add_vertices(3)
    G = G.edit_edges(add=[(1, 6), (6, 7), (7, 8)])
    assert apply_rule2(Instance(G, 1)).graph == cycle(5)
    assert apply_rule2(Instance(cycle(4), 1)) is None


def test_rule3():
    out = apply_rule3(Instance(complete(6), 1))
    assert out.graph.edges() == [(1, 2)]
    assert apply_rule3(Instance(cycle(4), 1)) is None
    assert apply_rule3(Instance(diamond(), 3)) is None


def test_rule4():
    out = apply_rule4(Instance(path(6), 1))
    assert len(out.graph) == 5 and out.graph.number_of_edges() == 4
    out = apply_rule4(Instance(cycle(6), 1))
    assert len(out.graph) == 5 and all(out.graph.degree(v) == 2 for v in out.graph)
    # figure-style configuration: one vertex in each of S1, S2, S3
    edges = [(i, i % 6 + 1) for i in range(1, 7)] + [(7, 1), (7, 2), (8, 2), (8, 3), (9, 3), (9, 4)]
    G = build_graph(9, edges)
    pat = find_rule4_pattern(G)
    out = apply_rule4(Instance(G, 2))
    assert pat.S[1] <= G.vertices - out.graph.vertices and pat.t[2] not in out.graph
    assert len(out.graph) == 9 - 1 - len(pat.S[1])
    assert min_deletion_bruteforce(out.graph, 3)[0] == min_deletion_bruteforce(G, 3)[0]


def test_rule4_pattern_invariants():
    edges = [(i, i % 6 + 1) for i in range(1, 7)] + [(7, 1), (7, 2), (8, 2), (8, 3), (9, 3), (9, 4)]
    G = build_graph(9, edges)
    pat = find_rule4_pattern(G)
    t1, t2, t3, t4 = pat.t
    S1, S2, S3 = pat.S
    assert G.has_edge(t1, t2) and G.has_edge(t2, t3) and G.has_edge(t3, t4)
    assert not G.has_edge(t1, t3) and not G.has_edge(t2, t4) and not G.has_edge(t1, t4)
    assert G.neighbors(t2) == {t1, t3} | S1 | S2
    assert G.neighbors(t3) == {t2, t4} | S2 | S3
    for S, (a, b) in ((S1, (t1, t2)), (S2, (t2, t3)), (S3, (t3, t4))):
        for w in S:
            assert G.neighbors(w) - S == {a, b}


def test_rule5_examples():
    # v adjacent to the ends of three disjoint P3s
    edges = []
    for j in range(3):
        a, b, c = 2 + 3 * j, 3 + 3 * j, 4 + 3 * j
        edges += [(1, a), (1, c), (a, b), (b, c)]
    out = apply_rule5(Instance(build_graph(10, edges), 1))
    assert isinstance(out, Instance) and 1 not in out.graph and out.k == 0
    assert apply_rule5(Instance(path(4), 1)) is None
    for I in rule5_instances()[:3]:
        assert isinstance(apply_rule5(I), Instance)


def test_rule6_toy():
    I, v, S = rule6_toys()[0]
    out = apply_rule6(I, v, S, strict=False)
    G = out.graph
    assert len(G) == 4 and G.number_of_edges() == 4 and G.degree(1) == 2 and G.degree(2) == 2
    assert min_deletion_bruteforce(G, 1)[0] == 1
    ev = out.trace[-1]
    assert ev.rule == "6" and ev.params["measure_after"] < ev.params["measure_before"]
    with pytest.raises(InternalError):
        apply_rule6(I, v, S)  # below the driver thresholds


def test_rule6_rejects_bad_hitter():
    I, v, _ = rule6_toys()[0]
    with pytest.raises(InternalError):
        apply_rule6(I, v, frozenset({3}), strict=False)


def test_m_star():
    assert m_star(complete(4)) == 6
    assert m_star(cycle(5)) == 0


def test_kernelize_examples():
    B, _ = gen_planted(PlantedSpec(15, 0, 3))
    res = kernelize(Instance(B, 2))
    assert isinstance(res, Answer) and res.value
    res = kernelize(Instance(cycle(4), 1))
    assert isinstance(res, Reduced) and res.instance.graph == cycle(4)
    assert kernelize(Instance(cycle(4), -1)).value is False
    # two disjoint holes: either decided NO or left as an equivalent NO kernel
    res = kernelize(Instance(disjoint_union(cycle(5), cycle(5)), 1))
    if isinstance(res, Answer):
        assert not res.value
    else:
        assert min_deletion_bruteforce(res.instance.graph, res.instance.k) is None


def test_trace_replay_and_json():
    for seed in range(6):
        G, _ = gen_planted(PlantedSpec(30, 2, seed))
        res = kernelize(Instance(G, 1 + seed % 3))
        inst = res.instance
        g, k = replay(G, 1 + seed % 3, inst.trace)
        assert g == inst.graph and k == inst.k
        dumped = json.loads(json.dumps([e.to_json() for e in inst.trace]))
        back = [ReductionEvent.from_json(e) for e in dumped]
        assert replay(G, 1 + seed % 3, back) == (inst.graph, inst.k)
        assert all(e["rule"] in {"1", "2", "3", "4", "5", "6"} for e in dumped)


def test_kernelize_rule6_with_small_bound():
    G, hub = gen_hub(1, 4)
    res = kernelize(Instance(G, 1), bound=1)
    rules = [e.rule for e in res.instance.trace]
    assert "6" in rules
    assert replay(G, 1, res.instance.trace)[0] == res.instance.graph
    k_values = [1]
    for e in res.instance.trace:
        k_values.append(k_values[-1] + e.k_delta)
    assert all(a >= b for a, b in zip(k_values, k_values[1:]))


def test_kernelize_parallel_probes_agree():
    G, _ = gen_planted(PlantedSpec(25, 3, 9))
    a = kernelize(Instance(G, 2))
    b = kernelize(Instance(G, 2), jobs=2)
    assert type(a) is type(b) and a.instance.graph == b.instance.graph


def test_rule3_keeps_two_twins_at_k0():
    # twins 1, 2, 3 with a private neighbor 4 and a clique 5, 6: the diamond
    # 4-1-2-5 must survive the reduction
    G = build_graph(6, [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)] + [(t, w) for t in (1, 2, 3) for w in (5, 6)] + [(5, 6)])
    out = apply_rule3(Instance(G, 0))
    assert sorted(out.graph.vertices) == [1, 2, 4, 5, 6]
    assert not is_block_graph(out.graph)
    res = kernelize(Instance(G, 0))
    assert isinstance(res, Answer) and not res.value
