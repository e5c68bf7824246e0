"""Reduction rules and the kernelization driver for Block Graph Deletion.

Every rule takes an :class:`Instance` and returns a new one (or ``None`` when
it does not apply); the original is never modified.  Each application appends
a :class:`ReductionEvent` to the trace, and :func:`replay` re-applies a trace
to the original graph.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .exceptions import InputError, InternalError
from .expansion import expand
from .gallai import DisjointObstructions, FlowerAt, Hitter, probe_vertex
from .graph import Graph, block_decomposition, connected_components, true_twin_classes
from .obstruction import find_obstruction, has_obstruction_through, is_block_graph_on

__all__ = [
    "Instance",
    "ReductionEvent",
    "Rule4Pattern",
    "Reduced",
    "Answer",
    "g1",
    "g2",
    "size_bound",
    "m_star",
    "apply_rule1",
    "apply_rule2",
    "apply_rule3",
    "find_rule4_pattern",
    "apply_rule4",
    "apply_rule5",
    "rule6_family",
    "apply_rule6",
    "kernelize",
    "replay",
]

# Rule 6 works with the probe's hitter of a vertex whose neighborhood splits
# into many cliques: l = 29k, and after removing the hitter at least
# 29k - 7k = 22k cliques remain, at most k of whose components hold an
# obstruction.
LARGE_DEGREE_FACTOR = 29
RULE6_MIN_CLIQUES = 22
RULE6_MIN_FAMILY = 21
EXPANSION_ALPHA = 3


@dataclass(frozen=True)
class ReductionEvent:
    rule: str
    removed: tuple[int, ...] = ()
    added: tuple[int, ...] = ()
    contracted: tuple[tuple[int, int], ...] = ()
    removed_edges: tuple[tuple[int, int], ...] = ()
    added_edges: tuple[tuple[int, int], ...] = ()
    k_delta: int = 0
    params: dict = field(default_factory=dict, compare=False)

    def to_json(self) -> dict:
        params = dict(self.params)
        params["k_delta"] = self.k_delta
        params["removed_edges"] = [list(e) for e in self.removed_edges]
        params["added_edges"] = [list(e) for e in self.added_edges]
        return {
            "rule": self.rule,
            "removed": list(self.removed),
            "added": list(self.added),
            "contracted": [list(p) for p in self.contracted],
            "params": params,
        }

    @classmethod
    def from_json(cls, data: dict) -> "ReductionEvent":
        params = dict(data.get("params", {}))
        k_delta = params.pop("k_delta", 0)
        removed_edges = tuple(tuple(e) for e in params.pop("removed_edges", ()))
        added_edges = tuple(tuple(e) for e in params.pop("added_edges", ()))
        return cls(
            rule=str(data["rule"]),
            removed=tuple(data.get("removed", ())),
            added=tuple(data.get("added", ())),
            contracted=tuple(tuple(p) for p in data.get("contracted", ())),
            removed_edges=removed_edges,
            added_edges=added_edges,
            k_delta=k_delta,
            params=params,
        )


@dataclass(frozen=True)
class Instance:
    graph: Graph
    k: int
    trace: tuple[ReductionEvent, ...] = ()

    def apply(self, event: ReductionEvent) -> "Instance":
        graph, k = _apply_event(self.graph, self.k, event)
        return Instance(graph, k, self.trace + (event,))


@dataclass(frozen=True)
class Rule4Pattern:
    t: tuple[int, int, int, int]
    S: tuple[frozenset, frozenset, frozenset]


@dataclass(frozen=True)
class Reduced:
    instance: Instance
    bound: int
    probes: int = 0


@dataclass(frozen=True)
class Answer:
    value: bool
    instance: Instance
    witnesses: tuple = ()
    probes: int = 0


def _apply_event(graph: Graph, k: int, ev: ReductionEvent) -> tuple[Graph, int]:
    if ev.removed_edges:
        graph = graph.edit_edges(remove=ev.removed_edges)
    if ev.added:
        graph, ids = graph.add_vertices(len(ev.added))
        if ids != tuple(ev.added):
            raise InternalError(f"fresh ids {ids} differ from recorded {ev.added}")
    if ev.added_edges:
        graph = graph.edit_edges(add=ev.added_edges)
    for u, v in ev.contracted:
        graph = graph.contract(u, v)
    if ev.removed:
        graph = graph.delete(ev.removed)
    return graph, k + ev.k_delta


def replay(graph: Graph, k: int, trace) -> tuple[Graph, int]:
    """Re-apply a trace to ``(graph, k)``."""
    for ev in trace:
        graph, k = _apply_event(graph, k, ev)
    return graph, k


# -- size bound -------------------------------------------------------------

def g1(k: int, l: int) -> int:
    return 6 * k * k * (l + 14 * k) ** 2 + 2 * k * (l + 14 * k)


def g2(k: int, l: int) -> Fraction:
    return (k + 1) ** 2 + 7 * k * k + Fraction(k * (l + 14 * k), 2)


def size_bound(k: int) -> int:
    """Vertex count below which a reduced instance is reported as the kernel."""
    l = LARGE_DEGREE_FACTOR * k
    value = k + g1(k, l) * g2(k, l)
    # g1 is always even, so the product is an integer
    return int(value)


def m_star(G: Graph) -> int:
    """Number of edges whose endpoints both have degree at least three."""
    adj = G.adjacency
    return sum(1 for u, v in G.edges() if len(adj[u]) >= 3 and len(adj[v]) >= 3)


# -- Rules 1-4 -----------------------------------------------------------------

def apply_rule1(I: Instance) -> Optional[Instance]:
    """Drop one connected component that is already a block graph."""
    adj = I.graph.adjacency
    for comp in connected_components(adj):
        if is_block_graph_on(adj, comp):
            return I.apply(ReductionEvent("1", removed=tuple(sorted(comp))))
    return None


def apply_rule2(I: Instance) -> Optional[Instance]:
    """Drop a component H of G - v for a cut vertex v when G[H + v] is a block graph."""
    G = I.graph
    adj = G.adjacency
    for v in sorted(block_decomposition(G).cut_vertices):
        rest = adj.keys() - {v}
        for comp in connected_components(adj, rest):
            if not (adj[v] & comp):
                continue
            if is_block_graph_on(adj, comp | {v}):
                return I.apply(ReductionEvent("2", removed=tuple(sorted(comp)), params={"v": v}))
    return None


def apply_rule3(I: Instance) -> Optional[Instance]:
    """Shrink a true-twin class of size at least k + 2 to its k + 1 lowest ids.

    At least two twins are always kept: a diamond can use two of them, so at
    k = 0 keeping a single one could turn a no-instance into a yes-instance.
    """
    keep = max(I.k + 1, 2)
    for cls in true_twin_classes(I.graph):
        if len(cls) > keep:
            drop = sorted(cls)[keep:]
            return I.apply(ReductionEvent("3", removed=tuple(drop)))
    return None


def _side_options(adj, t_in, rest):
    """Choices of the outer path vertex next to ``t_in`` given the leftover
    neighbors ``rest``; the others must form a clique hanging off both."""
    rest = set(rest)
    out = []
    for t_out in sorted(rest):
        S = rest - {t_out}
        closed = S | {t_out, t_in}
        if all(adj[w] | {w} == closed for w in S):
            out.append((t_out, frozenset(S)))
    return out


def find_rule4_pattern(G: Graph) -> Optional[Rule4Pattern]:
    """An induced path t1 t2 t3 t4 whose middle vertices only see the path and
    three attached cliques S1, S2, S3 (each possibly empty)."""
    adj = G.adjacency
    for a, b in G.edges():
        for t2, t3 in ((a, b), (b, a)):
            S2 = adj[t2] & adj[t3]
            if any(adj[w] | {w} != S2 | {t2, t3} for w in S2):
                continue
            left = _side_options(adj, t2, adj[t2] - S2 - {t3})
            if not left:
                continue
            right = _side_options(adj, t3, adj[t3] - S2 - {t2})
            for t1, S1 in left:
                for t4, S3 in right:
                    if t1 == t4 or t4 in adj[t1]:
                        continue
                    return Rule4Pattern((t1, t2, t3, t4), (S1, frozenset(S2), S3))
    return None


def apply_rule4(I: Instance) -> Optional[Instance]:
    pat = find_rule4_pattern(I.graph)
    if pat is None:
        return None
    t1, t2, t3, t4 = pat.t
    return I.apply(
        ReductionEvent(
            "4",
            removed=tuple(sorted(pat.S[1])),
            contracted=((t2, t3),),
            params={"t": list(pat.t), "S": [sorted(s) for s in pat.S]},
        )
    )


# -- Rule 5 --------------------------------------------------------------------

class _Probes:
    """Lazily computed probe outcomes for one graph snapshot."""

    def __init__(self, G: Graph, k: int, jobs: int = 1):
        self.G = G
        self.k = k
        self.cache: dict[int, object] = {}
        self.count = 0
        if jobs > 1 and len(G) > 1:
            from concurrent.futures import ProcessPoolExecutor

            order = sorted(G.vertices)
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = pool.map(probe_vertex, [G] * len(order), order, [k] * len(order))
                self.cache = dict(zip(order, results))
            self.count = len(order)

    def __getitem__(self, v: int):
        if v not in self.cache:
            self.cache[v] = probe_vertex(self.G, v, self.k)
            self.count += 1
        return self.cache[v]


def apply_rule5(I: Instance, probes: Optional[_Probes] = None) -> Union[Instance, Answer, None]:
    """Probe vertices in id order.  Disjoint obstructions decide NO; a flower
    at ``v`` forces ``v`` into every small solution, so ``v`` is deleted and
    the budget drops by one."""
    if I.k < 1:
        return None
    if probes is None:
        probes = _Probes(I.graph, I.k)
    for v in sorted(I.graph.vertices):
        out = probes[v]
        if isinstance(out, DisjointObstructions):
            return Answer(False, I, witnesses=out.obstructions, probes=probes.count)
        if isinstance(out, FlowerAt):
            return I.apply(ReductionEvent("5", removed=(v,), k_delta=-1, params={"v": v}))
    return None


# -- Rule 6 --------------------------------------------------------------------

def rule6_family(G: Graph, v: int, S_v) -> tuple[list[frozenset], list[frozenset]]:
    """Components of ``G - ({v} ∪ S_v)`` split into (eligible, obstructed).

    Eligible components touch ``N(v)``, form a block graph together with
    ``v`` and have a neighbor in ``S_v``.
    """
    adj = G.adjacency
    S_v = frozenset(S_v)
    nv = adj[v]
    eligible, obstructed = [], []
    for comp in connected_components(adj, adj.keys() - S_v - {v}):
        if not is_block_graph_on(adj, comp):
            obstructed.append(comp)
            continue
        if not (comp & nv) or not is_block_graph_on(adj, comp | {v}):
            continue
        if any(adj[x] & comp for x in S_v):
            eligible.append(comp)
    return eligible, obstructed


def apply_rule6(I: Instance, v: int, S_v, *, strict: bool = True) -> Instance:
    """Detach ``v`` from a 3-expansion of components onto ``S_v`` and wire
    ``v`` to each expanded hitter vertex by two fresh paths of length two.

    ``strict`` enforces the driver's size thresholds (22k cliques around
    ``v``, 21k eligible components); without it only the conditions needed
    for the expansion itself are checked.
    """
    G, k = I.graph, I.k
    adj = G.adjacency
    S_v = frozenset(S_v)
    if v not in adj or v in S_v or not S_v <= adj.keys():
        raise InternalError("Rule 6 called with an invalid (v, S_v)")
    if strict and len(S_v) > 7 * k:
        raise InternalError("Rule 6 hitter larger than 7k")
    if has_obstruction_through(G.delete(S_v), v):
        raise InternalError("Rule 6 hitter leaves an obstruction through v")
    cliques = len(connected_components(adj, adj[v] - S_v))
    if strict and cliques < RULE6_MIN_CLIQUES * k:
        raise InternalError(f"Rule 6 needs {RULE6_MIN_CLIQUES * k} cliques, got {cliques}")
    family, _ = rule6_family(G, v, S_v)
    if strict and len(family) < RULE6_MIN_FAMILY * k:
        raise InternalError(f"Rule 6 needs {RULE6_MIN_FAMILY * k} components, got {len(family)}")

    if not S_v or len(family) < EXPANSION_ALPHA * len(S_v):
        raise InternalError("Rule 6 needs a nonempty hitter and 3|S_v| eligible components")
    touches = {x: {i for i, C in enumerate(family) if adj[x] & C} for x in S_v}
    ex = expand(S_v, range(len(family)), touches, EXPANSION_ALPHA)
    chosen = [family[i] for i in sorted(ex.Y_prime)]
    X_prime = sorted(ex.X_prime)

    before = len(G) + m_star(G)
    cut = tuple(sorted((v, w) for C in chosen for w in C & adj[v]))
    H = G.edit_edges(remove=cut)
    H, fresh = H.add_vertices(2 * len(X_prime))
    new_edges = []
    for i, x in enumerate(X_prime):
        for r in fresh[2 * i: 2 * i + 2]:
            new_edges += [(v, r), (r, x)]
    H = H.edit_edges(add=new_edges)

    # cascade-delete vertices left with degree <= 1 inside the detached components
    zone = set().union(*chosen)
    hadj = {u: set(H.adjacency[u]) for u in zone}
    doomed = []
    queue = sorted(u for u in zone if len(H.adjacency[u]) <= 1)
    gone = set()
    while queue:
        u = queue.pop()
        if u in gone:
            continue
        gone.add(u)
        doomed.append(u)
        for w in hadj[u]:
            if w in zone and w not in gone:
                hadj[w].discard(u)
                if len(hadj[w]) <= 1:
                    queue.append(w)
    H = H.delete(doomed)
    after = len(H) + m_star(H)

    event = ReductionEvent(
        "6",
        removed=tuple(sorted(doomed)),
        added=fresh,
        removed_edges=cut,
        added_edges=tuple(new_edges),
        params={
            "v": v,
            "X_prime": X_prime,
            "phi": {str(x): [sorted(family[i]) for i in sorted(ex.phi[x])] for x in X_prime},
            "measure_before": before,
            "measure_after": after,
        },
    )
    out = I.apply(event)
    if out.graph != H:
        raise InternalError("Rule 6 event does not replay to the computed graph")
    return out


# -- driver ----------------------------------------------------------------------

def _exhaust_basic(I: Instance, budget: list) -> Instance:
    while True:
        for rule in (apply_rule1, apply_rule2, apply_rule3, apply_rule4):
            nxt = rule(I)
            if nxt is not None:
                I = nxt
                budget[0] -= 1
                if budget[0] < 0:
                    raise InternalError("kernelize exceeded its event ceiling")
                break
        else:
            return I


def kernelize(I: Instance, *, bound: Optional[int] = None, jobs: int = 1) -> Union[Reduced, Answer]:
    """Reduce ``I`` to an equivalent instance with fewer than ``size_bound(k)``
    vertices, or decide it outright.

    ``bound`` overrides the size threshold (useful to force Rule 6 on small
    inputs).  With an override the driver cannot rely on the large-size
    argument, so it reports ``Reduced`` instead of NO when no vertex qualifies
    for Rule 6.
    """
    if I.k < 0:
        return Answer(False, I)
    G0 = I.graph
    ceiling = [10 * (len(G0) + G0.number_of_edges()) + 1]
    probes_total = 0
    while True:
        if I.k < 0:
            return Answer(False, I, probes=probes_total)
        I = _exhaust_basic(I, ceiling)
        if len(I.graph) == 0:
            return Answer(True, I, probes=probes_total)
        if I.k == 0:
            # every remaining component holds an obstruction
            return Answer(False, I, probes=probes_total)

        probes = _Probes(I.graph, I.k, jobs)
        out = apply_rule5(I, probes)
        if isinstance(out, Answer):
            return Answer(False, out.instance, out.witnesses, probes_total + probes.count)
        if out is not None:
            probes_total += probes.count
            I = out
            ceiling[0] -= 1
            continue

        limit = size_bound(I.k) if bound is None else bound
        if len(I.graph) < limit:
            return Reduced(I, limit, probes_total + probes.count)

        step = _large_degree_step(I, probes)
        probes_total += probes.count
        if isinstance(step, Answer):
            return Answer(False, step.instance, step.witnesses, probes_total)
        if step is None:
            if bound is not None:
                return Reduced(I, limit, probes_total)
            return Answer(False, I, probes=probes_total)
        I = step
        ceiling[0] -= 1
        if ceiling[0] < 0:
            raise InternalError("kernelize exceeded its event ceiling")


def _large_degree_step(I: Instance, probes: _Probes) -> Union[Instance, Answer, None]:
    """Apply Rule 6 at the lowest-id vertex that qualifies; NO when more than
    k components around some vertex hold obstructions."""
    k = I.k
    for v in sorted(I.graph.vertices):
        hit = probes[v]
        if not isinstance(hit, Hitter) or hit.clique_components < RULE6_MIN_CLIQUES * k:
            continue
        family, obstructed = rule6_family(I.graph, v, hit.S_v)
        if len(obstructed) > k:
            wit = tuple(find_obstruction(I.graph.induced(C)) for C in obstructed[: k + 1])
            return Answer(False, I, wit)
        if len(family) >= RULE6_MIN_FAMILY * k:
            return apply_rule6(I, v, hit.S_v)
    return None


def rule_histogram(trace) -> dict[str, int]:
    return dict(sorted(Counter(ev.rule for ev in trace).items()))
