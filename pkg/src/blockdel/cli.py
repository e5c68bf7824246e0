"""Command-line front end.

    blockdel solve FILE --k 2
    blockdel kernelize FILE --k 1 --trace trace.json
    blockdel verify FILE --k 1 --solution 3,7
    blockdel oracle FILE --kmax 3
    blockdel gen --n 20 --p 0.3 --seed 7
    blockdel stats FILE

Every subcommand except ``gen`` prints one JSON report on stdout.  Exit codes:
0 on completion (whatever the answer), 2 on bad input, 3 on an internal
consistency failure.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional

from .exceptions import InputError, InternalError
from .graph import Graph, block_decomposition, build_graph, true_twin_classes
from .kernel import Answer, Instance, kernelize, rule_histogram, size_bound
from .obstruction import find_obstruction, is_block_graph
from .oracle import PlantedSpec, gen_gnp, gen_planted, min_deletion_bruteforce, verify
from .solver import SearchStats, solve

__all__ = ["parse_instance", "format_instance", "main", "run"]


def parse_instance(text: str) -> Graph:
    """Parse the ``p bgd <n> <m>`` / ``e <u> <v>`` text format."""
    n = m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        try:
            if tag == "p":
                if n is not None:
                    raise InputError(f"line {lineno}: second header")
                if len(parts) != 4 or parts[1] != "bgd":
                    raise InputError(f"line {lineno}: expected 'p bgd <n> <m>'")
                n, m = int(parts[2]), int(parts[3])
                if n < 0 or m < 0:
                    raise InputError(f"line {lineno}: negative count")
            elif tag == "e":
                if n is None:
                    raise InputError(f"line {lineno}: edge before header")
                if len(parts) != 3:
                    raise InputError(f"line {lineno}: expected 'e <u> <v>'")
                u, v = int(parts[1]), int(parts[2])
                if not (1 <= u <= n and 1 <= v <= n):
                    raise InputError(f"line {lineno}: vertex id out of range 1..{n}")
                edges.append((u, v))
            else:
                raise InputError(f"line {lineno}: unknown line type {tag!r}")
        except ValueError as exc:
            if isinstance(exc, InputError):
                raise
            raise InputError(f"line {lineno}: {exc}") from None
    if n is None:
        raise InputError("missing 'p bgd' header")
    if len(edges) != m:
        raise InputError(f"header announces {m} edges, found {len(edges)}")
    if len({frozenset(e) for e in edges}) != len(edges):
        raise InputError("duplicate edge")
    return build_graph(n, edges)


def format_instance(G: Graph, comment: Optional[str] = None) -> str:
    """Inverse of :func:`parse_instance`; ids must be exactly ``1..n``."""
    n = len(G)
    if set(G.vertices) != set(range(1, n + 1)):
        raise InputError("only graphs on ids 1..n can be written")
    lines = [f"c {comment}"] if comment else []
    edges = G.edges()
    lines.append(f"p bgd {n} {len(edges)}")
    lines += [f"e {u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def _load(path: str) -> Graph:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_instance(text)


def _obstruction_json(obs) -> dict:
    if hasattr(obs, "cycle"):
        return {"hole": list(obs.cycle)}
    return {"diamond": [obs.a, obs.b, obs.c, obs.d]}


def _report(status, solution=None, *, n=0, m=0, k=None, bound=None, rules=None, counters=None, t0=0.0):
    return {
        "status": status,
        "solution": None if solution is None else sorted(solution),
        "kernel": {"n": n, "m": m, "k": k, "bound": bound, "rules": rules or {}},
        "counters": counters or {},
        "wall_time": round(time.perf_counter() - t0, 6),
    }


def _need_k(args):
    if args.k is None:
        raise InputError("--k is required")
    if args.k < 0:
        raise InputError("--k must be non-negative")
    return args.k


def _cmd_solve(args, t0):
    G = _load(args.file)
    k = _need_k(args)
    stats = SearchStats()
    sol = solve(G, k, stats)
    counters = {"branch_nodes": stats.nodes, "searches": stats.roots, "bypasses": stats.bypasses}
    return _report("no" if sol is None else "yes", sol, n=len(G), m=G.number_of_edges(), k=k, counters=counters, t0=t0)


def _cmd_kernelize(args, t0):
    G = _load(args.file)
    k = _need_k(args)
    bound = size_bound(k) if k >= 1 else None
    if bound is not None and bound > len(G):
        print(f"warning: size bound {bound} exceeds |V| = {len(G)}; the input already qualifies", file=sys.stderr)
    res = kernelize(Instance(G, k), jobs=args.jobs)
    inst = res.instance
    if args.trace:
        with open(args.trace, "w") as fh:
            json.dump([ev.to_json() for ev in inst.trace], fh, indent=1)
    counters = {"probes": res.probes, "rule_events": len(inst.trace)}
    if isinstance(res, Answer):
        status = "yes" if res.value else "no"
        counters["witnesses"] = [_obstruction_json(o) for o in res.witnesses]
        out_bound = None
    else:
        status = "reduced"
        out_bound = res.bound
    return _report(
        status,
        [] if status == "yes" else None,
        n=len(inst.graph),
        m=inst.graph.number_of_edges(),
        k=inst.k,
        bound=out_bound,
        rules=rule_histogram(inst.trace),
        counters=counters,
        t0=t0,
    )


def _parse_ids(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise InputError(f"bad vertex list {text!r}") from None


def _cmd_verify(args, t0):
    G = _load(args.file)
    k = _need_k(args)
    S = _parse_ids(args.solution or "")
    unknown = [v for v in S if v not in G]
    if unknown:
        raise InputError(f"vertex ids {unknown} are not in the graph")
    ok = verify(G, S, k)
    return _report("yes" if ok else "no", S, n=len(G), m=G.number_of_edges(), k=k, t0=t0)


def _cmd_oracle(args, t0):
    G = _load(args.file)
    if args.kmax is None or args.kmax < 0:
        raise InputError("--kmax must be given and non-negative")
    res = min_deletion_bruteforce(G, args.kmax)
    sol = None if res is None else res[1]
    return _report("no" if res is None else "yes", sol, n=len(G), m=G.number_of_edges(), k=args.kmax, t0=t0)


def _cmd_stats(args, t0):
    G = _load(args.file)
    dec = block_decomposition(G)
    obs = find_obstruction(G)
    counters = {
        "components": len(G.components()),
        "blocks": len(dec.blocks),
        "cut_vertices": len(dec.cut_vertices),
        "largest_twin_class": max((len(c) for c in true_twin_classes(G)), default=0),
        "obstruction": None if obs is None else _obstruction_json(obs),
    }
    status = "yes" if is_block_graph(G) else "no"
    return _report(status, n=len(G), m=G.number_of_edges(), counters=counters, t0=t0)


def _cmd_gen(args):
    if args.n is None or args.n < 0:
        raise InputError("--n must be given and non-negative")
    seed = args.seed if args.seed is not None else 0
    if args.k is not None:
        G, planted = gen_planted(PlantedSpec(args.n, args.k, seed))
        note = f"planted n={args.n} k={args.k} seed={seed} solution {' '.join(map(str, sorted(planted)))}"
    else:
        p = 0.5 if args.p is None else args.p
        G = gen_gnp(args.n, p, seed)
        note = f"gnp n={args.n} p={p} seed={seed}"
    text = format_instance(G, note)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="blockdel", description="Block Graph Deletion toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    def with_file(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file", help="instance file (p bgd / e lines)")
        return p

    p = with_file("solve", "exact FPT solver")
    p.add_argument("--k", type=int)
    p = with_file("kernelize", "apply the reduction rules")
    p.add_argument("--k", type=int)
    p.add_argument("--trace", help="write the reduction events as JSON")
    p.add_argument("--jobs", type=int, default=1, help="processes for vertex probes")
    p = with_file("verify", "check a deletion set")
    p.add_argument("--k", type=int)
    p.add_argument("--solution", help="vertex ids, comma or space separated")
    p = with_file("oracle", "brute-force minimum deletion set")
    p.add_argument("--kmax", type=int)
    with_file("stats", "structural summary of an instance")
    p = sub.add_parser("gen", help="write a random instance")
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--k", type=int, help="planted deletion size (planted generator)")
    p.add_argument("--seed", type=int)
    p.add_argument("--out")
    return ap


def run(argv=None) -> int:
    args = _parser().parse_args(argv)
    t0 = time.perf_counter()
    handlers = {
        "solve": _cmd_solve,
        "kernelize": _cmd_kernelize,
        "verify": _cmd_verify,
        "oracle": _cmd_oracle,
        "stats": _cmd_stats,
    }
    try:
        if args.command == "gen":
            _cmd_gen(args)
            return 0
        report = handlers[args.command](args, t0)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


def main() -> None:
    sys.exit(run())
