"""Run the reduction rules and replay the recorded trace.

A real kernel only shrinks inputs above the size threshold, which is in the
hundreds of thousands even for k = 1.  Passing a tiny ``bound`` forces the
driver through every rule, including the expansion step on a hub vertex.
"""
from blockdel import Instance, kernelize, replay, size_bound
from blockdel.kernel import m_star, rule_histogram
from blockdel.oracle import gen_hub

print(f"size threshold for k=1: {size_bound(1)}")

G, hub = gen_hub(1, seed=3)
print(f"hub instance: {len(G)} vertices, {G.number_of_edges()} edges, hub {hub}, degree {G.degree(hub)}")

res = kernelize(Instance(G, 1), bound=1)
inst = res.instance
print(f"result: {type(res).__name__}, now {len(inst.graph)} vertices, k={inst.k}")
print(f"rules applied: {rule_histogram(inst.trace)}")

for ev in inst.trace:
    if ev.rule == "6":
        p = ev.params
        print(f"rule 6 at {p['v']}: X'={sorted(p['X_prime'])}, n+m* {p['measure_before']} -> {p['measure_after']}")

H, k = replay(G, 1, inst.trace)
print(f"replayed trace reproduces the kernel: {H == inst.graph and k == inst.k}")
print(f"n + m* before {len(G) + m_star(G)}, after {len(H) + m_star(H)}")
