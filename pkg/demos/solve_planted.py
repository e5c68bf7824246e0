"""Plant a small deletion set in a random block graph and recover it.

The generator builds a block graph, then adds k vertices with random edges.
The solver should find a deletion set of size at most k; it need not be the
planted one, but no smaller set may exist when the oracle says so.
"""
from blockdel import SearchStats, solve
from blockdel.oracle import PlantedSpec, gen_planted, min_deletion_bruteforce, verify

spec = PlantedSpec(n=30, k=3, seed=11, noise_p=0.3)
G, planted = gen_planted(spec)
print(f"graph: {len(G)} vertices, {G.number_of_edges()} edges")
print(f"planted set: {sorted(planted)}")

stats = SearchStats()
for k in range(spec.k + 1):
    sol = solve(G, k, stats)
    if sol is None:
        print(f"k={k}: no solution")
    else:
        print(f"k={k}: delete {sorted(sol)} (valid: {verify(G, sol, k)})")

best = min_deletion_bruteforce(G, spec.k)
print(f"brute force minimum: {best[0]} via {sorted(best[1])}")
print(f"search nodes {stats.nodes}, disjoint searches {stats.roots}, bypasses {stats.bypasses}")
