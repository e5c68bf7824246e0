"""Constructive alpha-expansion in unbalanced bipartite graphs."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping

from .exceptions import InputError, InternalError

__all__ = ["ExpansionResult", "expand", "check_expansion"]


@dataclass(frozen=True)
class ExpansionResult:
    X_prime: frozenset
    Y_prime: frozenset
    phi: Mapping[Hashable, frozenset]


def _max_flow(xs, ys, adjacency, alpha):
    """Unit-capacity assignment of up to ``alpha`` Y-elements per x.

    Returns ``(assigned, reachable)`` where ``assigned[x]`` is the set of y
    routed to x and ``reachable`` is the source side of a minimum cut.
    Augmenting paths are found by BFS over sorted orders, so the result is
    deterministic.
    """
    owner: dict = {}
    assigned = {x: set() for x in xs}
    nbrs = {x: sorted(adjacency.get(x, ())) for x in xs}
    yset = set(ys)
    for x in xs:
        nbrs[x] = [y for y in nbrs[x] if y in yset]

    def augment():
        # BFS from every x with spare capacity; alternate x -> free edge -> y
        # and y -> its current owner.
        prev_y = {}
        prev_x = {}
        q = deque()
        seen_x = set()
        for x in xs:
            if len(assigned[x]) < alpha:
                q.append(x)
                seen_x.add(x)
                prev_x[x] = None
        while q:
            x = q.popleft()
            for y in nbrs[x]:
                # x -> y has unbounded capacity, so owned y's are reachable too
                if y in prev_y:
                    continue
                prev_y[y] = x
                o = owner.get(y)
                if o is None:
                    while True:
                        px = prev_y[y]
                        old = owner.get(y)
                        owner[y] = px
                        assigned[px].add(y)
                        if old is not None:
                            assigned[old].discard(y)
                        back = prev_x[px]
                        if back is None:
                            return True, None
                        y = back
                if o not in seen_x:
                    seen_x.add(o)
                    prev_x[o] = y
                    q.append(o)
        return False, (seen_x, set(prev_y))

    # Saturate by repeated single-unit augmentation (sizes here are tiny).
    while True:
        ok, cut = augment()
        if not ok:
            return assigned, cut


def expand(X: Iterable, Y: Iterable, adjacency: Mapping, alpha: int) -> ExpansionResult:
    """Nonempty ``X' ⊆ X``, ``Y' ⊆ Y`` and ``phi`` giving each ``x`` in ``X'``
    a private set of exactly ``alpha`` neighbors in ``Y'``, with no vertex of
    ``X - X'`` adjacent to ``Y'``.

    ``adjacency`` maps each x to the Y-elements it is adjacent to.  Elements
    of each side must be mutually orderable (ties are broken by sort order).
    Requires ``|Y| >= alpha * |X|`` and every y having a neighbor in X.
    """
    xs = sorted(set(X))
    ys = sorted(set(Y))
    if alpha < 1:
        raise InputError("alpha must be positive")
    if not xs:
        raise InputError("X must be nonempty")
    if len(ys) < alpha * len(xs):
        raise InputError("|Y| < alpha * |X|")
    covered = set()
    for x in xs:
        covered.update(adjacency.get(x, ()))
    if not set(ys) <= covered:
        raise InputError("some element of Y has no neighbor in X")

    while True:
        assigned, cut = _max_flow(xs, ys, adjacency, alpha)
        if all(len(assigned[x]) == alpha for x in xs):
            phi = {x: frozenset(assigned[x]) for x in xs}
            result = ExpansionResult(frozenset(xs), frozenset(ys), phi)
            if not check_expansion(X, Y, adjacency, alpha, result):
                raise InternalError("expansion failed its own contract check")
            return result
        # Min cut = vertex cover {x unreachable} + {y reachable}; keep the
        # unreachable x's and drop the reachable y's.
        reach_x, reach_y = cut
        xs = [x for x in xs if x not in reach_x]
        ys = [y for y in ys if y not in reach_y]
        if not xs:
            raise InternalError("expansion shrank X to nothing")


def check_expansion(X, Y, adjacency: Mapping, alpha: int, result: ExpansionResult) -> bool:
    """Validate an expansion against its defining conditions."""
    Xs, Ys = set(X), set(Y)
    Xp, Yp, phi = result.X_prime, result.Y_prime, result.phi
    if not Xp or not Yp or not Xp <= Xs or not Yp <= Ys:
        return False
    touching = {x for x in Xs if set(adjacency.get(x, ())) & Yp}
    if touching != Xp:
        return False
    if set(phi) != Xp:
        return False
    used = set()
    for x in Xp:
        img = phi[x]
        if len(img) != alpha or not img <= Yp or not img <= set(adjacency.get(x, ())):
            return False
        if used & img:
            return False
        used |= img
    return True
