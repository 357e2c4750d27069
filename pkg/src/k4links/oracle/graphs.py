"""Series-parallel recognition of multigraphs."""

from __future__ import annotations

from collections import Counter
from itertools import product
from typing import Iterable

from .rotation import RotationMap, vertex_of


def underlying_edges(m: RotationMap) -> list:
    return [(vertex_of(d), vertex_of(e)) for d, e in m.edges()]


def reduces_to_nothing(edges: Iterable[tuple]) -> bool:
    """Exhaustive series-parallel reduction of a multigraph.

    Deletes loops and vertices of degree <= 1, merges parallel edges and
    suppresses degree-2 vertices. A graph has no K4 minor iff nothing is left:
    a stuck graph is simple with minimum degree >= 3 and so contains K4.
    """
    mult = Counter()
    for u, v in edges:
        if u != v:
            mult[frozenset((u, v))] = 1          # parallel edges merge, loops vanish
    adj = {}
    for e in mult:
        u, v = tuple(e)
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    stack = list(adj)
    while stack:
        x = stack.pop()
        if x not in adj:
            continue
        nb = adj[x]
        if len(nb) <= 1:
            for y in nb:
                adj[y].discard(x)
                stack.append(y)
            del adj[x]
        elif len(nb) == 2:
            u, w = nb
            adj[u].discard(x)
            adj[w].discard(x)
            adj[u].add(w)                    # a set: merging with an existing u-w edge is automatic
            adj[w].add(u)
            del adj[x]
            stack.extend((u, w))
    return not adj


def is_k4_minor_free(m: RotationMap) -> bool:
    return reduces_to_nothing(underlying_edges(m))


def has_k4_minor_bruteforce(n: int, edges: Iterable[tuple]) -> bool:
    """Direct minor search: four disjoint connected branch sets, pairwise adjacent.

    Exponential (5^n assignments); intended for graphs with a handful of vertices.
    """
    edges = [(u, v) for u, v in edges if u != v]
    adj = {i: set() for i in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)

    def connected(part):
        part = set(part)
        start = next(iter(part))
        seen, stack = {start}, [start]
        while stack:
            x = stack.pop()
            for y in adj[x] & part:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen == part

    for assign in product(range(5), repeat=n):
        parts = [[i for i in range(n) if assign[i] == b] for b in range(4)]
        if any(not p for p in parts):
            continue
        if not all(connected(p) for p in parts):
            continue
        touch = set()
        for u, v in edges:
            a, b = assign[u], assign[v]
            if a != b and a < 4 and b < 4:
                touch.add(frozenset((a, b)))
        if len(touch) == 6:
            return True
    return False
