"""Exhaustive enumeration of labelled trees for non-split links.

A vertex carries a knot: a multiset of signed odd values ``q`` with ``|q| >= 3``
(size ``sum |q|``; the empty multiset is the unknot, size 0). An edge carries a
two-component torus link ``T(q)`` with ``q`` even: size 2 has one label (the
Hopf link is its own mirror image), each even size ``>= 4`` has the two labels
``+-q``. Trees are counted up to isomorphisms preserving all labels.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

import networkx as nx


@lru_cache(maxsize=None)
def knot_labels(size: int) -> tuple:
    """Multisets of signed odd values with ``|q| >= 3`` and ``sum |q| = size``."""
    alphabet = [q for a in range(3, size + 1, 2) for q in (-a, a)]
    out = []

    def rec(remaining, start, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for i in range(start, len(alphabet)):
            a = abs(alphabet[i])
            if a > remaining:
                break
            acc.append(alphabet[i])
            rec(remaining - a, i, acc)      # non-decreasing index: each multiset once
            acc.pop()

    rec(size, 0, [])
    return tuple(out)


def edge_labels(size: int) -> tuple:
    if size == 2:
        return (2,)
    if size >= 4 and size % 2 == 0:
        return (size, -size)
    return ()


def _compositions(total: int, parts: int, allowed) -> list:
    """Ordered tuples of ``parts`` sizes from ``allowed`` summing to ``total``."""
    if parts == 0:
        return [()] if total == 0 else []
    out = []
    for s in allowed:
        if s > total:
            break
        for rest in _compositions(total - s, parts - 1, allowed):
            out.append((s,) + rest)
    return out


def _rooted_code(adj, vlab, elab, v, parent):
    children = sorted(
        (str(elab[frozenset((v, w))]), _rooted_code(adj, vlab, elab, w, v))
        for w in adj[v] if w != parent
    )
    return "(" + str(vlab[v]) + "".join(f"[{e}]{c}" for e, c in children) + ")"


def canonical_code(tree: nx.Graph, vlab: dict, elab: dict) -> str:
    """Label-aware canonical string: the minimum rooted code over the tree's centres."""
    adj = {v: list(tree.neighbors(v)) for v in tree.nodes}
    centres = nx.center(tree) if tree.number_of_nodes() > 1 else list(tree.nodes)
    return min(_rooted_code(adj, vlab, elab, c, None) for c in centres)


def labelled_trees(n: int):
    """Yield ``(tree, vertex_labels, edge_labels)`` of total size ``n``, with repetitions."""
    max_vertices = n // 2 + 1
    for order in range(1, max_vertices + 1):
        n_edges = order - 1
        for tree in nx.nonisomorphic_trees(order) if order > 1 else [nx.empty_graph(1)]:
            edges = list(tree.edges)
            nodes = list(tree.nodes)
            esize_choices = [c for total in range(2 * n_edges, n + 1, 2)
                             for c in _compositions(total, n_edges, range(2, n + 1, 2))]
            for esizes in esize_choices:
                rest = n - sum(esizes)
                vsize_options = [s for s in range(rest + 1) if knot_labels(s)]
                for vsizes in _compositions(rest, order, vsize_options):
                    elists = [edge_labels(s) for s in esizes]
                    vlists = [knot_labels(s) for s in vsizes]
                    for el in product(*elists):
                        elab = {frozenset(e): q for e, q in zip(edges, el)}
                        for vl in product(*vlists):
                            yield tree, dict(zip(nodes, vl)), elab


def enumerate_T_trees(n: int) -> int:
    """Number of label-preserving isomorphism classes of trees of size ``n``."""
    if n < 0:
        raise ValueError("size must be nonnegative")
    codes = set()
    for tree, vlab, elab in labelled_trees(n):
        codes.add(canonical_code(tree, vlab, elab))
    return len(codes)


def enumerate_pointed_T_trees(n: int) -> int:
    """Classes of trees of size ``n`` with one distinguished vertex."""
    codes = set()
    for tree, vlab, elab in labelled_trees(n):
        adj = {v: list(tree.neighbors(v)) for v in tree.nodes}
        for root in tree.nodes:
            codes.add(_rooted_code(adj, vlab, elab, root, None))
    return len(codes)
