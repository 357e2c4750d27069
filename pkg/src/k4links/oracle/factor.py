"""Torus-link factorization of K4-minor-free link-diagrams.

A diagram is reduced by smoothing nugatory crossings (cut vertices, including
vertices carrying a loop) and then split at 2-edge cuts until every piece is a
chain of doubled edges. Inside a chain each crossing gets a sign: with the
darts of a vertex listed counterclockwise as ``d0 d1 d2 d3`` and ``d0, d1``
leading to the same neighbour, the crossing is ``+1`` when ``{d0, d2}`` is
the overcrossing pair. Swapping the roles of the two neighbours names the
same pair, so the sign does not depend on an orientation of the chain.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .graphs import is_k4_minor_free
from .rotation import RotationMap, opposite, rotate, vertex_of


class FactorizationError(ValueError):
    pass


@dataclass(frozen=True)
class TorusFactorization:
    factors: tuple          # signed crossing sum q of every chain, sorted
    chain_lengths: tuple    # number of crossings of each chain, aligned with factors
    loop_count: int
    components: int

    @property
    def crossing_total(self) -> int:
        return sum(self.chain_lengths) + self.loop_count

    def factor_multiset(self) -> Counter:
        return Counter(self.factors)


def count_components(m: RotationMap) -> int:
    """Link components: cycles of ``d -> opposite(alpha(d))``, each met in both directions."""
    seen = [False] * len(m.alpha)
    cycles = 0
    for d in m.darts:
        if not seen[d]:
            cycles += 1
            x = d
            while not seen[x]:
                seen[x] = True
                x = opposite(m.alpha[x])
    return cycles // 2


class _Piece:
    """Mutable sub-diagram: vertices with their darts and the edge pairing."""

    def __init__(self, vertices, alpha, over):
        self.vertices = set(vertices)
        self.alpha = alpha
        self.over = over

    def darts(self, v):
        return [4 * v + k for k in range(4)]

    def neighbours(self, v, skip=None):
        return {vertex_of(self.alpha[d]) for d in self.darts(v)} - {skip}

    def _reach(self, start, removed_vertex=None, removed_darts=()):
        seen, stack = {start}, [start]
        while stack:
            x = stack.pop()
            for d in self.darts(x):
                if d in removed_darts:
                    continue
                y = vertex_of(self.alpha[d])
                if y != removed_vertex and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    def find_cut_vertex(self):
        """A vertex with a loop or whose removal disconnects; returns (v, i)
        where ``d_i, d_{i+1}`` and ``d_{i+2}, d_{i+3}`` lie on different sides."""
        for v in sorted(self.vertices):
            ds = self.darts(v)
            for i in range(4):
                if self.alpha[ds[i]] == ds[(i + 1) % 4]:
                    return v, i
            others = self.vertices - {v}
            if not others:
                continue
            side = self._reach(vertex_of(self.alpha[ds[0]]), removed_vertex=v)
            if side != others:
                in_side = [vertex_of(self.alpha[d]) in side for d in ds]
                for i in range(4):
                    if in_side[i] == in_side[(i + 1) % 4] and in_side[i] != in_side[(i + 2) % 4]:
                        return v, i
                raise FactorizationError("cut vertex with interleaved sides: not a plane diagram")
        return None

    def smooth(self, v, i):
        ds = self.darts(v)
        pair = {}
        for a, b in ((ds[(i + 1) % 4], ds[(i + 2) % 4]), (ds[(i + 3) % 4], ds[i])):
            pair[a], pair[b] = b, a
        at_v = set(ds)
        for d in ds:
            e = self.alpha[d]
            if e in at_v:
                continue
            cur = d
            t = self.alpha[pair[cur]]
            while t in at_v:
                cur = t
                t = self.alpha[pair[cur]]
            self.alpha[e], self.alpha[t] = t, e
        for d in ds:
            del self.alpha[d]
        self.vertices.discard(v)
        self.over.pop(v, None)

    def find_two_edge_cut(self):
        edges = sorted({(min(d, e), max(d, e)) for d, e in self.alpha.items()})
        if len(self.vertices) < 2:
            return None
        start = min(self.vertices)
        for e1, e2 in combinations(edges, 2):
            side = self._reach(start, removed_darts=set(e1) | set(e2))
            if side != self.vertices:
                return e1, e2, side
        return None

    def split(self, e1, e2, side):
        s_darts, t_darts = [], []
        for d in e1 + e2:
            (s_darts if vertex_of(d) in side else t_darts).append(d)
        if len(s_darts) != 2:
            raise FactorizationError("2-edge cut does not cross between the sides")
        alpha = dict(self.alpha)
        alpha[s_darts[0]], alpha[s_darts[1]] = s_darts[1], s_darts[0]
        alpha[t_darts[0]], alpha[t_darts[1]] = t_darts[1], t_darts[0]
        other = self.vertices - side
        pieces = []
        for vs in (side, other):
            a = {d: alpha[d] for v in vs for d in self.darts(v)}
            pieces.append(_Piece(vs, a, {v: self.over[v] for v in vs}))
        return pieces

    def chain_sum(self) -> tuple:
        n = len(self.vertices)
        q = 0
        if n == 2:
            x, y = sorted(self.vertices)
            dx = self.darts(x)
            if any(vertex_of(self.alpha[d]) != y for d in dx):
                raise FactorizationError("two-vertex block is not four parallel edges")
            # bundles {d0, d1} and {d2, d3} at x, carried to y along the edges
            bundle_of = {self.alpha[d]: k // 2 for k, d in enumerate(dx)}
            q += self._sign(x, 0)
            dy = self.darts(y)
            for i in range(4):
                if bundle_of[dy[i]] == bundle_of[dy[(i + 1) % 4]]:
                    q += self._sign(y, i)
                    break
            return q, 2
        for v in self.vertices:
            ds = self.darts(v)
            nb = [vertex_of(self.alpha[d]) for d in ds]
            if len(set(nb)) != 2 or v in nb:
                raise FactorizationError("block is not a chain of doubled edges")
            for i in range(4):
                if nb[i] == nb[(i + 1) % 4]:
                    q += self._sign(v, i)
                    break
            else:
                raise FactorizationError("doubled edges are not consecutive in the rotation")
        return q, n

    def _sign(self, v, i):
        left = {4 * v + i % 4, 4 * v + (i + 2) % 4}
        return 1 if set(self.over[v]) == left else -1


def factorize(m: RotationMap) -> TorusFactorization:
    if m.crossings is None:
        raise FactorizationError("diagram has no crossing information")
    if not m.is_connected() or not m.is_planar():
        raise FactorizationError("diagram must be a connected plane map")
    if not is_k4_minor_free(m):
        raise FactorizationError("diagram has a K4 minor")
    over = {v: m.over_pair(v) for v in range(m.n_vertices)}
    stack = [_Piece(range(m.n_vertices), dict(enumerate(m.alpha)), over)]
    loops = 0
    chains = []
    while stack:
        piece = stack.pop()
        if not piece.vertices:
            continue
        cut = piece.find_cut_vertex()
        if cut is not None:
            piece.smooth(*cut)
            loops += 1
            stack.append(piece)
            continue
        two_cut = piece.find_two_edge_cut()
        if two_cut is not None:
            stack.extend(piece.split(*two_cut))
            continue
        chains.append(piece.chain_sum())
    chains.sort()
    return TorusFactorization(
        factors=tuple(q for q, _ in chains),
        chain_lengths=tuple(n for _, n in chains),
        loop_count=loops,
        components=count_components(m),
    )


def is_minimal(m: RotationMap, fac: TorusFactorization | None = None) -> bool:
    fac = factorize(m) if fac is None else fac
    return fac.loop_count == 0 and all(
        abs(q) == n and abs(q) >= 2 for q, n in zip(fac.factors, fac.chain_lengths))


def is_unknot(m: RotationMap, fac: TorusFactorization | None = None) -> bool:
    fac = factorize(m) if fac is None else fac
    return fac.components == 1 and all(abs(q) <= 1 for q in fac.factors)
