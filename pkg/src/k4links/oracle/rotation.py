"""Rotation systems of 4-regular plane maps.

Darts ``4v .. 4v+3`` belong to vertex ``v`` and are listed counterclockwise,
so the rotation is fixed by the labelling and a map is determined by its edge
involution ``alpha``. A crossing bit per vertex selects the overcrossing pair:
``0`` for darts ``{4v, 4v+2}`` and ``1`` for ``{4v+1, 4v+3}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence


def vertex_of(d: int) -> int:
    return d >> 2


def rotate(d: int, k: int = 1) -> int:
    """The dart ``k`` steps counterclockwise from ``d`` at the same vertex."""
    return (d & ~3) | ((d + k) & 3)


def opposite(d: int) -> int:
    return rotate(d, 2)


@dataclass(frozen=True)
class RotationMap:
    alpha: tuple
    crossings: tuple | None = None
    root_dart: int = 0

    @property
    def n_vertices(self) -> int:
        return len(self.alpha) // 4

    @property
    def n_edges(self) -> int:
        return len(self.alpha) // 2

    @property
    def darts(self) -> range:
        return range(len(self.alpha))

    def edges(self) -> list:
        return [(d, e) for d, e in enumerate(self.alpha) if d < e]

    def face_count(self) -> int:
        seen = [False] * len(self.alpha)
        faces = 0
        for d in self.darts:
            if not seen[d]:
                faces += 1
                x = d
                while not seen[x]:
                    seen[x] = True
                    x = rotate(self.alpha[x])
        return faces

    def euler_characteristic(self) -> int:
        return self.n_vertices - self.n_edges + self.face_count()

    def is_planar(self) -> bool:
        return self.euler_characteristic() == 2

    def is_connected(self) -> bool:
        if not self.alpha:
            return True
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for k in range(4):
                w = vertex_of(self.alpha[4 * v + k])
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n_vertices

    def over_pair(self, v: int) -> tuple:
        b = self.crossings[v]
        return (4 * v + b, 4 * v + b + 2)

    def with_crossings(self, bits: Sequence[int]) -> "RotationMap":
        if len(bits) != self.n_vertices:
            raise ValueError("one crossing bit per vertex")
        return RotationMap(self.alpha, tuple(bits), self.root_dart)

    def all_crossings(self) -> Iterator["RotationMap"]:
        for bits in product((0, 1), repeat=self.n_vertices):
            yield self.with_crossings(bits)

    def rerooted(self, root: int) -> "RotationMap":
        """Canonical relabelling with ``root`` as dart 0."""
        return canonical_form(self, root)


def canonical_form(m: RotationMap, root: int | None = None) -> RotationMap:
    """Relabel darts by traversal from the root.

    Vertices are numbered in order of discovery; each new vertex is entered
    through a dart which becomes its first (counterclockwise) dart. The scan
    always extends from the smallest labelled dart, so two rooted maps are
    equal iff their canonical forms are identical.
    """
    if root is None:
        root = m.root_dart
    new_of = {}
    order = []          # old dart of each new label
    v_old = []

    def visit(entry):
        v_old.append(vertex_of(entry))
        for k in range(4):
            d = rotate(entry, k)
            new_of[d] = len(order)
            order.append(d)

    visit(root)
    label = 0
    while label < len(order):
        partner = m.alpha[order[label]]
        if partner not in new_of:
            visit(partner)
        label += 1
    if len(order) != len(m.alpha):
        raise ValueError("map is not connected")
    old_of = order
    alpha = tuple(new_of[m.alpha[old_of[n]]] for n in range(len(m.alpha)))
    crossings = None
    if m.crossings is not None:
        bits = []
        for v in range(len(v_old)):
            first_old = old_of[4 * v]
            shift = first_old & 3
            bits.append(m.crossings[v_old[v]] ^ (shift & 1))
        crossings = tuple(bits)
    return RotationMap(alpha, crossings, 0)


def enumerate_rooted_maps(v_max: int, exact: bool = False) -> Iterator[RotationMap]:
    """Connected rooted 4-regular plane maps with ``1 <= v <= v_max`` vertices.

    Maps are produced directly in canonical form: the smallest unpaired dart
    is either paired with a larger unpaired dart or sent to a new vertex whose
    darts are labelled counterclockwise from the entry dart. Every connected
    rooted map arises from exactly one such sequence of choices. With
    ``exact`` only maps on exactly ``v_max`` vertices are produced.
    """
    if v_max < 1:
        return
    alpha = [-1] * (4 * v_max)

    def rec(n_vert):
        top = 4 * n_vert
        try:
            d = alpha.index(-1, 0, top)
        except ValueError:
            if exact and n_vert != v_max:
                return
            m = RotationMap(tuple(alpha[:top]))
            if m.is_planar():
                yield m
            return
        for e in range(d + 1, top):
            if alpha[e] == -1:
                alpha[d], alpha[e] = e, d
                yield from rec(n_vert)
                alpha[d] = alpha[e] = -1
        if n_vert < v_max:
            e = top
            alpha[d], alpha[e] = e, d
            yield from rec(n_vert + 1)
            alpha[d] = alpha[e] = -1

    yield from rec(1)


def count_rooted_maps(v: int) -> int:
    return sum(1 for _ in enumerate_rooted_maps(v, exact=True))
