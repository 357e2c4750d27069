"""Direct counts of rooted diagrams by number of crossings."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .factor import factorize, is_minimal, is_unknot
from .graphs import is_k4_minor_free
from .rotation import canonical_form, enumerate_rooted_maps


@dataclass(frozen=True)
class DiagramCounts:
    vertices: int
    maps: int           # rooted 4-regular plane maps
    k4_free_maps: int
    diagrams: int       # K4-minor-free maps with a crossing choice at every vertex
    minimal: int
    unknot: int


def diagram_counts(v: int) -> DiagramCounts:
    """Classify every crossing assignment of every rooted map on ``v`` vertices."""
    maps = free = diagrams = minimal = unknot = 0
    for m in enumerate_rooted_maps(v, exact=True):
        maps += 1
        if not is_k4_minor_free(m):
            continue
        free += 1
        for d in m.all_crossings():
            fac = factorize(d)
            diagrams += 1
            minimal += is_minimal(d, fac)
            unknot += is_unknot(d, fac)
    return DiagramCounts(v, maps, free, diagrams, minimal, unknot)


def automorphism_fraction(v: int, crossings: bool = True) -> Fraction:
    """Share of unrooted K4-minor-free diagrams (or bare maps) with a nontrivial
    orientation-preserving automorphism.

    A rooted object has one iff re-rooting at another dart reproduces it; the
    unrooted classes are the orbits under re-rooting.
    """
    seen = set()
    classes = symmetric = 0
    for m in enumerate_rooted_maps(v, exact=True):
        if not is_k4_minor_free(m):
            continue
        for d in (m.all_crossings() if crossings else [m]):
            if d in seen:
                continue
            rootings = [canonical_form(d, r) for r in d.darts]
            seen.update(rootings)
            classes += 1
            if sum(1 for r in rootings if r == d) > 1:
                symmetric += 1
    return Fraction(symmetric, classes)
