"""Arc systems on a 3-punctured sphere.

A :class:`PantsPattern` is a pair of pants with three boundary circles
(numbered 1, 2, 3) carrying a family of disjoint properly embedded arcs.
Each arc endpoint occupies a *slot* on a boundary circle, and each circle
carries a cyclic order of its slots, listed in the direction of the induced
boundary orientation (surface on the left).  That rotation system is all the
data needed to recover the regions of the pants cut along the arcs.

Two patterns glued along their boundary circles form a closed genus two
surface (:class:`GluedSurface`), on which the arcs close up into curves.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

SIDES = ("P", "R")
CIRCLES = (1, 2, 3)


class PatternError(ValueError):
    """Structural problem with a pattern or a gluing."""


class NonDiskRegionError(PatternError):
    pass


@dataclass(frozen=True, order=True)
class BoundaryId:
    side: str
    index: int

    def __post_init__(self):
        if self.side not in SIDES or self.index not in CIRCLES:
            raise ValueError(f"bad boundary id {self.side}{self.index}")

    def __str__(self):
        return f"∂{self.index}{self.side}"


_KIND_ORDER = {"a": 0, "b": 1, "c": 2, "d": 3}


@dataclass(frozen=True)
class ArcLabel:
    """Name of an arc of the pattern, e.g. ``d_2^P``.

    ``subscript`` is ``None`` for the single arcs ``a`` (only on P) and
    ``c`` (only on R).
    """

    kind: str
    subscript: int | None
    side: str

    def __post_init__(self):
        if self.kind not in _KIND_ORDER or self.side not in SIDES:
            raise ValueError(f"bad arc label {self.kind}/{self.side}")
        if self.kind == "a" and self.side != "P":
            raise ValueError("arc a lives on P")
        if self.kind == "c" and self.side != "R":
            raise ValueError("arc c lives on R")
        if (self.kind in "ac") != (self.subscript is None):
            raise ValueError(f"arc {self.kind} has wrong subscript {self.subscript}")

    def sort_key(self):
        return (_KIND_ORDER[self.kind], self.subscript or 0, self.side)

    def __lt__(self, other: "ArcLabel"):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        sub = "" if self.subscript is None else str(self.subscript)
        return f"{self.kind}{sub}{self.side}"

    @classmethod
    def parse(cls, text: str) -> "ArcLabel":
        """Inverse of ``str``: ``"d2P"`` -> ``ArcLabel("d", 2, "P")``."""
        kind, side, sub = text[0], text[-1], text[1:-1]
        return cls(kind, int(sub) if sub else None, side)


Endpoint = tuple[int, int]  # (circle, slot)


@dataclass(frozen=True)
class Arc:
    label: ArcLabel
    end1: Endpoint
    end2: Endpoint

    def other_end(self, end: Endpoint) -> Endpoint:
        if end == self.end1:
            return self.end2
        if end == self.end2:
            return self.end1
        raise KeyError(end)


@dataclass(frozen=True)
class Region:
    """A component of the pants cut along its arcs.

    ``word`` alternates boundary segments (``"∂i"``) and arc sides, read
    with the region on the left, rotated to its lexicographically least form.
    ``segments`` lists the boundary segments as ``(circle, from_slot,
    to_slot)`` in the same cyclic order.
    """

    word: tuple[str, ...]
    segments: tuple[tuple[int, int, int], ...]
    arcs: tuple[ArcLabel, ...]

    @property
    def sides(self) -> int:
        return len(self.word)

    def circles(self) -> set[int]:
        return {c for c, _, _ in self.segments}


@dataclass(frozen=True)
class PantsPattern:
    side: str
    arcs: tuple[Arc, ...]
    rotation: dict[int, tuple[int, ...]] = field(hash=False)

    def __post_init__(self):
        used: dict[Endpoint, ArcLabel] = {}
        for arc in self.arcs:
            if arc.label.side != self.side:
                raise PatternError(f"{arc.label} does not live on {self.side}")
            for end in (arc.end1, arc.end2):
                if end in used:
                    raise PatternError(f"slot {end} used by {used[end]} and {arc.label}")
                used[end] = arc.label
        slots = {(c, s) for c, order in self.rotation.items() for s in order}
        if set(self.rotation) != set(CIRCLES):
            raise PatternError("rotation must list all three circles")
        if slots != set(used):
            extra = sorted(slots ^ set(used))
            raise PatternError(f"slots and arc endpoints disagree at {extra}")
        for c, order in self.rotation.items():
            if len(set(order)) != len(order):
                raise PatternError(f"repeated slot on circle {c}")

    def arc_at(self) -> dict[Endpoint, Arc]:
        return {end: arc for arc in self.arcs for end in (arc.end1, arc.end2)}

    def arc(self, label: ArcLabel) -> Arc:
        for arc in self.arcs:
            if arc.label == label:
                return arc
        raise KeyError(label)

    def successor(self) -> dict[Endpoint, Endpoint]:
        succ = {}
        for c, order in self.rotation.items():
            for i, s in enumerate(order):
                succ[(c, s)] = (c, order[(i + 1) % len(order)])
        return succ

    def endpoint_counts(self) -> dict[int, int]:
        return {c: len(order) for c, order in self.rotation.items()}


def _canonical_rotation(items: list) -> int:
    """Even offset giving the lexicographically least rotation of ``items``."""
    n = len(items)
    best = min(range(0, n, 2), key=lambda k: items[k:] + items[:k])
    return best


def region_decomposition(pp: PantsPattern) -> list[Region]:
    """Regions of the pants cut along its arcs, each a disk.

    Faces are the orbits of ``z -> partner(succ(z))`` on slots: a region
    runs along a boundary segment from ``z`` to ``succ(z)``, then along the
    arc starting at ``succ(z)`` to its far endpoint.  A pattern with no arcs
    yields the whole pants as a single (non-disk) region.
    """
    if not pp.arcs:
        return [Region(word=("∂1", "∂2", "∂3"), segments=(), arcs=())]
    empty = [c for c, order in pp.rotation.items() if not order]
    if empty:
        raise NonDiskRegionError(f"circle(s) {empty} carry no arc endpoints")
    at = pp.arc_at()
    succ = pp.successor()
    seen: set[Endpoint] = set()
    regions = []
    for start in sorted(at):
        if start in seen:
            continue
        z = start
        segs, arcs, word = [], [], []
        while z not in seen:
            seen.add(z)
            nz = succ[z]
            arc = at[nz]
            segs.append((z[0], z[1], nz[1]))
            arcs.append(arc.label)
            word.extend([f"∂{z[0]}", str(arc.label)])
            z = arc.other_end(nz)
        if z != start:
            raise NonDiskRegionError(f"traversal from {start} closed at {z}")
        k = _canonical_rotation(word)
        j = k // 2
        regions.append(Region(
            word=tuple(word[k:] + word[:k]),
            segments=tuple(segs[j:] + segs[:j]),
            arcs=tuple(arcs[j:] + arcs[:j]),
        ))
    # pants has Euler characteristic -1; every essential arc cut adds one
    if len(regions) != len(pp.arcs) - 1:
        raise NonDiskRegionError(
            f"{len(regions)} regions for {len(pp.arcs)} arcs: some region is not a disk")
    regions.sort(key=lambda r: r.word)
    return regions


def hexagon_census(pp: PantsPattern) -> tuple[list[Region], int]:
    """Hexagonal regions and the number of rectangles.

    Raises :class:`PatternError` if any region is neither.
    """
    regions = region_decomposition(pp)
    hexagons = [r for r in regions if r.sides == 6]
    rectangles = sum(1 for r in regions if r.sides == 4)
    odd = [r.word for r in regions if r.sides not in (4, 6)]
    if odd:
        raise PatternError(f"regions that are neither rectangles nor hexagons: {odd}")
    return hexagons, rectangles


@dataclass(frozen=True)
class GluedSurface:
    """Two pants glued along their boundary circles.

    ``gluing`` sends each P slot to the R slot at the same point of the
    common boundary circle.
    """

    P: PantsPattern
    R: PantsPattern
    gluing: dict[Endpoint, Endpoint] = field(hash=False)

    def check_gluing(self):
        """Gluing must be a bijection per circle reversing the cyclic orders,
        since the two pants induce opposite orientations on each circle."""
        for c in CIRCLES:
            ps, rs = self.P.rotation[c], self.R.rotation[c]
            if len(ps) != len(rs):
                raise PatternError(f"circle {c}: {len(ps)} P slots vs {len(rs)} R slots")
            for s in ps:
                if (c, s) not in self.gluing:
                    raise PatternError(f"dangling slot {(c, s)} on P")
            image = [self.gluing[(c, s)] for s in ps]
            if sorted(image) != sorted((c, s) for s in rs):
                raise PatternError(f"circle {c}: gluing is not a bijection")
            if len(ps) > 1:
                rpos = {s: i for i, s in enumerate(rs)}
                n = len(rs)
                for i in range(len(ps)):
                    a = rpos[image[i][1]]
                    b = rpos[image[(i + 1) % len(ps)][1]]
                    if (a - b) % n != 1:
                        raise PatternError(f"circle {c}: gluing does not reverse order")

    def inverse_gluing(self) -> dict[Endpoint, Endpoint]:
        return {v: k for k, v in self.gluing.items()}


def trace_curves(g: GluedSurface) -> list[tuple[ArcLabel, ...]]:
    """Close up the arcs of both pants into curves on the glued surface.

    Each curve is the cyclic sequence of arcs met while walking along it,
    starting from its least P arc and leaving that arc through ``end2``.
    """
    P_at, R_at = g.P.arc_at(), g.R.arc_at()
    inv = g.inverse_gluing()
    for end in P_at:
        if end not in g.gluing:
            raise PatternError(f"dangling slot {end} on P")
    for end in R_at:
        if end not in inv:
            raise PatternError(f"dangling slot {end} on R")
    unvisited = {arc.label for arc in g.P.arcs}
    curves = []
    for arc in sorted(g.P.arcs, key=lambda a: a.label.sort_key()):
        if arc.label not in unvisited:
            continue
        curve: list[ArcLabel] = []
        cur, end = arc, arc.end2
        while True:
            unvisited.discard(cur.label)
            curve.append(cur.label)
            r_end = g.gluing[end]
            r_arc = R_at[r_end]
            curve.append(r_arc.label)
            p_end = inv[r_arc.other_end(r_end)]
            cur = P_at[p_end]
            end = cur.other_end(p_end)
            if cur.label == arc.label:
                break
        curves.append(tuple(curve))
    return curves


def relabel(pp: PantsPattern, mapping: dict[Endpoint, Endpoint]) -> PantsPattern:
    """Rename slots by ``mapping`` (must preserve circles)."""
    arcs = tuple(Arc(a.label, mapping[a.end1], mapping[a.end2]) for a in pp.arcs)
    rotation = {c: tuple(mapping[(c, s)][1] for s in order) for c, order in pp.rotation.items()}
    return PantsPattern(pp.side, arcs, rotation)


def arcs_by_label(arcs: Iterable[Arc]) -> dict[ArcLabel, Arc]:
    return {a.label: a for a in arcs}
