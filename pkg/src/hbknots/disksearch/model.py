"""Combinatorial model of a boundary-compressing disk D for P.

∂D is read as a cyclic word: the arc ε (which contains the single arc
∂D ∩ P and starts and ends at the tunnel foot), followed by the Δ
components δ_1, ..., δ_k, each a loop in R based at the foot and parallel
to a boundary circle of P.  Consecutive pieces are joined through
∂N(K ∪ t).  The points of ∂D ∩ ∂E are numbered in this order, ε first.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from ..construction import ConstructionParams, find_hexagons, generate_pattern
from ..pants import ArcLabel, GluedSurface, PatternError, Region, region_decomposition, trace_curves

# ε stages, in order along ε: R before P, inside P, R after P
OUT, IN_P, BACK = 0, 1, 2

NONSEPARATING = ("12", "13", "23")
SEPARATING = ("1-self", "2-self", "3-self")
EPSILON_KINDS = NONSEPARATING + SEPARATING


def e_cyclic_order(g: GluedSurface) -> tuple[ArcLabel, ...]:
    """Cyclic order of arcs along ∂E."""
    curves = trace_curves(g)
    if len(curves) != 1:
        raise PatternError(f"∂E traces {len(curves)} curves, expected one")
    return curves[0]


def same_cycle(c1, c2) -> bool:
    """Equality of cyclic sequences up to rotation and reversal."""
    if len(c1) != len(c2):
        return False
    c1, n = list(c1), len(c1)
    for cand in (list(c2), list(reversed(c2))):
        if any(cand[k:] + cand[:k] == c1 for k in range(n)):
            return True
    return not n


@dataclass(frozen=True)
class Point:
    label: ArcLabel
    block: int  # 0 for ε, i for δ_i
    stage: int | None = None  # ε only


@dataclass(frozen=True)
class EpsilonDescriptor:
    """ε as three label runs: R from the foot to P, across P, R back to the foot.

    ``enter`` and ``exit`` are the circles where ε passes into and out of P.
    """

    kind: str
    foot: int
    enter: int
    exit: int
    out_labels: tuple[ArcLabel, ...] = ()
    p_labels: tuple[ArcLabel, ...] = ()
    back_labels: tuple[ArcLabel, ...] = ()

    def __post_init__(self):
        if self.kind not in EPSILON_KINDS:
            raise ValueError(f"unknown ε kind {self.kind}")
        if self.foot not in (1, 2):
            raise ValueError("the tunnel foot lies in H_1^R or H_2^R")
        if self.separating:
            want = int(self.kind[0])
            if self.enter != want or self.exit != want:
                raise ValueError(f"{self.kind} ε must enter and exit P on ∂{want}")
        elif {self.enter, self.exit} != {int(self.kind[0]), int(self.kind[1])}:
            raise ValueError(f"{self.kind} ε must join ∂{self.kind[0]} and ∂{self.kind[1]}")
        if any(l.side != "R" for l in self.out_labels + self.back_labels):
            raise ValueError("ε outside P crosses R arcs only")
        if any(l.side != "P" for l in self.p_labels):
            raise ValueError("ε inside P crosses P arcs only")

    @property
    def separating(self) -> bool:
        return self.kind in SEPARATING

    def points(self) -> list[Point]:
        return ([Point(l, 0, OUT) for l in self.out_labels]
                + [Point(l, 0, IN_P) for l in self.p_labels]
                + [Point(l, 0, BACK) for l in self.back_labels])

    def __len__(self):
        return len(self.out_labels) + len(self.p_labels) + len(self.back_labels)

    def to_dict(self):
        return {
            "kind": self.kind, "foot": self.foot, "enter": self.enter, "exit": self.exit,
            "out": [str(l) for l in self.out_labels],
            "P": [str(l) for l in self.p_labels],
            "back": [str(l) for l in self.back_labels],
        }


@dataclass(frozen=True)
class DeltaComponent:
    parallel: int
    labels: tuple[ArcLabel, ...]
    reversed: bool = False

    def __post_init__(self):
        if self.parallel not in (1, 2, 3):
            raise ValueError(f"bad boundary circle {self.parallel}")

    @property
    def sequence(self) -> tuple[ArcLabel, ...]:
        return tuple(reversed(self.labels)) if self.reversed else self.labels

    def to_dict(self):
        return {"parallel": self.parallel, "reversed": self.reversed,
                "labels": [str(l) for l in self.sequence]}


@dataclass(frozen=True)
class DiskCandidate:
    epsilon: EpsilonDescriptor
    deltas: tuple[DeltaComponent, ...]
    chords: tuple[tuple[int, int], ...] = ()

    def points(self) -> list[Point]:
        pts = self.epsilon.points()
        for i, d in enumerate(self.deltas, start=1):
            pts.extend(Point(l, i) for l in d.sequence)
        return pts

    def matching(self) -> dict[int, int]:
        m = {}
        for i, j in self.chords:
            m[i], m[j] = j, i
        return m

    def to_dict(self):
        pts = self.points()
        return {
            "epsilon": self.epsilon.to_dict(),
            "deltas": [d.to_dict() for d in self.deltas],
            "chords": [[i, j, str(pts[i].label), str(pts[j].label)] for i, j in self.chords],
        }


@dataclass
class SearchContext:
    """Region data of a generated pattern, indexed for the search."""

    params: ConstructionParams
    surface: GluedSurface
    e_cycle: tuple[ArcLabel, ...] = field(init=False)
    regions: dict[str, list[Region]] = field(init=False)

    def __post_init__(self):
        self.e_cycle = e_cyclic_order(self.surface)
        self.regions = {s: region_decomposition(getattr(self.surface, s)) for s in "PR"}
        self.position = {l: i for i, l in enumerate(self.e_cycle)}
        # arc -> the two regions on its sides, per side
        self.arc_regions: dict[ArcLabel, tuple[int, int]] = {}
        for side, regs in self.regions.items():
            seen: dict[ArcLabel, list[int]] = {}
            for idx, r in enumerate(regs):
                for a in r.arcs:
                    seen.setdefault(a, []).append(idx)
            for a, where in seen.items():
                if len(where) != 2 or where[0] == where[1]:
                    raise PatternError(f"arc {a} borders regions {where}")
                self.arc_regions[a] = (where[0], where[1])
        self.hexagon = {}
        for side in "PR":
            hexes = find_hexagons(getattr(self.surface, side), self.params)
            regs = self.regions[side]
            self.hexagon[side] = {w: regs.index(h) for w, h in hexes.items()}
        self._partner = self._segment_partners()

    @classmethod
    def build(cls, params: ConstructionParams) -> "SearchContext":
        return cls(params, generate_pattern(params))

    def _segment_partners(self):
        """(side, region, circle) -> region on the other side of that boundary segment."""
        g = self.surface
        r_seg = {}
        for idx, r in enumerate(self.regions["R"]):
            for c, s, t in r.segments:
                r_seg[(c, s, t)] = idx
        out = {}
        for idx, r in enumerate(self.regions["P"]):
            for c, s, t in r.segments:
                ridx = r_seg[(c, g.gluing[(c, t)][1], g.gluing[(c, s)][1])]
                out[("P", idx, c)] = ridx
                out[("R", ridx, c)] = idx
        return out

    def across(self, side: str, region: int, circle: int) -> int:
        return self._partner[(side, region, circle)]

    def touches(self, side: str, region: int, circle: int) -> bool:
        return circle in self.regions[side][region].circles()

    def neighbours(self, side: str, region: int):
        for a in self.regions[side][region].arcs:
            r1, r2 = self.arc_regions[a]
            yield a, (r2 if r1 == region else r1)

    @cached_property
    def circle_arcs(self) -> dict[int, tuple[ArcLabel, ...]]:
        """R arcs meeting each circle, in rotation order of R."""
        R = self.surface.R
        at = R.arc_at()
        return {c: tuple(at[(c, s)].label for s in R.rotation[c]) for c in (1, 2, 3)}

    def delta_sequence(self, circle: int, foot: int) -> tuple[ArcLabel, ...]:
        """Arcs met by a loop based in the foot hexagon running once around ``circle``."""
        R = self.surface.R
        hexagon = self.regions["R"][self.hexagon["R"][foot]]
        (seg,) = [s for s in hexagon.segments if s[0] == circle]
        order = R.rotation[circle]
        start = order.index(seg[2])
        at = R.arc_at()
        return tuple(at[(circle, order[(start + i) % len(order)])].label for i in range(len(order)))

    def required_pair(self, foot: int) -> frozenset[ArcLabel]:
        d, b = self.params.hexagon_arcs(foot)
        return frozenset({ArcLabel("d", d, "R"), ArcLabel("b", b, "R")})

    def p_routes(self, kind: str):
        """P portions of ε for a kind, as (entry region, exit region, crossed labels)
        with ε entering through ``enter`` and leaving through ``exit``."""
        regs = self.regions["P"]
        routes = []
        if kind in NONSEPARATING:
            i, j = int(kind[0]), int(kind[1])
            for idx in range(len(regs)):
                if self.touches("P", idx, i) and self.touches("P", idx, j):
                    routes.append((i, j, idx, idx, ()))
                    routes.append((j, i, idx, idx, ()))
            return routes
        i = int(kind[0])
        family = {a.label for a in self.surface.P.arcs
                  if {a.end1[0], a.end2[0]} == {1, 2, 3} - {i}}

        def walk(region, path, last):
            if set(path) == family:
                if self.touches("P", region, i):
                    yield region, tuple(path)
                return
            for a, nxt in self.neighbours("P", region):
                if a in family and a not in path and a != last:
                    yield from walk(nxt, path + [a], a)

        for idx in range(len(regs)):
            if self.touches("P", idx, i):
                for end, path in walk(idx, [], None):
                    if end != idx:
                        routes.append((i, i, idx, end, path))
        return routes
