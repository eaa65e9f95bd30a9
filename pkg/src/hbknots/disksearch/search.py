"""Exhaustive search for boundary-compressing disk configurations.

The space is split into *shapes*: tunnel foot, ε kind and its route through
P, and the list of Δ components (circle and direction of each).  Shape-level
predicates are all evaluated and recorded.  Shapes that survive them are
expanded by a depth-first search that grows ε backwards from the foot, one
crossing of ∂E at a time, choosing at once the δ point each ε point is
joined to.  Every ε point must be joined to Δ (no chord returns to ε), so
the search is finite: ε has at most as many points as Δ.

Non-crossing in D forces the chords from ε to land on Δ in reverse order,
and the δ points between two consecutive landing points must be matched
among themselves.  An interval table of which runs of δ points admit such
a matching prunes most branches early.
"""
from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass, field

from ..construction import ConstructionParams, ParameterError
from ..pants import ArcLabel
from . import predicates as pr
from .model import (BACK, EPSILON_KINDS, IN_P, NONSEPARATING, OUT, DeltaComponent, DiskCandidate,
                    EpsilonDescriptor, Point, SearchContext)

NO_COMPLETION = "no-completion"
MAX_WITNESSES = 5


class CapsError(ValueError):
    pass


@dataclass(frozen=True)
class SearchCaps:
    """``max_delta`` bounds the number of Δ components; ``max_eps_r`` bounds
    the crossings of ε with ∂E in R (default 3q)."""

    max_delta: int = 3
    max_eps_r: int | None = None
    disabled: frozenset[str] = frozenset()

    def resolved(self, params: ConstructionParams) -> "SearchCaps":
        eps = 3 * params.q if self.max_eps_r is None else self.max_eps_r
        if self.max_delta < 1:
            raise CapsError("at least one Δ component is needed")
        if eps < params.p:
            raise CapsError(f"max ε R-crossings {eps} is below the forced minimum p = {params.p}")
        unknown = set(self.disabled) - set(pr.PREDICATES)
        if unknown:
            raise CapsError(f"unknown predicates {sorted(unknown)}")
        if pr.EPSILON_SELF in self.disabled:
            # the search joins every ε point to Δ by construction
            raise CapsError("epsilon-self shapes the search space and cannot be disabled")
        return SearchCaps(self.max_delta, eps, frozenset(self.disabled))


@dataclass(frozen=True)
class Shape:
    foot: int
    kind: str
    enter: int
    exit: int
    p_in: int  # P region where ε enters
    p_out: int  # P region where ε leaves
    p_labels: tuple[ArcLabel, ...]
    deltas: tuple[tuple[int, bool], ...]  # (circle, reversed)

    def key(self) -> str:
        route = ",".join(map(str, self.p_labels)) or f"region{self.p_in}"
        ds = " ".join(f"∂{c}{'-' if r else '+'}" for c, r in self.deltas) or "none"
        return f"H{self.foot} {self.kind} {self.enter}->{self.exit} [{route}] Δ: {ds}"

    @property
    def sort_key(self):
        return (EPSILON_KINDS.index(self.kind), self.foot, len(self.deltas), self.key())


@dataclass
class SearchReport:
    p: int
    q: int
    family: str | None
    caps: SearchCaps
    shapes: int = 0
    shapes_expanded: int = 0
    skeletons: int = 0
    matchings: int = 0
    survivors: int = 0
    witnesses: list = field(default_factory=list)
    tally: dict = field(default_factory=lambda: defaultdict(Counter))
    case3_shapes: int = 0
    case3_endpoints_fired: int = 0
    e_disjoint: list = field(default_factory=list)
    per_shape: dict = field(default_factory=dict)

    @property
    def refuted(self) -> bool:
        return self.survivors == 0

    @property
    def verdict(self) -> str:
        return "all candidates refuted" if self.refuted else "survivor found"

    def add(self, predicate: str, reason: str, n: int = 1):
        self.tally[predicate][reason] += n

    def totals(self) -> dict[str, int]:
        return {k: sum(v.values()) for k, v in sorted(self.tally.items())}

    def to_dict(self) -> dict:
        return {
            "p": self.p, "q": self.q, "family": self.family,
            "caps": {"max_delta": self.caps.max_delta, "max_eps_r": self.caps.max_eps_r},
            "disabled": sorted(self.caps.disabled),
            "verdict": self.verdict,
            "shapes": self.shapes,
            "shapes_expanded": self.shapes_expanded,
            "skeletons": self.skeletons,
            "matchings": self.matchings,
            "survivors": self.survivors,
            "tally": self.totals(),
            "tally_detail": {k: dict(sorted(v.items())) for k, v in sorted(self.tally.items())},
            "case3": {"shapes": self.case3_shapes, "endpoints_of_epsilon_fired": self.case3_endpoints_fired},
            "e_disjoint": self.e_disjoint,
            "witnesses": self.witnesses,
        }


def _chord_key(x: ArcLabel, y: ArcLabel) -> str:
    a, b = sorted((x, y))
    return f"{a}-{b}"


class _Engine:
    def __init__(self, ctx: SearchContext, caps: SearchCaps, report: SearchReport):
        self.ctx, self.caps, self.report = ctx, caps, report
        self.on = lambda name: name not in caps.disabled
        self._arcs_cache: dict = {}
        self.hard = ctx.params.family == "hard"

    # chord-level tests -------------------------------------------------
    def arcs_ok(self, x: ArcLabel, y: ArcLabel) -> bool:
        if not self.on(pr.ARCS_IN_E):
            return True
        key = (x, y)
        if key not in self._arcs_cache:
            v = pr.check_arcs_in_E((x, y), self.ctx.e_cycle).passed
            self._arcs_cache[key] = self._arcs_cache[(y, x)] = v
        return self._arcs_cache[key]

    def crosses_E(self, c1, c2) -> bool:
        return self.on(pr.E_PLANAR) and pr.chords_cross_in_E(c1, c2, self.ctx.e_cycle)

    # shapes ------------------------------------------------------------
    def shapes(self):
        ctx = self.ctx
        dirs = [(c, r) for c in (1, 2, 3) for r in (False, True)]
        out = []
        for foot in (1, 2):
            for kind in EPSILON_KINDS:
                for enter, exit_, p_in, p_out, labels in ctx.p_routes(kind):
                    for k in range(0, self.caps.max_delta + 1):
                        for ds in itertools.product(dirs, repeat=k):
                            out.append(Shape(foot, kind, enter, exit_, p_in, p_out, labels, ds))
        return sorted(out, key=lambda s: s.sort_key)

    def delta_components(self, shape: Shape) -> tuple[DeltaComponent, ...]:
        return tuple(DeltaComponent(c, self.ctx.delta_sequence(c, shape.foot), r) for c, r in shape.deltas)

    def descriptor(self, shape: Shape, out=(), back=()) -> EpsilonDescriptor:
        return EpsilonDescriptor(shape.kind, shape.foot, shape.enter, shape.exit,
                                 tuple(out), shape.p_labels, tuple(back))

    def structural(self, shape: Shape) -> list[tuple[str, str]]:
        """Failing shape-level predicates as (predicate, reason)."""
        fails = []
        stub = DiskCandidate(self.descriptor(shape), self.delta_components(shape))
        if self.on(pr.LABEL_SEQUENCE):
            v = pr.check_label_sequence(stub)
            if not v:
                fails.append((pr.LABEL_SEQUENCE, v.witness[0]))
        if self.hard and self.on(pr.ENDPOINTS):
            v = pr.check_endpoints_of_epsilon(stub, True)
            if not v:
                fails.append((pr.ENDPOINTS, v.witness[0]))
        if self.on(pr.OUTERMOST):
            x, y = sorted(self.ctx.required_pair(shape.foot))
            if not self.arcs_ok(x, y):
                fails.append((pr.ARCS_IN_E, f"required β chord {_chord_key(x, y)}"))
        return fails

    def run_shape(self, shape: Shape) -> dict:
        rep = self.report
        if not shape.deltas:
            return self.run_no_delta(shape)
        fails = self.structural(shape)
        if shape.kind not in NONSEPARATING:
            rep.case3_shapes += 1
            if any(p == pr.ENDPOINTS for p, _ in fails):
                rep.case3_endpoints_fired += 1
        for p, reason in fails:
            rep.add(p, reason)
        if fails:
            return {"refuted_by": sorted({p for p, _ in fails})}
        rep.shapes_expanded += 1
        before = (rep.skeletons, rep.matchings, rep.survivors)
        _ShapeSearch(self, shape).run()
        return {"expanded": True, "skeletons": rep.skeletons - before[0],
                "matchings": rep.matchings - before[1], "survivors": rep.survivors - before[2]}

    def run_no_delta(self, shape: Shape) -> dict:
        """Without Δ every chord would return to ε, so D misses E."""
        rep = self.report
        if shape.kind in NONSEPARATING and shape.p_in == shape.p_out:
            v = pr.check_e_disjoint_branch(self.ctx, shape.foot, shape.kind, shape.p_in)
            if v:
                rep.add(pr.E_DISJOINT, "hexagon pair avoiding ∂3")
                rep.e_disjoint.append(shape.key())
                return {"refuted_by": [pr.E_DISJOINT]}
            # such an ε must cross ∂E, and each crossing would need a partner in ε
            rep.add(pr.EPSILON_SELF, "no Δ: " + v.witness[0])
            return {"refuted_by": [pr.EPSILON_SELF]}
        rep.add(pr.EPSILON_SELF, "no Δ: ε crosses ∂E in P")
        return {"refuted_by": [pr.EPSILON_SELF]}


class _ShapeSearch:
    def __init__(self, eng: _Engine, shape: Shape):
        self.eng, self.shape = eng, shape
        ctx = eng.ctx
        self.ctx = ctx
        self.deltas = eng.delta_components(shape)
        self.dpts: list[Point] = [Point(l, i) for i, d in enumerate(self.deltas, start=1) for l in d.sequence]
        self.N = len(self.dpts)
        self.n = len(self.deltas[0].labels)
        self.gamma = shape.deltas[0][0]
        self.foot = ctx.hexagon["R"][shape.foot]
        self.B = ctx.across("P", shape.p_out, shape.exit)  # R region where ε leaves P
        self.A = ctx.across("P", shape.p_in, shape.enter)  # R region where ε enters P
        self.collar_arcs = set(ctx.circle_arcs[self.gamma])
        self.required = ctx.required_pair(shape.foot)
        self.limit_r = eng.caps.max_eps_r
        self._dd_ok = [[self._dd_allowed(s, u) for u in range(self.N)] for s in range(self.N)]
        self._M = self._gap_table()

    def _dd_allowed(self, s: int, u: int) -> bool:
        a, b = self.dpts[s], self.dpts[u]
        if a.block == b.block and self.eng.on(pr.DELTA_SELF):
            return False
        if abs(a.block - b.block) > 1 and self.eng.on(pr.NONADJACENT):
            return False
        return self.eng.arcs_ok(a.label, b.label)

    def _gap_table(self):
        N = self.N
        M = [[False] * (N + 1) for _ in range(N + 1)]
        for s in range(N + 1):
            M[s][s] = True
        for length in range(2, N + 1, 2):
            for s in range(0, N - length + 1):
                t = s + length
                M[s][t] = any(self._dd_ok[s][u] and M[s + 1][u] and M[u + 1][t]
                              for u in range(s + 1, t, 2))
        return M

    # walks -------------------------------------------------------------
    def _steps(self, region: int, last, collar: bool):
        # Recrossing an arc at once makes a bigon with ∂E, which minimality
        # removes unless the bigon holds the tunnel foot.
        for a, nxt in self.ctx.neighbours("R", region):
            if (a == last and region != self.foot) or (collar and a not in self.collar_arcs):
                continue
            yield a, nxt

    def run(self):
        self.pairs: list[tuple[Point, int]] = []  # generated ε points with their δ partner
        self._phase_a(self.foot, None, -1, 0)

    def _place(self, pt: Point, last_y: int):
        """Partners for ε point ``pt`` after ``last_y``."""
        rep = self.eng.report
        M, N = self._M, self.N
        for y in range(last_y + 1, N, 2):
            if not M[last_y + 1][y]:
                rep.add(NO_COMPLETION, "δ points skipped over cannot be matched")
                continue
            lab = self.dpts[y].label
            if not self.eng.arcs_ok(pt.label, lab):
                rep.add(pr.ARCS_IN_E, _chord_key(pt.label, lab))
                continue
            chord = (pt.label, lab)
            if any(self.eng.crosses_E(chord, (q.label, self.dpts[z].label)) for q, z in self.pairs):
                rep.add(pr.E_PLANAR, "ε-δ chords cross in E")
                continue
            yield y

    def _emit(self, pt: Point, last_y: int, r_count: int, cont):
        if pt.stage != IN_P and r_count + 1 > self.limit_r:
            return
        if len(self.pairs) + 1 > self.N:
            return
        for y in self._place(pt, last_y):
            self.pairs.append((pt, y))
            cont(y, r_count + (pt.stage != IN_P))
            self.pairs.pop()

    def _phase_a(self, region, last, last_y, r_count):
        """Reverse of the R piece of ε after P: from the foot to region B."""
        collar = self.shape.exit == self.gamma
        if region == self.B:
            self._phase_b(0, last_y, r_count)
        for a, nxt in self._steps(region, last, collar):
            self._emit(Point(a, 0, BACK), last_y, r_count,
                       lambda y, rc, nxt=nxt, a=a: self._phase_a(nxt, a, y, rc))

    def _phase_b(self, i, last_y, r_count):
        labels = self.shape.p_labels[::-1]
        if i == len(labels):
            self._phase_c(self.A, None, last_y, r_count)
            return
        self._emit(Point(labels[i], 0, IN_P), last_y, r_count,
                   lambda y, rc: self._phase_b(i + 1, y, rc))

    def _phase_c(self, region, last, last_y, r_count):
        """Reverse of the R piece of ε before P: from region A to the foot."""
        collar = self.shape.enter == self.gamma
        if region == self.foot:
            self._finish(last_y)
        for a, nxt in self._steps(region, last, collar):
            self._emit(Point(a, 0, OUT), last_y, r_count,
                       lambda y, rc, nxt=nxt, a=a: self._phase_c(nxt, a, y, rc))

    # completion ----------------------------------------------------------
    def _finish(self, last_y):
        rep = self.eng.report
        if not self._M[last_y + 1][self.N]:
            rep.add(NO_COMPLETION, "trailing δ points cannot be matched")
            return
        rep.skeletons += 1
        m = len(self.pairs)
        gen = [pt for pt, _ in self.pairs]
        eps_pts = gen[::-1]  # ε order
        desc = self.eng.descriptor(
            self.shape,
            out=[p.label for p in eps_pts if p.stage == OUT],
            back=[p.label for p in eps_pts if p.stage == BACK])
        cand0 = DiskCandidate(desc, self.deltas)
        if self.eng.on(pr.EPSILON_COUNTS):
            v = pr.check_epsilon_counts(cand0, self.ctx.params.p)
            if not v:
                rep.add(pr.EPSILON_COUNTS, v.witness[0] if "misses" in v.witness[0] else "too few ε endpoints")
                return
        # ε point generated t-th sits at index m-1-t; δ point y at m+y
        eps_chords = [(m - 1 - t, m + y) for t, (_, y) in enumerate(self.pairs)]
        used = {y for _, y in self.pairs}
        gaps, prev = [], 0
        for y in sorted(used) + [self.N]:
            gaps.append((prev, y))
            prev = y + 1
        fillings = [list(self._fillings(s, t)) for s, t in gaps]
        for combo in itertools.product(*fillings):
            dd = [c for part in combo for c in part]
            chords = tuple(sorted(eps_chords + [(m + a, m + b) for a, b in dd]))
            self._judge(DiskCandidate(desc, self.deltas, chords))

    def _fillings(self, s: int, t: int):
        """Non-crossing perfect matchings of δ points s..t-1 by allowed chords."""
        if s == t:
            yield ()
            return
        for u in range(s + 1, t, 2):
            if self._dd_ok[s][u] and self._M[s + 1][u] and self._M[u + 1][t]:
                for inner in self._fillings(s + 1, u):
                    for rest in self._fillings(u + 1, t):
                        yield ((s, u),) + inner + rest

    def _judge(self, cand: DiskCandidate):
        eng, rep = self.eng, self.eng.report
        rep.matchings += 1
        pts = cand.points()
        checks = []
        if eng.on(pr.ADJACENCY):
            checks.append(lambda: pr.check_adjacency_bound(cand))
        if eng.on(pr.E_PLANAR):
            checks.append(lambda: pr.check_E_planarity(
                [(pts[i].label, pts[j].label) for i, j in cand.chords], self.ctx.e_cycle))
        if eng.on(pr.OUTERMOST):
            checks.append(lambda: pr.check_outermost(cand, self.required))
        if eng.on(pr.SCHARLEMANN):
            checks.append(lambda: pr.check_scharlemann(cand))
        for check in checks:
            v = check()
            if not v:
                rep.add(v.predicate, _reason(v))
                return
        assert_double_planar(cand, self.ctx.e_cycle, strict_E=eng.on(pr.E_PLANAR))
        rep.survivors += 1
        if len(rep.witnesses) < MAX_WITNESSES:
            rep.witnesses.append({"shape": self.shape.key(), **cand.to_dict()})


def _reason(v: pr.PredicateVerdict) -> str:
    if v.predicate == pr.OUTERMOST:
        return v.witness[0]
    if v.predicate == pr.SCHARLEMANN:
        return v.witness[-1]
    if v.predicate == pr.ADJACENCY:
        return "too many chords between adjacent δ"
    return "chords cross"


def assert_double_planar(cand: DiskCandidate, e_cycle, strict_E: bool = True):
    """Every point matched once; chords disjoint in D and (at label level) in E."""
    pts = cand.points()
    ends = [i for c in cand.chords for i in c]
    if sorted(ends) != list(range(len(pts))):
        raise AssertionError("not a perfect matching")
    for c1, c2 in itertools.combinations(cand.chords, 2):
        if pr.chords_cross_in_D(c1, c2):
            raise AssertionError(f"chords {c1} and {c2} cross in D")
        if strict_E and pr.chords_cross_in_E((pts[c1[0]].label, pts[c1[1]].label),
                                             (pts[c2[0]].label, pts[c2[1]].label), e_cycle):
            raise AssertionError(f"chords {c1} and {c2} cross in E")


def search(params: ConstructionParams, caps: SearchCaps = SearchCaps(),
           ctx: SearchContext | None = None, any_family: bool = False) -> SearchReport:
    """Run the battery over every candidate within ``caps``.

    Only q = p+1 and q = 2p±1 (q > 3) are supported unless ``any_family``.
    """
    if params.family is None and not any_family:
        raise ParameterError(f"(p,q) = ({params.p},{params.q}) is outside q = p+1 and q = 2p±1")
    caps = caps.resolved(params)
    ctx = ctx or SearchContext.build(params)
    report = SearchReport(params.p, params.q, params.family, caps)
    eng = _Engine(ctx, caps, report)
    for shape in eng.shapes():
        report.shapes += 1
        report.per_shape[shape.key()] = eng.run_shape(shape)
    return report
