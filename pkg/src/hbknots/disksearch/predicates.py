"""Predicate battery, one check per forbidden configuration.

Chord-level checks take labels and the cyclic order of ∂E; candidate-level
checks take a :class:`DiskCandidate`.  Every check returns a
:class:`PredicateVerdict` whose witness is non-empty on failure.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..pants import ArcLabel
from .model import BACK, IN_P, OUT, DiskCandidate, Point

ARCS_IN_E = "arcs-in-E"
E_PLANAR = "E-planarity"
EPSILON_SELF = "epsilon-self"
DELTA_SELF = "delta-self"
NONADJACENT = "nonadjacent-delta"
ADJACENCY = "adjacency-bound"
SCHARLEMANN = "scharlemann"
EPSILON_COUNTS = "epsilon-counts"
OUTERMOST = "outermost-in-D"
LABEL_SEQUENCE = "label-sequence"
ENDPOINTS = "endpoints-of-epsilon"
E_DISJOINT = "core-not-prim"

PREDICATES = (LABEL_SEQUENCE, ENDPOINTS, EPSILON_SELF, DELTA_SELF, NONADJACENT, ARCS_IN_E,
              E_PLANAR, ADJACENCY, EPSILON_COUNTS, OUTERMOST, SCHARLEMANN, E_DISJOINT)


@dataclass(frozen=True)
class PredicateVerdict:
    predicate: str
    passed: bool
    witness: tuple = ()

    def __post_init__(self):
        if not self.passed and not self.witness:
            raise ValueError("a failing verdict needs a witness")

    def __bool__(self):
        return self.passed

    def to_dict(self):
        return {"predicate": self.predicate, "passed": self.passed,
                "witness": [str(w) for w in self.witness]}


def _ok(name):
    return PredicateVerdict(name, True)


def _fail(name, *witness):
    return PredicateVerdict(name, False, tuple(witness))


def _p_arcs_between(cycle: Sequence[ArcLabel], i: int, j: int) -> int:
    """P arcs strictly between positions i and j, walking forward."""
    n = len(cycle)
    k, count = (i + 1) % n, 0
    while k != j:
        count += cycle[k].side == "P"
        k = (k + 1) % n
    return count


def check_arcs_in_E(chord: tuple[ArcLabel, ArcLabel], e_cycle: Sequence[ArcLabel]) -> PredicateVerdict:
    """An arc of D ∩ E either joins two R arcs of ∂E leaving at least two P
    arcs on each side, or joins a P arc to a non-adjacent R arc."""
    x, y = chord
    if x == y:
        return _fail(ARCS_IN_E, f"both ends on {x}")
    if x.side == "P" and y.side == "P":
        return _fail(ARCS_IN_E, f"{x}-{y} joins two P arcs")
    pos = {l: i for i, l in enumerate(e_cycle)}
    i, j = pos[x], pos[y]
    n = len(e_cycle)
    if x.side != y.side:
        if (i - j) % n in (1, n - 1):
            return _fail(ARCS_IN_E, f"{x}-{y} joins adjacent arcs of ∂E")
        return _ok(ARCS_IN_E)
    left, right = _p_arcs_between(e_cycle, i, j), _p_arcs_between(e_cycle, j, i)
    if min(left, right) < 2:
        return _fail(ARCS_IN_E, f"{x}-{y} cuts off {min(left, right)} P arc(s)")
    return _ok(ARCS_IN_E)


def chords_cross_in_E(c1, c2, e_cycle: Sequence[ArcLabel]) -> bool:
    """Two arcs of D ∩ E cross in E when their four labels are distinct and
    interleave along ∂E.  Chords sharing a label are never reported, since
    the order of points along one arc of ∂E is not modelled."""
    labels = {*c1, *c2}
    if len(labels) < 4:
        return False
    pos = {l: i for i, l in enumerate(e_cycle)}
    a, b = sorted((pos[c1[0]], pos[c1[1]]))
    inside = [a < pos[l] < b for l in c2]
    return inside[0] != inside[1]


def check_E_planarity(chords: Sequence[tuple[ArcLabel, ArcLabel]], e_cycle) -> PredicateVerdict:
    for i in range(len(chords)):
        for j in range(i + 1, len(chords)):
            if chords_cross_in_E(chords[i], chords[j], e_cycle):
                return _fail(E_PLANAR, chords[i], chords[j])
    return _ok(E_PLANAR)


def chords_cross_in_D(c1, c2) -> bool:
    a, b = sorted(c1)
    return (a < c2[0] < b) != (a < c2[1] < b)


def check_epsilon_self(candidate: DiskCandidate) -> PredicateVerdict:
    pts = candidate.points()
    for i, j in candidate.chords:
        if pts[i].block == pts[j].block:
            name = EPSILON_SELF if pts[i].block == 0 else DELTA_SELF
            where = "ε" if pts[i].block == 0 else f"δ{pts[i].block}"
            return _fail(name, f"chord {i}-{j} has both ends in {where}")
    return _ok(EPSILON_SELF)


def check_nonadjacent(candidate: DiskCandidate) -> PredicateVerdict:
    pts = candidate.points()
    for i, j in candidate.chords:
        a, b = sorted((pts[i].block, pts[j].block))
        if a >= 1 and b - a > 1:
            return _fail(NONADJACENT, f"chord {i}-{j} joins δ{a} and δ{b}")
    return _ok(NONADJACENT)


def check_adjacency_bound(candidate: DiskCandidate) -> PredicateVerdict:
    if not candidate.deltas:
        return _ok(ADJACENCY)
    n = len(candidate.deltas[0].labels)
    pts = candidate.points()
    counts: dict[tuple[int, int], int] = {}
    for i, j in candidate.chords:
        a, b = sorted((pts[i].block, pts[j].block))
        if a >= 1 and b - a == 1:
            counts[(a, b)] = counts.get((a, b), 0) + 1
    for (a, b), c in sorted(counts.items()):
        if c > n // 2:
            return _fail(ADJACENCY, f"{c} chords join δ{a} and δ{b}, at most {n // 2} allowed")
    return _ok(ADJACENCY)


def piece_meets_P(points: Sequence[Point], i: int) -> bool:
    """Does the piece of ∂D from point i to point i+1 pass through P?

    Only ε meets P, and its points carry stages OUT <= IN_P <= BACK.
    """
    n = len(points)
    j = (i + 1) % n
    x, y = points[i], points[j]
    leaves = x.block == 0 and (y.block != 0 or j == 0)  # runs past the end of ε
    enters = y.block == 0 and (x.block != 0 or j == 0)  # runs in from the start of ε
    if not leaves and not enters:
        if x.block != 0:
            return False
        return IN_P in (x.stage, y.stage) or (x.stage == OUT and y.stage == BACK)
    return (leaves and x.stage <= IN_P) or (enters and y.stage >= IN_P)


def faces(n: int, match: dict[int, int]) -> list[list[int]]:
    """Faces of a chord diagram on points 0..n-1 around a circle.

    A face is listed by the points at which its boundary leaves ∂D along a
    chord, in order; a face with m such points is a 2m-gon.
    """
    seen, out = set(), []
    for start in range(n):
        if start in seen:
            continue
        face, i = [], start
        while i not in seen:
            seen.add(i)
            j = (i + 1) % n  # walk the piece from i to i+1
            face.append(i)
            i = match[j]  # then the chord at j
        out.append(face)
    return out


def check_scharlemann(candidate: DiskCandidate) -> PredicateVerdict:
    pts = candidate.points()
    n = len(pts)
    if n == 0:
        return _ok(SCHARLEMANN)
    match = candidate.matching()
    for face in faces(n, match):
        if len(face) < 2:
            continue
        if any(piece_meets_P(pts, i) for i in face):
            continue
        corners = []
        for i in face:
            corners += [pts[i].label, pts[(i + 1) % n].label]
        if len(set(corners)) != 2:
            continue
        if all(corners[k] != corners[k + 1] for k in range(len(corners) - 1)):
            return _fail(SCHARLEMANN, "face at points " + ",".join(map(str, face)),
                         "labels " + "/".join(sorted(map(str, set(corners)))))
    return _ok(SCHARLEMANN)


def epsilon_minimum(n: int, k: int) -> int:
    """Fewest ε endpoints compatible with k components of Δ of length n.

    With k >= 2 each end component of Δ sends at least ⌈n/2⌉ chords to ε.
    A lone component has no neighbour other than ε, so all n of its points
    go there.
    """
    if k == 0:
        return 0
    if k == 1:
        return n
    return 2 * ((n + 1) // 2)


def check_epsilon_counts(candidate: DiskCandidate, p: int) -> PredicateVerdict:
    eps = candidate.epsilon
    if not eps.out_labels and not eps.back_labels:
        return _fail(EPSILON_COUNTS, "ε misses ∂E in R")
    if candidate.deltas:
        n = len(candidate.deltas[0].labels)
        need = epsilon_minimum(n, len(candidate.deltas))
        if len(eps) < need:
            return _fail(EPSILON_COUNTS, f"ε has {len(eps)} endpoints, needs {need}")
        for i, d in enumerate(candidate.deltas, start=1):
            if len(d.labels) < p:
                return _fail(EPSILON_COUNTS, f"δ{i} has {len(d.labels)} endpoints, needs {p}")
    return _ok(EPSILON_COUNTS)


def outermost_chords(candidate: DiskCandidate) -> list[tuple[int, int]]:
    """Chords joining ε to a neighbouring δ with nothing between them on ∂D."""
    m = len(candidate.epsilon)
    n = len(candidate.points())
    if not candidate.deltas or m == 0:
        return []
    match = candidate.matching()
    out = []
    for e, d in ((m - 1, m), (0, n - 1)):
        if match.get(e) == d:
            out.append((e, d))
    return out


def check_outermost(candidate: DiskCandidate, required: frozenset[ArcLabel]) -> PredicateVerdict:
    """Some chord outermost in D joins ε to an adjacent δ, cutting off β
    that misses P and lands on the pair of arcs fixed by the foot hexagon."""
    pts = candidate.points()
    m, n = len(candidate.epsilon), len(pts)
    tried = []
    # β runs from the ε point to the near end of ε, so that stretch must miss P
    for e, d, stage in ((m - 1, m, BACK), (0, n - 1, OUT)):
        if not candidate.deltas or m == 0 or candidate.matching().get(e) != d:
            continue
        labels = frozenset({pts[e].label, pts[d].label})
        avoids_P = pts[e].stage == stage
        if labels == required and avoids_P:
            return _ok(OUTERMOST)
        tried.append(f"{pts[e].label}-{pts[d].label}" + ("" if avoids_P else " (β meets P)"))
    want = "/".join(sorted(map(str, required)))
    return _fail(OUTERMOST, f"need β on {want}", *(tried or ["no outermost ε-δ chord"]))


def check_label_sequence(candidate: DiskCandidate) -> PredicateVerdict:
    circles = sorted({d.parallel for d in candidate.deltas})
    if len(circles) > 1:
        return _fail(LABEL_SEQUENCE, f"Δ parallel to several circles {circles}")
    if circles == [3]:
        return _fail(LABEL_SEQUENCE, "Δ parallel to ∂3")
    return _ok(LABEL_SEQUENCE)


def check_endpoints_of_epsilon(candidate: DiskCandidate, q_is_2p_pm_1: bool) -> PredicateVerdict:
    """Both R pieces of ε must not lie in one component of R' \\ Δ.

    The piece reaching the circle parallel to Δ lies in the collar between
    that circle and Δ; a piece reaching another circle lies outside.
    """
    if not q_is_2p_pm_1:
        return PredicateVerdict(ENDPOINTS, True, ("unsupported outside q = 2p±1",))
    if not candidate.deltas:
        return _ok(ENDPOINTS)
    gamma = candidate.deltas[0].parallel
    eps = candidate.epsilon
    if (eps.enter == gamma) == (eps.exit == gamma):
        side = "collar of" if eps.enter == gamma else "outside"
        return _fail(ENDPOINTS, f"both ends of ε lie {side} ∂{gamma}")
    return _ok(ENDPOINTS)


def check_e_disjoint_branch(ctx, foot: int, kind: str, region: int) -> PredicateVerdict:
    """A disk missing E: ε runs through one P region, leaving and re-entering
    the foot hexagon across two of its segments.

    Passes only when both regions are hexagons and ∂3 is avoided; the shape
    then still counts as refuted, since such a disk would make the core of
    the handlebody primitive.  Otherwise no consistent region assignment
    exists and the witness says why.
    """
    i, j = int(kind[0]), int(kind[1])
    foot_idx = ctx.hexagon["R"][foot]
    P_reg = ctx.regions["P"][region]
    if not {i, j} <= P_reg.circles():
        return _fail(E_DISJOINT, f"P region {region} does not meet both ∂{i} and ∂{j}")
    if ctx.across("P", region, i) != foot_idx or ctx.across("P", region, j) != foot_idx:
        return _fail(E_DISJOINT, f"P region {region} does not meet the foot hexagon on ∂{i} and ∂{j}")
    if P_reg.sides != 6:
        return _fail(E_DISJOINT, "rectangle glued to a region along two segments")
    if 3 in (i, j):
        return _fail(E_DISJOINT, "hexagon pair meeting along ∂3")
    return _ok(E_DISJOINT)
