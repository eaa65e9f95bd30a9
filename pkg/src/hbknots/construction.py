"""The arc pattern of the nonseparating disk E on the pants P and R.

The handlebody H is a thickened torus with a vertical tunnel removed.  Its
boundary is a top torus and a bottom torus joined by a tube.  The disk E is
a straight annulus of slope q/p cut open at the tube, so its boundary runs
forward along the line e on the top torus, down the tube, backward along e
on the bottom torus, and back up.

P is a neighbourhood of three pieces: the vertical circle x on the top
torus, the horizontal circle l on the bottom torus, and the subarc s of
dE joining them through the tube.  Its boundary circles are

    ∂1 = the far side of x,  ∂2 = the far side of l,
    ∂3 = the near side of x band-summed along s to the near side of l.

Slot orders on these circles are read off from the positions of the
crossings of e with x and l, computed exactly with rationals.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import mod_inverse, residue
from .pants import (
    Arc, ArcLabel, GluedSurface, PantsPattern, PatternError, Region,
    region_decomposition, trace_curves,
)


class ParameterError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class ConstructionParams:
    p: int
    q: int

    def __post_init__(self):
        if self.p <= 1:
            raise ParameterError(f"p must be > 1, got {self.p}")
        if self.q <= self.p:
            raise ParameterError(f"q must be > p, got p={self.p}, q={self.q}")
        if math.gcd(self.p, self.q) != 1:
            raise ParameterError("gcd(p,q) must be 1")

    @property
    def q_bar(self) -> int:
        """Inverse of q in Z_p."""
        return mod_inverse(self.q, self.p)

    @property
    def p_bar(self) -> int:
        """Inverse of p in Z_q."""
        return mod_inverse(self.p, self.q)

    def hexagon_arcs(self, which: int) -> tuple[int, int]:
        """Subscripts ``(d, b)`` of the arcs on the boundary of hexagon 1 or 2."""
        if which == 1:
            return residue(self.q_bar, self.p), residue(self.p_bar, self.q)
        return residue((self.p - 1) * self.q_bar, self.p), residue((self.q - 1) * self.p_bar, self.q)

    @property
    def family(self) -> str | None:
        if self.q == self.p + 1:
            return "easy"
        if self.q in (2 * self.p + 1, 2 * self.p - 1) and self.q > 3:
            return "hard"
        return None


def coprime_pairs(qmax: int, pmin: int = 2) -> list[ConstructionParams]:
    return [ConstructionParams(p, q)
            for q in range(pmin + 1, qmax + 1)
            for p in range(pmin, q)
            if math.gcd(p, q) == 1]


def L(kind, sub, side):
    return ArcLabel(kind, sub, side)


def _frac(x: Fraction) -> Fraction:
    return x - math.floor(x)


def _crossing_orders(p: int, q: int, u0: Fraction, v0: Fraction):
    """Circle orders of crossing indices, all in P's boundary orientation.

    Top crossings of e with x (u = 0) are indexed X_1..X_{p-1} in order of
    increasing t, and X_0 is the last one, where s starts.  Bottom crossings
    with l (v = 0) are indexed L_0, L_1, ... in order of decreasing t, since
    dE runs backward there; L_0 is where s ends.
    """
    top = sorted(Fraction(k, 1) / p - u0 / p for k in range(1, p + 1))
    bottom = sorted(Fraction(j, 1) / q - v0 / q for j in range(1, q + 1))
    x_index = {k: top[k - 1] for k in range(1, p)}
    x_index[0] = top[p - 1]
    l_index = {j: bottom[q - 1 - j] for j in range(q)}
    v_on_x = {k: _frac(v0 + q * t) for k, t in x_index.items()}
    u_on_l = {j: _frac(u0 + p * t) for j, t in l_index.items()}
    if len(set(v_on_x.values())) != p or len(set(u_on_l.values())) != q:
        raise PatternError("offset puts two crossings at the same point")

    # far side of x: P lies toward +u, so boundary runs toward -v
    c1 = sorted(v_on_x, key=lambda k: -v_on_x[k])
    # far side of l: P lies toward +v on the bottom torus, whose orientation is
    # reversed, so boundary runs toward -u
    c2 = sorted(l_index, key=lambda j: -u_on_l[j])
    # near sides: +v along x, +u along l; the band along s sits at X_0 and L_0
    near_x = sorted(v_on_x, key=lambda k: v_on_x[k])
    near_l = sorted(l_index, key=lambda j: u_on_l[j])
    i = near_x.index(0)
    j = near_l.index(0)
    c3 = [("X", k) for k in near_x[i + 1:] + near_x[:i]]
    c3 += [("L", k) for k in near_l[j + 1:] + near_l[:j]]
    return c1, c2, c3


def flat_torus_pattern(p: int, q: int, u0: Fraction = Fraction(1, 3),
                       v0: Fraction = Fraction(1, 5)) -> GluedSurface:
    """Build the glued P/R pattern for any coprime ``p, q >= 2``.

    Accepts ``p > q`` as well so the swap symmetry can be tested; use
    :func:`generate_pattern` for normalized parameters.
    """
    if math.gcd(p, q) != 1 or min(p, q) < 2 or p == q:
        raise ParameterError("gcd(p,q) must be 1 with p, q >= 2")
    if not (0 < u0 < 1 and 0 < v0 < 1):
        raise ParameterError("offsets must lie in (0, 1)")
    c1, c2, c3 = _crossing_orders(p, q, u0, v0)
    slot1 = {k: i for i, k in enumerate(c1)}
    slot2 = {j: i for i, j in enumerate(c2)}
    slot3 = {key: i for i, key in enumerate(c3)}

    p_arcs = [Arc(L("a", None, "P"), (1, slot1[0]), (2, slot2[0]))]
    p_arcs += [Arc(L("d", k, "P"), (1, slot1[k]), (3, slot3[("X", k)])) for k in range(1, p)]
    p_arcs += [Arc(L("b", j, "P"), (2, slot2[j]), (3, slot3[("L", j)])) for j in range(1, q)]

    r_arcs = [Arc(L("c", None, "R"), (1, slot1[1]), (2, slot2[q - 1]))]
    r_arcs += [Arc(L("d", k, "R"), (3, slot3[("X", k)]), (1, slot1[(k + 1) % p])) for k in range(1, p)]
    r_arcs += [Arc(L("b", j, "R"), (2, slot2[j - 1]), (3, slot3[("L", j)])) for j in range(1, q)]

    p_rot = {1: tuple(range(len(c1))), 2: tuple(range(len(c2))), 3: tuple(range(len(c3)))}
    # R sees each circle with the opposite orientation
    r_rot = {c: tuple(reversed(order)) for c, order in p_rot.items()}
    P = PantsPattern("P", tuple(p_arcs), p_rot)
    R = PantsPattern("R", tuple(r_arcs), r_rot)
    gluing = {(c, s): (c, s) for c, order in p_rot.items() for s in order}
    g = GluedSurface(P, R, gluing)
    g.check_gluing()
    return g


def generate_pattern(params: ConstructionParams) -> GluedSurface:
    return flat_torus_pattern(params.p, params.q)


# -- verification ------------------------------------------------------------

@dataclass
class Check:
    name: str
    passed: bool
    failures: list[str]

    def to_dict(self):
        return {"name": self.name, "passed": self.passed, "failures": self.failures}


def _end_on(g: GluedSurface, label: ArcLabel, circle: int):
    pp = g.P if label.side == "P" else g.R
    arc = pp.arc(label)
    ends = [e for e in (arc.end1, arc.end2) if e[0] == circle]
    if len(ends) != 1:
        raise KeyError(f"{label} does not meet ∂{circle} once")
    return ends[0]


def _same_point(g: GluedSurface, p_label: ArcLabel, r_label: ArcLabel, circle: int) -> bool:
    try:
        return g.gluing.get(_end_on(g, p_label, circle)) == _end_on(g, r_label, circle)
    except KeyError:
        return False


def find_hexagons(pp: PantsPattern, params: ConstructionParams) -> dict[int, Region]:
    """Hexagons H_1, H_2 of a pants, told apart by the arcs on their boundary."""
    hexes = [r for r in region_decomposition(pp) if r.sides == 6]
    found = {}
    for which in (1, 2):
        d, b = params.hexagon_arcs(which)
        want = {L("d", d, pp.side), L("b", b, pp.side)}
        match = [h for h in hexes if want <= set(h.arcs)]
        if len(match) == 1:
            found[which] = match[0]
    return found


def verify_remark_identities(g: GluedSurface, params: ConstructionParams) -> list[Check]:
    """Check the seven families of boundary coincidences between P and R arcs."""
    p, q = params.p, params.q
    families = {
        "a-endpoints": [("a", None, "b", 1, 2), ("a", None, "d", p - 1, 1)],
        "c-endpoints": [("d", 1, "c", None, 1), ("b", q - 1, "c", None, 2)],
        "b-on-∂3": [("b", i, "b", i, 3) for i in range(1, q)],
        "d-on-∂3": [("d", i, "d", i, 3) for i in range(1, p)],
        "b-shift-on-∂2": [("b", i, "b", i + 1, 2) for i in range(1, q - 1)],
        "d-shift-on-∂1": [("d", i + 1, "d", i, 1) for i in range(1, p - 1)],
    }
    checks = []
    for name, rows in families.items():
        bad = []
        for pk, ps, rk, rs, c in rows:
            pl, rl = L(pk, ps, "P"), L(rk, rs, "R")
            if not _same_point(g, pl, rl, c):
                bad.append(f"{pl}∩∂{c} != {rl}∩∂{c}")
        checks.append(Check(name, not bad, bad))

    bad = []
    try:
        hp, hr = find_hexagons(g.P, params), find_hexagons(g.R, params)
    except PatternError as exc:
        hp, hr = {}, {}
        bad.append(str(exc))
    for which in (1, 2):
        if which not in hp or which not in hr:
            bad.append(f"H{which} not found on both sides")
            continue
        seg_p = [s for s in hp[which].segments if s[0] == 3]
        seg_r = [s for s in hr[which].segments if s[0] == 3]
        if len(seg_p) != 1 or len(seg_r) != 1:
            bad.append(f"H{which} does not meet ∂3 in one segment")
            continue
        _, a, b = seg_p[0]
        image = (3, g.gluing.get((3, b), (None, None))[1], g.gluing.get((3, a), (None, None))[1])
        if image != seg_r[0]:
            bad.append(f"H{which}^P∩∂3 != H{which}^R∩∂3")
    checks.append(Check("hexagons-on-∂3", not bad, bad))
    return checks


def verify_single_curve(g: GluedSurface, params: ConstructionParams) -> bool:
    curves = trace_curves(g)
    return len(curves) == 1 and len(curves[0]) == 2 * (params.p + params.q - 1)


def endpoint_counts(g: GluedSurface) -> tuple[int, int, int]:
    """Arc endpoints on each boundary circle, counting both P and R arcs."""
    cp, cr = g.P.endpoint_counts(), g.R.endpoint_counts()
    return tuple(cp[c] + cr[c] for c in (1, 2, 3))


def verify_census(g: GluedSurface, params: ConstructionParams) -> list[Check]:
    """Rectangle and hexagon counts and hexagon contents on each side."""
    p, q = params.p, params.q
    checks = []
    for pp in (g.P, g.R):
        bad = []
        try:
            regions = region_decomposition(pp)
        except PatternError as exc:
            checks.append(Check(f"census-{pp.side}", False, [str(exc)]))
            continue
        rect = [r for r in regions if r.sides == 4]
        hexes = [r for r in regions if r.sides == 6]
        other = [" ".join(r.word) for r in regions if r.sides not in (4, 6)]
        if other:
            bad.append(f"unexpected regions: {other}")
        if len(rect) != p + q - 4:
            bad.append(f"{len(rect)} rectangles, expected {p + q - 4}")
        if len(hexes) != 2:
            bad.append(f"{len(hexes)} hexagons, expected 2")
        found = find_hexagons(pp, params)
        for which in (1, 2):
            d, b = params.hexagon_arcs(which)
            if which not in found:
                bad.append(f"no hexagon contains d{d}{pp.side} and b{b}{pp.side}")
        if len(found) == 2 and found[1] == found[2]:
            bad.append("H1 and H2 coincide")
        checks.append(Check(f"census-{pp.side}", not bad, bad))
    return checks


def construction_battery(params: ConstructionParams) -> dict:
    """Every consistency check of the pattern for one parameter pair."""
    g = generate_pattern(params)
    p, q = params.p, params.q
    remark = verify_remark_identities(g, params)
    census = verify_census(g, params)
    counts = endpoint_counts(g)
    curves = trace_curves(g)
    single = verify_single_curve(g, params)
    expected_counts = (2 * p, 2 * q, 2 * (p + q - 2))
    checks = remark + census + [
        Check("single-curve", single,
              [] if single else [f"{len(curves)} curves of lengths {[len(c) for c in curves]}"]),
        Check("endpoint-counts", counts == expected_counts,
              [] if counts == expected_counts else [f"{counts} != {expected_counts}"]),
    ]
    return {
        "p": p, "q": q,
        "passed": all(c.passed for c in checks),
        "checks": [c.to_dict() for c in checks],
    }


def pattern_to_dict(g: GluedSurface, params: ConstructionParams) -> dict:
    """JSON-ready dump of both pants, the gluing, and the identity families."""
    def pants(pp: PantsPattern):
        return {
            "side": pp.side,
            "arcs": [{"label": str(a.label), "end1": list(a.end1), "end2": list(a.end2)}
                     for a in pp.arcs],
            "rotation": {str(c): list(order) for c, order in sorted(pp.rotation.items())},
            "regions": [{"word": list(r.word), "sides": r.sides}
                        for r in region_decomposition(pp)],
        }
    return {
        "p": params.p, "q": params.q,
        "q_bar": params.q_bar, "p_bar": params.p_bar,
        "P": pants(g.P),
        "R": pants(g.R),
        "gluing": [[list(k), list(v)] for k, v in sorted(g.gluing.items())],
        "identities": [c.to_dict() for c in verify_remark_identities(g, params)],
        "curve": [str(x) for x in trace_curves(g)[0]],
    }
