import itertools
from fractions import Fraction

import pytest

from hbknots.construction import (
    ConstructionParams, L, ParameterError, construction_battery, coprime_pairs,
    endpoint_counts, find_hexagons, flat_torus_pattern, generate_pattern,
    verify_remark_identities, verify_single_curve,
)
from hbknots.disksearch.model import same_cycle
from hbknots.pants import GluedSurface, region_decomposition, trace_curves

ALL_PAIRS = coprime_pairs(12)


def labels(pp):
    return {str(a.label) for a in pp.arcs}


def test_pair_count():
    # coprime 2 <= p < q <= 12
    assert len(ALL_PAIRS) == 34


@pytest.mark.parametrize("params", ALL_PAIRS, ids=lambda pp: f"{pp.p}-{pp.q}")
def test_battery(params):
    bat = construction_battery(params)
    failed = [c for c in bat["checks"] if not c["passed"]]
    assert not failed
    names = {c["name"] for c in bat["checks"]}
    assert len(names & {"a-endpoints", "c-endpoints", "b-on-∂3", "d-on-∂3", "b-shift-on-∂2",
                        "d-shift-on-∂1", "hexagons-on-∂3"}) == 7


@pytest.mark.parametrize("p,q,counts", [(2, 3, (4, 6, 6)), (3, 4, (6, 8, 10))])
def test_endpoint_counts(p, q, counts):
    assert endpoint_counts(generate_pattern(ConstructionParams(p, q))) == counts


def test_arcs_2_3(g23):
    assert labels(g23.P) == {"aP", "d1P", "b1P", "b2P"}
    assert labels(g23.R) == {"cR", "d1R", "b1R", "b2R"}


def test_hexagon_contents_2_3(g23):
    pp = ConstructionParams(2, 3)
    assert (pp.q_bar, pp.p_bar) == (1, 2)
    h = find_hexagons(g23.P, pp)
    assert {L("d", 1, "P"), L("b", 2, "P")} <= set(h[1].arcs)


def test_3_5_inverse_indexing():
    pp = ConstructionParams(3, 5)
    assert pp.q_bar == 2
    # d arcs indexed by multiples of q_bar: 1*2 = 2, 2*2 = 4 = 1 mod 3
    assert [(k * pp.q_bar) % pp.p for k in (1, 2)] == [2, 1]
    assert pp.hexagon_arcs(1) == (2, 2)
    assert pp.hexagon_arcs(2) == (1, 3)


@pytest.mark.parametrize("p,q,n", [(2, 3, 8), (3, 4, 12), (5, 7, 22)])
def test_single_curve(p, q, n):
    pp = ConstructionParams(p, q)
    g = generate_pattern(pp)
    assert verify_single_curve(g, pp)
    assert len(trace_curves(g)[0]) == n


@pytest.mark.parametrize("p,q,msg", [(2, 4, "gcd"), (1, 3, "p must"), (3, 3, "q must"), (5, 3, "q must")])
def test_bad_params(p, q, msg):
    with pytest.raises(ParameterError, match=msg):
        ConstructionParams(p, q)


def test_families():
    assert ConstructionParams(4, 5).family == "easy"
    assert ConstructionParams(4, 7).family == "hard"
    assert ConstructionParams(4, 9).family == "hard"
    assert ConstructionParams(2, 3).family == "easy"
    assert ConstructionParams(3, 8).family is None


def _expected_flags(g, params, s1, s2):
    at = g.P.arc_at()
    flagged = set()
    for s in (s1, s2):
        kind = at[(3, s)].label.kind
        flagged.add(f"{kind}-on-∂3")
    for h in find_hexagons(g.P, params).values():
        for c, a, b in h.segments:
            if c == 3 and {a, b} & {s1, s2}:
                flagged.add("hexagons-on-∂3")
    return flagged


@pytest.mark.parametrize("params", [ConstructionParams(2, 3), ConstructionParams(3, 5),
                                    ConstructionParams(4, 7)], ids=str)
def test_fault_injection_flags_touched_families(params):
    g = generate_pattern(params)
    for s1, s2 in itertools.combinations(g.P.rotation[3], 2):
        glue = dict(g.gluing)
        glue[(3, s1)], glue[(3, s2)] = glue[(3, s2)], glue[(3, s1)]
        bad = GluedSurface(g.P, g.R, glue)
        flagged = {c.name for c in verify_remark_identities(bad, params) if not c.passed}
        assert flagged == _expected_flags(g, params, s1, s2)


def _kinds(word, swap):
    out = []
    for t in word:
        if t.startswith("∂"):
            t = {"∂1": "∂2", "∂2": "∂1"}.get(t, t) if swap else t
        else:
            k = {"b": "d", "d": "b"}.get(t[0], t[0]) if swap else t[0]
            t = k + t[-1]
        out.append(t)
    return out


@pytest.mark.parametrize("p,q", [(2, 3), (3, 4), (3, 5), (4, 7), (5, 8)])
def test_swap_symmetry(p, q):
    # exchanging the roles of p and q swaps b with d and ∂1 with ∂2
    g, h = flat_torus_pattern(p, q), flat_torus_pattern(q, p)
    for side in "PR":
        mine = [_kinds(r.word, False) for r in region_decomposition(getattr(g, side))]
        theirs = [_kinds(r.word, True) for r in region_decomposition(getattr(h, side))]
        assert len(mine) == len(theirs)
        left = list(theirs)
        for w in mine:
            hit = next(i for i, x in enumerate(left) if same_cycle(w, x))
            left.pop(hit)
    c1 = _kinds(map(str, trace_curves(g)[0]), False)
    c2 = _kinds(map(str, trace_curves(h)[0]), True)
    assert same_cycle(c1, c2)


def test_pattern_independent_of_offset():
    base = generate_pattern(ConstructionParams(4, 7))
    other = flat_torus_pattern(4, 7, Fraction(2, 7), Fraction(3, 11))
    assert same_cycle(trace_curves(base)[0], trace_curves(other)[0])
