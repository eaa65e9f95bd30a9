import hypothesis.strategies as st
import pytest
from hypothesis import given

from hbknots.construction import ConstructionParams, L, generate_pattern
from hbknots.disksearch.model import same_cycle
from hbknots.pants import (
    Arc, ArcLabel, GluedSurface, NonDiskRegionError, PantsPattern, PatternError,
    region_decomposition, relabel, trace_curves,
)


def test_label_roundtrip():
    for text in ("aP", "cR", "d2P", "b11R"):
        assert str(ArcLabel.parse(text)) == text
    with pytest.raises(ValueError):
        ArcLabel("a", None, "R")
    with pytest.raises(ValueError):
        ArcLabel("b", None, "P")


def test_trace_2_3(g23):
    (curve,) = trace_curves(g23)
    want = [L("a", None, "P"), L("b", 1, "R"), L("b", 1, "P"), L("b", 2, "R"),
            L("b", 2, "P"), L("c", None, "R"), L("d", 1, "P"), L("d", 1, "R")]
    assert same_cycle(curve, want)


@pytest.mark.parametrize("p,q,n", [(3, 4, 12), (5, 7, 22)])
def test_trace_length(p, q, n):
    (curve,) = trace_curves(generate_pattern(ConstructionParams(p, q)))
    assert len(curve) == n


def two_parallel(side):
    arcs = (Arc(L("b", 1, side), (1, 0), (2, 0)), Arc(L("b", 2, side), (1, 1), (2, 1)))
    return PantsPattern(side, arcs, {1: (0, 1), 2: (1, 0), 3: ()})


def test_parallel_arcs_close_into_two_curves():
    P, R = two_parallel("P"), two_parallel("R")
    g = GluedSurface(P, R, {(c, s): (c, s) for c in (1, 2) for s in (0, 1)})
    curves = trace_curves(g)
    assert sorted(map(len, curves)) == [2, 2]


def test_dangling_slot():
    P, R = two_parallel("P"), two_parallel("R")
    g = GluedSurface(P, R, {(1, 0): (1, 0), (1, 1): (1, 1), (2, 0): (2, 0)})
    with pytest.raises(PatternError, match="dangling"):
        trace_curves(g)
    with pytest.raises(PatternError, match="dangling"):
        g.check_gluing()


def test_region_with_empty_circle_is_not_a_disk():
    with pytest.raises(NonDiskRegionError):
        region_decomposition(two_parallel("P"))


def test_empty_pattern_single_region():
    pp = PantsPattern("P", (), {1: (), 2: (), 3: ()})
    (r,) = region_decomposition(pp)
    assert r.arcs == () and len(r.word) == 3


def test_slot_reuse_rejected():
    arcs = (Arc(L("b", 1, "P"), (1, 0), (2, 0)), Arc(L("b", 2, "P"), (1, 0), (2, 1)))
    with pytest.raises(PatternError, match="used by"):
        PantsPattern("P", arcs, {1: (0,), 2: (0, 1), 3: ()})


def test_gluing_must_reverse_order(g23):
    order = g23.P.rotation[3]
    if len(order) < 3:
        pytest.skip("needs three slots")
    bad = dict(g23.gluing)
    a, b = (3, order[0]), (3, order[1])
    bad[a], bad[b] = bad[b], bad[a]
    with pytest.raises(PatternError, match="reverse"):
        GluedSurface(g23.P, g23.R, bad).check_gluing()


@pytest.mark.parametrize("p,q,rect", [(2, 3, 1), (3, 4, 3)])
def test_region_census_examples(p, q, rect):
    g = generate_pattern(ConstructionParams(p, q))
    for pp in (g.P, g.R):
        sides = sorted(r.sides for r in region_decomposition(pp))
        assert sides == [4] * rect + [6, 6]


@pytest.mark.parametrize("p,q", [(2, 3), (3, 5), (4, 9), (7, 10)])
def test_side_count_identity(p, q):
    # every arc contributes two sides and every side sits next to a boundary segment
    g = generate_pattern(ConstructionParams(p, q))
    for pp in (g.P, g.R):
        regs = region_decomposition(pp)
        assert sum(r.sides for r in regs) == 4 * len(pp.arcs)
        assert len(regs) == len(pp.arcs) - 1


@given(st.sampled_from([(2, 3), (3, 4), (3, 5), (4, 7)]), st.randoms(use_true_random=False))
def test_relabel_invariance(pq, rnd):
    g = generate_pattern(ConstructionParams(*pq))
    pp = g.P
    mapping = {}
    for c, order in pp.rotation.items():
        new = list(range(100, 100 + len(order)))
        rnd.shuffle(new)
        mapping.update({(c, s): (c, t) for s, t in zip(order, new)})
    before = [r.word for r in region_decomposition(pp)]
    after = [r.word for r in region_decomposition(relabel(pp, mapping))]
    assert before == after
    # rotating the start of each cyclic order changes nothing either
    rot = {c: order[1:] + order[:1] for c, order in pp.rotation.items()}
    assert [r.word for r in region_decomposition(PantsPattern("P", pp.arcs, rot))] == before
