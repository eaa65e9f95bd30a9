"""Slow reference implementations used to check the fast code paths."""
from __future__ import annotations

import itertools

from hbknots.disksearch import predicates as pr
from hbknots.disksearch.model import EPSILON_KINDS, DeltaComponent, DiskCandidate, EpsilonDescriptor


def brute_mod_inverse(a, n):
    if n == 1:
        return 0
    return next(x for x in range(n) if (a * x) % n == 1)


def coset_quotient(relations, box=12):
    """Order of Z^2 / <relations> by counting lattice points of a fundamental
    domain, for full-rank relation lattices; None when the quotient is infinite."""
    if len(relations) < 2:
        return None
    (a, b), (c, d) = relations[:2]
    det = abs(a * d - b * c)
    if det == 0:
        return None
    # brute-force: group points of a big box by their class mod the lattice
    classes = set()
    for x in range(-box, box + 1):
        for y in range(-box, box + 1):
            # (x, y) = s*(a,b) + t*(c,d) with rational s, t; reduce fractional parts
            s = (x * d - y * c) % det
            t = (a * y - b * x) % det
            classes.add((s, t))
    return len(classes)


def noncrossing_matchings(points):
    """All non-crossing perfect matchings of a list of indices in circular order."""
    if not points:
        yield ()
        return
    first = points[0]
    for k in range(1, len(points), 2):
        inside, outside = points[1:k], points[k + 1:]
        for m1 in noncrossing_matchings(inside):
            for m2 in noncrossing_matchings(outside):
                yield ((first, points[k]),) + m1 + m2


def _walks(ctx, start, stop, foot, collar_arcs, limit):
    """Label sequences of R walks from region start to region stop."""
    out = []

    def go(region, last, path):
        if region == stop:
            out.append(tuple(path))
        if len(path) == limit:
            return
        for a, nxt in ctx.neighbours("R", region):
            if a == last and region != foot:
                continue
            if collar_arcs is not None and a not in collar_arcs:
                continue
            go(nxt, a, path + [a])

    go(start, None, [])
    return out


def brute_force_survivors(ctx, max_delta, max_eps_r, disabled=frozenset()):
    """Count candidates passing every enabled predicate, by plain enumeration."""
    on = lambda name: name not in disabled
    hard = ctx.params.family == "hard"
    survivors = 0
    dirs = [(c, r) for c in (1, 2, 3) for r in (False, True)]
    for foot in (1, 2):
        F = ctx.hexagon["R"][foot]
        required = ctx.required_pair(foot)
        for kind in EPSILON_KINDS:
            for enter, exit_, p_in, p_out, p_labels in ctx.p_routes(kind):
                A = ctx.across("P", p_in, enter)
                B = ctx.across("P", p_out, exit_)
                for k in range(1, max_delta + 1):
                    for ds in itertools.product(dirs, repeat=k):
                        deltas = tuple(DeltaComponent(c, ctx.delta_sequence(c, foot), r) for c, r in ds)
                        stub = DiskCandidate(EpsilonDescriptor(kind, foot, enter, exit_, (), p_labels, ()), deltas)
                        if on(pr.LABEL_SEQUENCE) and not pr.check_label_sequence(stub):
                            continue
                        if hard and on(pr.ENDPOINTS) and not pr.check_endpoints_of_epsilon(stub, True):
                            continue
                        gamma = ds[0][0]
                        collar = set(ctx.circle_arcs[gamma])
                        outs = _walks(ctx, F, A, F, collar if enter == gamma else None, max_eps_r)
                        backs = _walks(ctx, B, F, F, collar if exit_ == gamma else None, max_eps_r)
                        for o in outs:
                            for b in backs:
                                if len(o) + len(b) > max_eps_r:
                                    continue
                                eps = EpsilonDescriptor(kind, foot, enter, exit_, o, p_labels, b)
                                survivors += _count_matchings(ctx, eps, deltas, required, on)
    return survivors


def _count_matchings(ctx, eps, deltas, required, on):
    cand = DiskCandidate(eps, deltas)
    pts = cand.points()
    if len(pts) % 2:
        return 0
    count = 0
    for chords in noncrossing_matchings(list(range(len(pts)))):
        c = DiskCandidate(eps, deltas, tuple(sorted(chords)))
        labels = [(pts[i].label, pts[j].label) for i, j in c.chords]
        same = [pts[i].block for i, j in c.chords if pts[i].block == pts[j].block]
        if any(b == 0 for b in same) or (same and on(pr.DELTA_SELF)):
            continue
        if on(pr.NONADJACENT) and not pr.check_nonadjacent(c):
            continue
        if on(pr.ARCS_IN_E) and not all(pr.check_arcs_in_E(l, ctx.e_cycle) for l in labels):
            continue
        if on(pr.E_PLANAR) and not pr.check_E_planarity(labels, ctx.e_cycle):
            continue
        if on(pr.ADJACENCY) and not pr.check_adjacency_bound(c):
            continue
        if on(pr.EPSILON_COUNTS) and not pr.check_epsilon_counts(c, ctx.params.p):
            continue
        if on(pr.OUTERMOST) and not pr.check_outermost(c, required):
            continue
        if on(pr.SCHARLEMANN) and not pr.check_scharlemann(c):
            continue
        count += 1
    return count
