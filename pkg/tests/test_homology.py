import itertools
import math
from functools import reduce

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from hbknots.arith import Slope
from hbknots.construction import ConstructionParams, coprime_pairs
from hbknots.homology import (
    GroupPresentation, candidate_fillings, check_not_isotopic_to_boundary, compare_invariants,
    fillings_constraint, invariant_triple, quotient, sfs_presentation, smith_normal_form,
    winding_after_attachment,
)
from hbknots.twobridge import TwoBridgeFraction
from oracles import coset_quotient

TREFOIL, FIG8 = TwoBridgeFraction(1, 3), TwoBridgeFraction(2, 5)


def matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def det(M):
    if len(M) == 1:
        return M[0][0]
    return sum((-1) ** j * M[0][j] * det([r[:j] + r[j + 1:] for r in M[1:]]) for j in range(len(M)))


def determinantal_divisors(A):
    """gcd of all k x k minors, k = 1..min(m, n)."""
    m, n = len(A), len(A[0])
    out = []
    for k in range(1, min(m, n) + 1):
        minors = [det([[A[i][j] for j in cols] for i in rows])
                  for rows in itertools.combinations(range(m), k)
                  for cols in itertools.combinations(range(n), k)]
        out.append(reduce(math.gcd, minors, 0))
    return out


matrices = st.integers(1, 3).flatmap(lambda m: st.integers(1, 3).flatmap(
    lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=m, max_size=m)))


@settings(max_examples=300)
@given(matrices)
def test_smith_normal_form(A):
    D, U, V = smith_normal_form(A)
    assert matmul(matmul(U, A), V) == D
    assert abs(det(U)) == 1 and abs(det(V)) == 1
    m, n = len(A), len(A[0])
    diag = [D[i][i] for i in range(min(m, n))]
    assert all(D[i][j] == 0 for i in range(m) for j in range(n) if i != j)
    assert all(d >= 0 for d in diag)
    for a, b in zip(diag, diag[1:]):
        assert (b % a == 0) if a else b == 0
    # d_1 ... d_k equals the k-th determinantal divisor
    prods = list(itertools.accumulate(diag, lambda x, y: x * y))
    assert prods == determinantal_divisors(A)


@given(st.lists(st.integers(-8, 8), min_size=4, max_size=4))
def test_quotient_order_matches_coset_count(entries):
    rel = [entries[:2], entries[2:]]
    Q = quotient(rel, 2)
    brute = coset_quotient(rel, box=2 * max(map(abs, entries)) ** 2 + 2)
    if brute is None:
        assert Q.rank > 0
    else:
        assert Q.rank == 0 and math.prod(Q.torsion) == brute


@given(st.lists(st.integers(-8, 8), min_size=4, max_size=4), st.integers(-5, 5), st.integers(-5, 5))
def test_quotient_image_kills_relations(entries, s, t):
    rel = [entries[:2], entries[2:]]
    Q = quotient(rel, 2)
    x = [s * rel[0][i] + t * rel[1][i] for i in range(2)]
    assert Q.image(x) == Q.image([0, 0])


def test_windings_examples():
    assert winding_after_attachment(ConstructionParams(3, 4), 3) == 1
    assert winding_after_attachment(ConstructionParams(2, 5), 1) == 2
    assert winding_after_attachment(ConstructionParams(2, 5), 2) == 5


def test_windings_sweep():
    for pp in coprime_pairs(50):
        got = [winding_after_attachment(pp, i) for i in (1, 2, 3)]
        assert got == [pp.p, pp.q, pp.q - pp.p]
        assert check_not_isotopic_to_boundary(pp)


def test_presentation():
    G = sfs_presentation(ConstructionParams(3, 4))
    assert str(G) == "<x, y | x^3 y^-4>"
    assert G.abelianization() == (1, ())
    assert sfs_presentation(ConstructionParams(2, 3)).abelianization() == (1, ())


def test_presentation_sweep_is_Z():
    for pp in coprime_pairs(50):
        assert sfs_presentation(pp).abelianization() == (1, ())


def test_abelianization_general():
    assert GroupPresentation(("x", "y"), ((("x", 2), ("y", -4)),)).abelianization() == (1, (2,))
    assert GroupPresentation(("x",), ((("x", 1),),)).abelianization() == (0, ())
    # the excluded p = 1 shape is still Z
    assert GroupPresentation(("x", "y"), ((("x", 1), ("y", -1)),)).abelianization() == (1, ())
    with pytest.raises(ValueError):
        GroupPresentation(("x",), ((("z", 1),),))


def test_fillings():
    mu, lam = Slope(1, 0), Slope(0, 1)
    assert fillings_constraint(mu, lam, Slope(1, 1))
    assert not fillings_constraint(mu, lam, Slope(2, 1))
    assert candidate_fillings(mu, lam, 10) == sorted([Slope(1, 1), Slope(-1, 1)])
    with pytest.raises(ValueError):
        fillings_constraint(mu, mu, Slope(1, 1))


def test_invariant_triples():
    t = invariant_triple(TREFOIL, ConstructionParams(2, 3))
    assert compare_invariants(t, invariant_triple(TREFOIL, ConstructionParams(2, 3))) == "equal"
    assert compare_invariants(t, invariant_triple(FIG8, ConstructionParams(2, 3))) == "unequal"
    assert compare_invariants(t, invariant_triple(TREFOIL, ConstructionParams(2, 5))) == "unequal"
    # the right and left trefoils share (p, q) and the invariant cannot tell them apart
    left = invariant_triple(TwoBridgeFraction(2, 3), ConstructionParams(2, 3))
    assert compare_invariants(t, left) == "indistinguishable"
    # the figure-8 is amphichiral
    assert invariant_triple(TwoBridgeFraction(3, 5), ConstructionParams(2, 3)).token() == "2/5|2|3"
    with pytest.raises(ValueError):
        invariant_triple(TwoBridgeFraction(1, 1), ConstructionParams(2, 3))
