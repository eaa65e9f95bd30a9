"""First homology of the genus two handlebody H and its 2-handle quotients.

Coordinates are dual to the meridian disks D_m, D_l, so the knot K has
class (p, q).  The boundary curves of P are fixed as

    [∂1P] = (0, 1),   [∂2P] = (1, 0),   [∂3P] = (-1, -1),

which is the assignment (up to symmetry) making K wind p, q and q - p
times after attaching a 2-handle along ∂1P, ∂2P, ∂3P respectively.
"""
from __future__ import annotations

from dataclasses import dataclass

from .arith import Slope, slope_distance
from .construction import ConstructionParams
from .twobridge import TwoBridgeFraction, is_nontrivial, mirror, normalize

HomologyClass = tuple[int, int]

BOUNDARY_CLASSES: dict[int, HomologyClass] = {1: (0, 1), 2: (1, 0), 3: (-1, -1)}


def knot_class(params: ConstructionParams) -> HomologyClass:
    return (params.p, params.q)


def smith_normal_form(A: list[list[int]]):
    """Return ``(D, U, V)`` with ``U @ A @ V == D`` diagonal, U and V unimodular,
    and each diagonal entry dividing the next."""
    m, n = len(A), len(A[0]) if A else 0
    D = [row[:] for row in A]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(M, i, j):
        M[i], M[j] = M[j], M[i]

    def swap_cols(M, i, j):
        for row in M:
            row[i], row[j] = row[j], row[i]

    def add_row(M, src, dst, k):  # row dst += k * row src
        M[dst] = [a + k * b for a, b in zip(M[dst], M[src])]

    def add_col(M, src, dst, k):
        for row in M:
            row[dst] += k * row[src]

    t = 0
    while t < min(m, n):
        nonzero = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if not nonzero:
            break
        _, i, j = min(nonzero)
        swap_rows(D, t, i), swap_rows(U, t, i)
        swap_cols(D, t, j), swap_cols(V, t, j)
        done = False
        while not done:
            done = True
            for i in range(t + 1, m):
                k = D[i][t] // D[t][t]
                add_row(D, t, i, -k), add_row(U, t, i, -k)
                if D[i][t]:
                    swap_rows(D, t, i), swap_rows(U, t, i)
                    done = False
            for j in range(t + 1, n):
                k = D[t][j] // D[t][t]
                add_col(D, t, j, -k), add_col(V, t, j, -k)
                if D[t][j]:
                    swap_cols(D, t, j), swap_cols(V, t, j)
                    done = False
            if done:
                # enforce divisibility by folding a bad row into row t
                for i in range(t + 1, m):
                    if any(D[i][j] % D[t][t] for j in range(t + 1, n)):
                        add_row(D, i, t, 1), add_row(U, i, t, 1)
                        done = False
                        break
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return D, U, V


@dataclass(frozen=True)
class Quotient:
    """Z^n modulo the row span of a relation matrix, in Smith coordinates."""

    torsion: tuple[int, ...]
    rank: int
    V: tuple[tuple[int, ...], ...]
    offset: int  # index of the first free coordinate

    def image(self, x) -> tuple[int, ...]:
        n = len(self.V)
        y = [sum(x[i] * self.V[i][j] for i in range(n)) for j in range(n)]
        tors = tuple(y[self.offset - len(self.torsion) + k] % d for k, d in enumerate(self.torsion))
        return tors + tuple(y[self.offset:])


def quotient(relations: list[list[int]], n: int) -> Quotient:
    if not relations:
        V = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        return Quotient((), n, V, 0)
    D, _, V = smith_normal_form(relations)
    diag = [D[i][i] for i in range(min(len(D), n))]
    r = sum(1 for d in diag if d)
    torsion = tuple(d for d in diag[:r] if d != 1)
    return Quotient(torsion, n - r, tuple(map(tuple, V)), r)


def winding_after_attachment(params: ConstructionParams, boundary: int) -> int:
    """Algebraic winding of K in the solid torus H[∂_i P]."""
    Q = quotient([list(BOUNDARY_CLASSES[boundary])], 2)
    assert Q.rank == 1 and not Q.torsion
    (w,) = Q.image(knot_class(params))
    return abs(w)


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple[str, ...]
    relators: tuple[tuple[tuple[str, int], ...], ...]  # words as (generator, exponent)

    def __post_init__(self):
        for word in self.relators:
            for g, _ in word:
                if g not in self.generators:
                    raise ValueError(f"relator uses undeclared generator {g}")

    def relation_matrix(self) -> list[list[int]]:
        rows = []
        for word in self.relators:
            row = [0] * len(self.generators)
            for g, e in word:
                row[self.generators.index(g)] += e
            rows.append(row)
        return rows

    def abelianization(self) -> tuple[int, tuple[int, ...]]:
        """(free rank, torsion coefficients)."""
        Q = quotient(self.relation_matrix(), len(self.generators))
        return Q.rank, Q.torsion

    def __str__(self):
        rel = ", ".join(" ".join(f"{g}^{e}" for g, e in w) for w in self.relators)
        return f"<{', '.join(self.generators)} | {rel}>"


def sfs_presentation(params: ConstructionParams) -> GroupPresentation:
    """pi_1 of the Seifert fibered space obtained from H(lambda)[∂3P]: x^p = y^q."""
    return GroupPresentation(("x", "y"), ((("x", params.p), ("y", -params.q)),))


def check_not_isotopic_to_boundary(params: ConstructionParams) -> bool:
    """Exceptional fibre orders would force q - p to equal p or q."""
    return (params.q - params.p) not in (params.p, params.q)


def fillings_constraint(mu: Slope, lam: Slope, alpha: Slope) -> bool:
    """Necessary condition on a third handlebody filling slope."""
    if mu == lam:
        raise ValueError("mu and lambda must differ")
    return slope_distance(alpha, mu) == 1 and slope_distance(alpha, lam) == 1


def candidate_fillings(mu: Slope, lam: Slope, bound: int) -> list[Slope]:
    """All slopes with entries bounded by ``bound`` passing :func:`fillings_constraint`."""
    found = set()
    for a in range(-bound, bound + 1):
        for b in range(0, bound + 1):
            if (a, b) == (0, 0):
                continue
            try:
                s = Slope(a, b)
            except ValueError:
                continue
            if fillings_constraint(mu, lam, s):
                found.add(s)
    return sorted(found)


@dataclass(frozen=True)
class InvariantTriple:
    """The three 2-handle fillings along ∂P: a knot exterior and two solid
    tori in which K winds p and q times."""

    knot: TwoBridgeFraction
    p: int
    q: int

    def token(self) -> str:
        return f"{self.knot}|{self.p}|{self.q}"


def invariant_triple(knot: TwoBridgeFraction, params: ConstructionParams) -> InvariantTriple:
    if not is_nontrivial(knot):
        raise ValueError(f"{knot} is the unknot")
    return InvariantTriple(normalize(knot), params.p, params.q)


def compare_invariants(t1: InvariantTriple, t2: InvariantTriple) -> str:
    """``"equal"``, ``"unequal"``, or ``"indistinguishable"`` for a chiral
    mirror pair with the same (p, q)."""
    if t1 == t2:
        return "equal"
    if (t1.p, t1.q) == (t2.p, t2.q) and mirror(t1.knot) == t2.knot:
        return "indistinguishable"
    return "unequal"
