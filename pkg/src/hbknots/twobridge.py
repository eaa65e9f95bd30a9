"""Two-bridge knots as fractions m/n.

Schubert's classification: m/n and m'/n' give the same unoriented knot up
to orientation-preserving homeomorphism of S^3 iff n = n' and
m' = m^{±1} (mod n).  Mirror images replace m by -m.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import mod_inverse

# (r, s) pairs for which the disk rules below say something
SUPPORTED_RS = ((0, 0), (1, 1), (2, 0), (0, 2), (2, 2), (4, 2), (0, 4))


@dataclass(frozen=True, order=True)
class TwoBridgeFraction:
    m: int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"denominator must be >= 1, got {self.n}")
        if math.gcd(self.m, self.n) != 1:
            raise ValueError(f"{self.m}/{self.n} is not reduced")
        if self.n % 2 == 0:
            raise ValueError(f"{self.m}/{self.n} is a two-component link, not a knot")

    @classmethod
    def parse(cls, text: str) -> "TwoBridgeFraction":
        m, sep, n = text.strip().partition("/")
        if not sep:
            raise ValueError(f"expected m/n, got {text!r}")
        return cls(int(m), int(n))

    def __str__(self):
        return f"{self.m}/{self.n}"


def normalize(f: TwoBridgeFraction) -> TwoBridgeFraction:
    """Least of ``m mod n`` and its inverse; the unknot becomes ``1/1``."""
    if f.n == 1:
        return TwoBridgeFraction(1, 1)
    m = f.m % f.n
    return TwoBridgeFraction(min(m, mod_inverse(m, f.n)), f.n)


def mirror(f: TwoBridgeFraction) -> TwoBridgeFraction:
    return normalize(TwoBridgeFraction(-f.m, f.n))


def is_nontrivial(f: TwoBridgeFraction) -> bool:
    return normalize(f).n >= 3


def is_hyperbolic(f: TwoBridgeFraction) -> bool:
    """Two-bridge torus knots are exactly the fractions with m = ±1 mod n."""
    f = normalize(f)
    return f.n >= 3 and f.m % f.n not in (1, f.n - 1)


def m_bar(f: TwoBridgeFraction) -> int:
    """Inverse of -m mod n, taken with ``2|m_bar| <= n``."""
    if f.n == 1:
        return 0
    r = mod_inverse(-f.m, f.n)
    return r - f.n if 2 * r > f.n else r


@dataclass(frozen=True)
class RSVerdict:
    r: int
    s: int
    status: str  # "excluded" | "not excluded" | "unsupported"
    rule: str

    @property
    def excluded(self) -> bool:
        return self.status == "excluded"

    def to_dict(self):
        return {"r": self.r, "s": self.s, "status": self.status, "rule": self.rule}


def rs_disk_conditions(f: TwoBridgeFraction, r: int, s: int) -> RSVerdict:
    """Whether an (r, s) disk can exist in the exterior of the m/n tangle.

    An (r, s) disk meets the two meridian boundary curves in r points and the
    third curve in s points.  Only the consequences of the rational tangle disk
    classification that the construction relies on are encoded, as a rule table.
    """
    f = normalize(f)
    if (r, s) not in SUPPORTED_RS:
        return RSVerdict(r, s, "unsupported", f"no rule for ({r},{s}) disks")
    if (r, s) == (0, 0):
        return RSVerdict(r, s, "excluded", f"a compressing disk forces n = 0, but n = {f.n}")
    if (r, s) == (0, 4):
        return RSVerdict(r, s, "excluded", "(0,4) disks do not exist in a rational tangle exterior")
    if (r, s) in ((1, 1), (2, 0), (0, 2)):
        if is_nontrivial(f):
            return RSVerdict(r, s, "excluded",
                             f"a boundary-compressing disk forces a trivial knot, but n = {f.n}")
        return RSVerdict(r, s, "not excluded", "L is the unknot")
    # (2,2) and (4,2): r even and s < 4
    mb = m_bar(f)
    if abs(mb) > 1:
        return RSVerdict(r, s, "excluded", f"|m_bar| = {abs(mb)} > 1 with r even forces s >= 4")
    return RSVerdict(r, s, "not excluded", f"|m_bar| = {abs(mb)}: L is not hyperbolic")


def rs_table(f: TwoBridgeFraction) -> list[RSVerdict]:
    return [rs_disk_conditions(f, r, s) for r, s in SUPPORTED_RS]
