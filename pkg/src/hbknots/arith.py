"""Number-theoretic helpers and slopes on a torus."""
from __future__ import annotations

import math
from dataclasses import dataclass


class NotInvertibleError(ValueError):
    """Raised when a residue has no inverse; ``gcd`` is the witness."""

    def __init__(self, a: int, n: int, gcd: int):
        super().__init__(f"{a} is not invertible mod {n}: gcd({a % n}, {n}) = {gcd}")
        self.a = a
        self.n = n
        self.gcd = gcd


def mod_inverse(a: int, n: int) -> int:
    """Inverse of ``a`` modulo ``n`` as a residue in ``[0, n)``.

    ``mod_inverse(a, 1)`` is 0, since every integer is congruent to 0 mod 1.

    >>> mod_inverse(4, 7)
    2
    """
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    if n == 1:
        return 0
    g = math.gcd(a % n, n)
    if g != 1:
        raise NotInvertibleError(a, n, g)
    return pow(a, -1, n)


def residue(i: int, n: int) -> int:
    """Representative of ``i`` in ``[1, n]``, so that index ``-1`` means ``n - 1``
    and index 0 means ``n``."""
    r = i % n
    return r if r else n


@dataclass(frozen=True, order=True)
class Slope:
    """An isotopy class of essential curves on a torus, stored as a reduced
    fraction with nonnegative denominator.  ``Slope(1, 0)`` is the infinite slope."""

    numerator: int
    denominator: int

    def __post_init__(self):
        n, d = self.numerator, self.denominator
        if n == 0 and d == 0:
            raise ValueError("0/0 is not a slope")
        g = math.gcd(n, d)
        n, d = n // g, d // g
        if d < 0 or (d == 0 and n < 0):
            n, d = -n, -d
        object.__setattr__(self, "numerator", n)
        object.__setattr__(self, "denominator", d)

    @classmethod
    def parse(cls, text: str) -> "Slope":
        num, _, den = text.partition("/")
        return cls(int(num), int(den) if den else 1)

    def __str__(self):
        return f"{self.numerator}/{self.denominator}"


def slope_distance(s1: Slope, s2: Slope) -> int:
    """Minimal geometric intersection number of two slopes."""
    return abs(s1.numerator * s2.denominator - s2.numerator * s1.denominator)
