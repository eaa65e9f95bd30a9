import math

import hypothesis.strategies as st
import pytest
from hypothesis import given

from hbknots.arith import NotInvertibleError, Slope, mod_inverse, residue, slope_distance
from oracles import brute_mod_inverse


@pytest.mark.parametrize("a,n,inv", [(3, 2, 1), (2, 3, 2), (4, 7, 2)])
def test_mod_inverse_examples(a, n, inv):
    assert mod_inverse(a, n) == inv


def test_mod_inverse_exhaustive():
    for n in range(2, 51):
        for a in range(-n, 2 * n):
            if math.gcd(a, n) == 1:
                assert mod_inverse(a, n) == brute_mod_inverse(a, n)
            else:
                with pytest.raises(NotInvertibleError) as exc:
                    mod_inverse(a, n)
                assert exc.value.gcd == math.gcd(a, n)


def test_mod_inverse_modulus_one():
    assert mod_inverse(5, 1) == 0
    with pytest.raises(ValueError):
        mod_inverse(1, 0)


def test_residue_wraps_to_top():
    assert residue(-1, 5) == 4
    assert residue(0, 5) == 5
    assert residue(7, 5) == 2


@pytest.mark.parametrize("s1,s2,d", [("0/1", "1/0", 1), ("2/3", "1/2", 1), ("3/5", "3/5", 0)])
def test_slope_distance_examples(s1, s2, d):
    assert slope_distance(Slope.parse(s1), Slope.parse(s2)) == d


def test_slope_normalises_sign_and_gcd():
    assert Slope(-2, -4) == Slope(1, 2)
    assert Slope(-1, 0) == Slope(1, 0)
    assert str(Slope(6, -4)) == "-3/2"
    with pytest.raises(ValueError):
        Slope(0, 0)


slopes = st.tuples(st.integers(-20, 20), st.integers(-20, 20)).filter(lambda t: t != (0, 0)).map(
    lambda t: Slope(*t))


@given(slopes, slopes)
def test_slope_distance_symmetric_and_zero_iff_equal(a, b):
    assert slope_distance(a, b) == slope_distance(b, a)
    assert (slope_distance(a, b) == 0) == (a == b)
