from fractions import Fraction

import numpy as np
import pytest
from mpmath import mp

from gammaflow.asymptotics import lambert_w
from gammaflow.numerics import Interval
from gammaflow.numerics.constants import enclose_e

def _fraction(x):
    man, exp = mp.mpf(x).man_exp
    return Fraction(man) * Fraction(2) ** exp

def test_fixed_points():
    assert lambert_w(enclose_e(128), 128).contains(1)
    omega = lambert_w(1, 128)
    assert omega.overlaps(Interval.ball('0.5671432904097838729999686622', Fraction(1, 10 ** 25)))
    assert omega.width < Fraction(1, 10 ** 30)
    half = Interval.exact(Fraction(1, 2), 128)
    assert lambert_w(half * half.exp(), 128).contains(Fraction(1, 2))

def test_defining_equation():
    rng = np.random.RandomState(7)
    for x in rng.uniform(1e-3, 1e6, size = 25):
        q = Fraction(float(x))
        w = lambert_w(q, 128)
        assert (w * w.exp()).contains(q)
        assert w.is_positive()
        with mp.workprec(200):
            expected = _fraction(mp.lambertw(mp.mpf(float(x))).real)
        assert w.overlaps(Interval.ball(expected, Fraction(1, 2 ** 150), 256))

def test_interval_argument_is_monotone():
    x = Interval.hull(10, 20, 128)
    w = lambert_w(x, 128)
    assert w.contains(lambert_w(10, 128))
    assert w.contains(lambert_w(20, 128))

def test_precision_tightens():
    assert lambert_w(50, 256).width < lambert_w(50, 64).width

@pytest.mark.parametrize('x', [0, -1, '-0.5'])
def test_non_positive(x):
    with pytest.raises(ValueError):
        lambert_w(x, 128)

if __name__ == "__main__":
    pytest.main([__file__])
