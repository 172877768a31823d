from fractions import Fraction

import pytest

from gammaflow.exact import factorial
from gammaflow.numerics import Interval
from gammaflow.sequences import eval_F, eta_n, eta_tilde_n, multisection, partial_sum

def test_partial_sum():
    # -0! (1 + 1/2) for z = 1, n = 0, K = 2
    assert partial_sum(0, 1, 2) == Fraction(-3, 2)
    assert partial_sum(2, -1, 1) == Fraction(2)
    assert partial_sum(3, 1, 0) == 0

def test_eval_F_encloses_partial_sums():
    value = eval_F(1, Fraction(1, 2), 128)
    assert value.contains(partial_sum(1, Fraction(1, 2), 200))
    assert eval_F(4, 0, 128).contains(0)
    assert eval_F(4, 0, 128).width == 0

def test_eta_small_orders():
    # eta^(0) = 1 - 1/e and eta~^(0) = 1 - e
    one_minus_inv_e = Interval.ball('0.63212055882855767840447622983853913255', Fraction(1, 10 ** 38))
    assert eta_n(0, 128).overlaps(one_minus_inv_e)
    assert not eta_n(0, 128).overlaps(Interval.exact('0.6321205588285576785', 128))
    assert eta_tilde_n(0, 128).overlaps(eta_tilde_n(0, 256))
    assert eta_tilde_n(0, 128).is_negative()

def test_eta_precision_consistency():
    for n in [1, 5, 15]:
        assert eta_n(n, 128).overlaps(eta_n(n, 256))
        assert eta_n(n, 256).width < eta_n(n, 128).width

def test_eta_width():
    for n in range(16):
        assert eta_n(n, 128).width < Fraction(factorial(n) + 1, 2 ** 120)

def test_multisection():
    for n in range(0, 10):
        g_value, h_value = multisection(n, 128)
        assert (g_value + h_value).overlaps(eta_tilde_n(n, 128))
        assert (h_value - g_value).overlaps(eta_n(n, 128))

def test_negative_order_rejected():
    with pytest.raises(ValueError):
        eta_n(-1, 128)
    with pytest.raises(ValueError):
        partial_sum(-2, 1, 3)

if __name__ == "__main__":
    pytest.main([__file__])
