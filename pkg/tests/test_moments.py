from fractions import Fraction

import pytest
from mpmath import mp

from gammaflow.core.constants import GAMMA_N, DELTA_N, G_AT_1, QUADRATURE, SERIES, IDENTITY
from gammaflow.numerics import Interval, enclose_e, enclose_gamma
from gammaflow.polys import gamma_var
from gammaflow.sequences import gamma_n, gamma_sequence, gamma_star, delta_n, delta_tilde_n, \
    constant_record, multisection, eta_n

def _fraction(x):
    man, exp = mp.mpf(x).man_exp
    return Fraction(man) * Fraction(2) ** exp

def test_first_values():
    assert gamma_n(0, 128).contains(1)
    assert gamma_n(1, 128).overlaps(enclose_gamma(128))
    assert delta_n(0, 128).contains(-1)
    assert delta_n(0, 128).width == 0
    assert (enclose_e(128) * (eta_n(0, 128) - 1)).contains(-1)

def test_against_derivatives_of_gamma_function():
    with mp.workprec(400):
        for n in range(1, 7):
            expected = (-1) ** n * mp.diff(mp.gamma, 1, n)
            oracle = Interval.ball(_fraction(expected), Fraction(1, 10 ** 50), 256)
            assert gamma_n(n, 128).overlaps(oracle)

def test_sequence_and_star():
    seq = gamma_sequence(4, 128)
    assert len(seq) == 5
    assert seq[3] is gamma_n(3, 128)
    star = gamma_star(6, 128)
    assert sorted(star) == sorted(gamma_var(k) for k in range(1, 7))
    assert star[gamma_var(4)] is gamma_n(4, 128)

def test_delta_tilde_from_multisection():
    # delta~ - delta = e (eta~ - eta) = 2 e G_n(1)
    for n in range(6):
        g_value, _ = multisection(n, 128)
        diff = delta_tilde_n(n, 128) - delta_n(n, 128)
        assert diff.overlaps(enclose_e(128) * g_value * 2)
        assert delta_tilde_n(n, 128).is_negative()

def test_constant_record():
    record = constant_record(GAMMA_N, 3, 128)
    assert record.method != SERIES
    assert record.bits == 128
    quad = constant_record(DELTA_N, 3, 128, QUADRATURE)
    assert quad.method == QUADRATURE
    assert quad.value.overlaps(constant_record(DELTA_N, 3, 128).value)
    assert constant_record(DELTA_N, 3, 128).method == IDENTITY
    assert constant_record(G_AT_1, 2, 128).method == SERIES
    with pytest.raises(ValueError):
        constant_record('OMEGA', 1, 128)
    with pytest.raises(ValueError):
        constant_record(GAMMA_N, 2, 128, QUADRATURE)

def test_negative_order():
    with pytest.raises(ValueError):
        gamma_n(-1, 128)

if __name__ == "__main__":
    pytest.main([__file__])
