from fractions import Fraction

import pytest
from mpmath import mp

from gammaflow.exact import factorial, binomial, bernoulli, bernoulli_number, \
    even_zeta_coeff, reflection_coeff

def test_factorial_and_binomial():
    assert factorial(0) == 1
    assert factorial(10) == 3628800
    assert binomial(5, 2) == 10
    assert binomial(3, 5) == 0
    with pytest.raises(ValueError):
        factorial(-1)
    with pytest.raises(ValueError):
        binomial(2, -1)

def test_bernoulli_small_values():
    assert bernoulli_number(0) == 1
    assert bernoulli_number(1) == Fraction(-1, 2)
    assert bernoulli_number(3) == 0
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(12) == Fraction(-691, 2730)

def test_bernoulli_against_mpmath():
    with mp.workprec(200):
        for m in range(2, 61, 2):
            b = bernoulli(m)
            expected = mp.bernoulli(m)
            assert abs(mp.mpf(b.numerator) / b.denominator - expected) <= abs(expected) * mp.mpf(2) ** -180

def test_bernoulli_rejects_odd():
    with pytest.raises(ValueError):
        bernoulli(3)
    with pytest.raises(ValueError):
        bernoulli(0)

def test_even_zeta_coeff():
    # zeta(4) = (2/5) zeta(2)^2, zeta(6) = (8/35) zeta(2)^3
    assert even_zeta_coeff(2) == Fraction(2, 5)
    assert even_zeta_coeff(3) == Fraction(8, 35)
    with mp.workprec(200):
        for m in range(2, 12):
            c = even_zeta_coeff(m)
            value = mp.mpf(c.numerator) / c.denominator * mp.zeta(2) ** m
            assert abs(value - mp.zeta(2 * m)) < mp.mpf(2) ** -180
    with pytest.raises(ValueError):
        even_zeta_coeff(1)

def test_reflection_coeff():
    # pi t / sin(pi t) = 1 + pi^2 t^2 / 6 + 7 pi^4 t^4 / 360 + ...
    assert reflection_coeff(0) == 1
    assert reflection_coeff(1) == Fraction(1, 6)
    assert reflection_coeff(2) == Fraction(7, 360)
    assert reflection_coeff(3) == Fraction(31, 15120)

def test_reflection_series_truncation():
    K = 8
    with mp.workprec(300):
        t = mp.mpf(1) / 10
        x2 = (mp.pi * t) ** 2
        term = lambda k: mp.mpf(reflection_coeff(k).numerator) / reflection_coeff(k).denominator * x2 ** k
        partial = mp.fsum(term(k) for k in range(K + 1))
        exact = mp.pi * t / mp.sin(mp.pi * t)
        # Every coefficient is positive, so the error is the tail, about the first omitted term
        error = exact - partial
        assert term(K + 1) <= error <= 2 * term(K + 1)

if __name__ == "__main__":
    pytest.main([__file__])
