from fractions import Fraction

import pytest

from gammaflow.polys import Poly, moment_from_cumulants, cumulant_from_moments, gamma_poly, \
    zeta_poly, gamma_var, kappa_var, zeta_var
from gammaflow.exact import binomial
from gammaflow.polys.bell import reduce_even_zetas

k1, k2, k3 = (Poly.var(kappa_var(i)) for i in (1, 2, 3))
g1, g2 = (Poly.var(gamma_var(i)) for i in (1, 2))

def test_low_order_bell_polynomials():
    assert moment_from_cumulants(1) == k1
    assert moment_from_cumulants(2) == k2 + k1 ** 2
    assert moment_from_cumulants(3) == k3 + k2 * k1 * 3 + k1 ** 3

def test_bell_term_counts_are_partition_numbers():
    partitions = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    for n, count in enumerate(partitions, 1):
        assert moment_from_cumulants(n).term_count() == count

def test_bell_derivative_in_cumulants():
    # d B_j / d kappa_ell = C(j, ell) B_{j - ell}, with B_0 = 1
    bell = lambda j: Poly.const(1) if j == 0 else moment_from_cumulants(j)
    for j in range(1, 11):
        for ell in range(1, j + 1):
            derivative = moment_from_cumulants(j).partial_derivative(kappa_var(ell))
            assert derivative == bell(j - ell) * binomial(j, ell), (j, ell)

def test_moments_and_cumulants_are_inverse():
    for n in range(1, 9):
        mapping = {kappa_var(ell): cumulant_from_moments(ell) for ell in range(1, n + 1)}
        assert moment_from_cumulants(n).substitute(mapping) == Poly.var(gamma_var(n))

def test_zeta_polys():
    assert zeta_poly(2) == g2 - g1 ** 2
    with pytest.raises(ValueError):
        zeta_poly(1)

def test_gamma_poly():
    assert gamma_poly(1) == g1
    assert gamma_poly(2) == g1 ** 2 + Poly.var(zeta_var(2))

def test_reduce_even_zetas():
    z2 = Poly.var(zeta_var(2))
    assert reduce_even_zetas(z2 ** 2) == Poly.var(zeta_var(4)) * Fraction(5, 2)
    z3 = Poly.var(zeta_var(3))
    assert reduce_even_zetas(z3 * z2) == z3 * z2

if __name__ == "__main__":
    pytest.main([__file__])
