'''
Exact content of the cumulant-coordinate argument: the Jacobian of the
moments with respect to the free cumulants kappa_1, kappa_2, kappa_3,
kappa_5, ..., kappa_{2n-1}, its value at kappa_1 = 1 with every other free
cumulant zero, and the Pascal submatrix it reduces to.
'''
from __future__ import print_function
from __future__ import division
from __future__ import absolute_import

import logging
from fractions import Fraction

import numpy as np

from ..core.errors import IdentityViolation
from ..exact.combinatorics import binomial, factorial, even_zeta_coeff
from ..polys.bell import moment_from_cumulants
from ..polys.poly import Poly, kappa_var
from .determinants import bareiss_det
from .jacobian import ThetaChoice

logger = logging.getLogger(__package__)

CASES = ['I', 'II', 'III', 'IV', 'V']

def _check(n, theta):
    if not isinstance(theta, ThetaChoice):
        raise ValueError(f'theta must be a ThetaChoice, got {theta!r}')
    theta.validate(n)

def lemma4_rows(n : int, theta : ThetaChoice) -> list:
    '''Moment indices {1, n, n+1, ..., 2n} without the one theta names'''
    _check(n, theta)
    return [j for j in [1] + list(range(n, 2 * n + 1)) if j != theta.k]

def lemma4_columns(n : int) -> list:
    '''Free cumulant indices {1, 2, 3, 5, ..., 2n-1}'''
    if not isinstance(n, int) or n < 2:
        raise ValueError(f'n must be an integer >= 2, got {n!r}')
    return [1, 2] + list(range(3, 2 * n, 2))

def lemma4_case(n : int, theta : ThetaChoice) -> str:
    '''
    - I: theta = gamma^(2n)
    - II: theta = gamma
    - III: theta = gamma^(n)
    - IV: theta = gamma^(n+1)
    - V: theta = gamma^(k), n+2 <= k <= 2n-1
    '''
    _check(n, theta)
    if theta.is_gamma:
        return 'II'
    if theta.k == 2 * n:
        return 'I'
    if theta.k == n:
        return 'III'
    if theta.k == n + 1:
        return 'IV'
    return 'V'

def pascal_matrix(size : int) -> np.ndarray:
    '''[C(r, c)] for 0 <= r, c < size, lower triangular'''
    P = np.zeros((size, size), dtype = object)
    for r in range(size):
        for c in range(r + 1):
            P[r, c] = binomial(r, c)
    return P

def pascal_submatrix(n : int, theta : ThetaChoice) -> np.ndarray:
    rows = lemma4_rows(n, theta)
    cols = lemma4_columns(n)
    return pascal_matrix(2 * n + 1)[np.ix_(rows, cols)]

def pascal_submatrix_det(n : int, theta : ThetaChoice) -> Fraction:
    '''
    Exact determinant of the (n+1) x (n+1) binomial submatrix. It is positive
    whenever ``lstp_index_check`` holds.
    '''
    return Fraction(bareiss_det(pascal_submatrix(n, theta)))

def lstp_index_check(n : int, theta : ThetaChoice):
    '''
    - Returns:
        - (ok, rows, cols) where ok tells whether j_i >= l_i for every i, with \
            rows j_1 < j_2 < ... and columns l_1 < l_2 < ...
    '''
    rows = lemma4_rows(n, theta)
    cols = lemma4_columns(n)
    ok = len(rows) == len(cols) and all(j >= l for j, l in zip(rows, cols))
    return ok, rows, cols

def cumulant_ratio(m : int) -> Fraction:
    '''
    b_m with kappa_{2m} = b_m kappa_2^m for the cumulants of the constants,
    from kappa_{2m} = (2m-1)! zeta(2m).
    '''
    return factorial(2 * m - 1) * even_zeta_coeff(m)

def bell_jacobian_at_Kstar(n : int, theta : ThetaChoice) -> np.ndarray:
    '''
    d gamma^(j) / d kappa_l for the rows and columns of ``pascal_submatrix``,
    built from the complete Bell polynomials with the chain rule through
    kappa_{2m} = b_m kappa_2^m, then evaluated at kappa_1 = 1 and every other
    free cumulant 0.

    - Raises:
        - ``IdentityViolation`` if the result differs from [C(j, l)]
    '''
    rows = lemma4_rows(n, theta)
    cols = lemma4_columns(n)
    kappa_2 = Poly.var(kappa_var(2))
    constrained = {kappa_var(2 * m): kappa_2 ** m * cumulant_ratio(m) for m in range(2, n + 1)}
    at_kstar = {kappa_var(ell): (1 if ell == 1 else 0) for ell in range(1, 2 * n + 1)}

    J = np.empty((len(rows), len(cols)), dtype = object)
    for a, j in enumerate(rows):
        moment = moment_from_cumulants(j)
        for b, ell in enumerate(cols):
            d = moment.partial_derivative(kappa_var(ell))
            if ell == 2:
                for m in range(2, n + 1):
                    chain = kappa_2 ** (m - 1) * (m * cumulant_ratio(m))
                    d = d + moment.partial_derivative(kappa_var(2 * m)) * chain
            J[a, b] = d.substitute(constrained).evaluate(at_kstar)

    expected = pascal_submatrix(n, theta)
    mismatches = [(rows[a], cols[b]) for a in range(len(rows)) for b in range(len(cols))
                  if J[a, b] != expected[a, b]]
    if mismatches:
        logger.error(f'Cumulant Jacobian for n = {n}, theta = {theta} differs at {mismatches}')
        raise IdentityViolation(f'Cumulant Jacobian is not the Pascal submatrix at {mismatches}')
    return J
