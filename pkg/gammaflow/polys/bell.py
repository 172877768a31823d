from __future__ import print_function
from __future__ import division
from __future__ import absolute_import

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache

from ..exact.combinatorics import binomial, factorial, even_zeta_coeff
from .poly import Poly, ZETA_VAR, gamma_var, kappa_var, zeta_var

def _check_positive(name, value, least = 1):
    if not isinstance(value, int) or value < least:
        raise ValueError(f'{name} must be an integer >= {least}, got {value!r}')

@lru_cache(maxsize = None)
def _bell(n):
    if n == 0:
        return Poly.const(1)
    acc = Poly()
    for j in range(n):
        acc = acc + Poly.var(kappa_var(n - j)) * _bell(j) * binomial(n - 1, j)
    return acc

def moment_from_cumulants(n : int) -> Poly:
    '''
    Complete Bell polynomial B_n(kappa_1, ..., kappa_n), the n-th raw moment in
    terms of cumulants, from E[X^n] = sum_j C(n-1, j) kappa_{n-j} E[X^j].
    '''
    _check_positive('n', n)
    return _bell(n)

@lru_cache(maxsize = None)
def _cumulant(ell):
    moment = lambda j: Poly.var(gamma_var(j))
    acc = moment(ell)
    for i in range(ell - 1):
        acc = acc - _cumulant(i + 1) * moment(ell - i - 1) * binomial(ell - 1, i)
    return acc

def cumulant_from_moments(ell : int) -> Poly:
    '''
    kappa_ell as a polynomial in the raw moments gamma^(1), ..., gamma^(ell):

    kappa_ell = m_ell - sum_{i=0}^{ell-2} C(ell-1, i) kappa_{i+1} m_{ell-i-1}
    '''
    _check_positive('ell', ell)
    return _cumulant(ell)

@lru_cache(maxsize = None)
def _zeta_poly(ell):
    return _cumulant(ell) / factorial(ell - 1)

def zeta_poly(ell : int) -> Poly:
    '''
    zeta(ell) = kappa_ell / (ell-1)! as a polynomial in gamma, ..., gamma^(ell).
    '''
    _check_positive('ell', ell, 2)
    return _zeta_poly(ell)

def _even_zeta_weight(m):
    return Fraction(1) if m == 1 else even_zeta_coeff(m)

def reduce_even_zetas(p : Poly) -> Poly:
    '''
    Rewrites every product of even zeta values as one even zeta value using
    zeta(2a) zeta(2b) = (b_a b_b / b_{a+b}) zeta(2a + 2b).
    '''
    out = defaultdict(Fraction)
    for mono, coef in p.items():
        half = 0
        factor = Fraction(1)
        kept = []
        for v, e in mono:
            if v.kind == ZETA_VAR and v.index % 2 == 0:
                half += (v.index // 2) * e
                factor *= _even_zeta_weight(v.index // 2) ** e
            else:
                kept.append((v, e))
        if half:
            factor /= _even_zeta_weight(half)
            kept.append((zeta_var(2 * half), 1))
        reduced = Poly.monomial(kept, coef * factor)
        for m, c in reduced.items():
            out[m] += c
    return Poly(out)

@lru_cache(maxsize = None)
def _gamma_poly(n):
    mapping = {kappa_var(1): Poly.var(gamma_var(1))}
    for ell in range(2, n + 1):
        mapping[kappa_var(ell)] = Poly.var(zeta_var(ell)) * factorial(ell - 1)
    return reduce_even_zetas(_bell(n).substitute(mapping))

def gamma_poly(n : int) -> Poly:
    '''
    gamma^(n) as a polynomial in gamma and the symbols zeta(2), ..., zeta(n),
    obtained with kappa_1 = gamma and kappa_ell = (ell-1)! zeta(ell). Products
    of even zeta values are folded into a single even zeta value.
    '''
    _check_positive('n', n)
    return _gamma_poly(n)
